#include "cyco/names.hpp"

#include <algorithm>
#include <cctype>

namespace cyco {

namespace {

// Split a trailing run of digits off the identifier.
std::pair<std::string_view, long long> split_suffix(const std::string& s) {
  size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  if (i == s.size() || s.size() - i > 12) return {std::string_view(s), -1};
  return {std::string_view(s.data(), i), std::stoll(s.substr(i))};
}

}  // namespace

bool NatLess::operator()(const std::string& a, const std::string& b) const {
  auto [pa, na] = split_suffix(a);
  auto [pb, nb] = split_suffix(b);
  if (pa != pb) return pa < pb;
  if (na != nb) return na < nb;
  return a < b;
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  FinSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

FinSet set_minus(const FinSet& a, const VarName& x) {
  FinSet r = a;
  r.erase(x);
  return r;
}

bool disjoint(const FinSet& a, const FinSet& b) {
  for (const auto& x : a)
    if (b.count(x)) return false;
  return true;
}

std::string print_finset(const FinSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s) {
    if (!first) out += ",";
    out += v;
    first = false;
  }
  out += "}";
  return out;
}

Bijection::Bijection(std::map<VarName, VarName, NatLess> map) : map_(std::move(map)) {
  std::set<VarName, NatLess> seen;
  for (const auto& [k, v] : map_) {
    if (!seen.insert(v).second) throw TypeError("bijection is not injective at " + v);
  }
}

Bijection Bijection::identity(const FinSet& xs) {
  std::map<VarName, VarName, NatLess> m;
  for (const auto& x : xs) m[x] = x;
  return Bijection(std::move(m));
}

Bijection Bijection::renaming(const FinSet& xs, const VarName& oldv, const VarName& newv) {
  if (!xs.count(oldv)) throw TypeError("renaming: " + oldv + " not in " + print_finset(xs));
  if (newv != oldv && xs.count(newv))
    throw TypeError("renaming: " + newv + " already in " + print_finset(xs));
  std::map<VarName, VarName, NatLess> m;
  for (const auto& x : xs)
    if (x != oldv) m[x] = x;
  m[newv] = oldv;
  return Bijection(std::move(m));
}

FinSet Bijection::dom() const {
  FinSet r;
  for (const auto& [k, v] : map_) r.insert(k);
  return r;
}

FinSet Bijection::cod() const {
  FinSet r;
  for (const auto& [k, v] : map_) r.insert(v);
  return r;
}

bool Bijection::is_identity() const {
  for (const auto& [k, v] : map_)
    if (k != v) return false;
  return true;
}

VarName Bijection::apply(const VarName& v) const {
  auto it = map_.find(v);
  if (it == map_.end()) throw TypeError("bijection undefined on " + v);
  return it->second;
}

VarName Bijection::preimage(const VarName& v) const {
  for (const auto& [k, w] : map_)
    if (w == v) return k;
  throw TypeError("bijection has no preimage of " + v);
}

Bijection Bijection::inverse() const {
  std::map<VarName, VarName, NatLess> m;
  for (const auto& [k, v] : map_) m[v] = k;
  return Bijection(std::move(m));
}

Bijection Bijection::compose(const Bijection& other) const {
  if (other.cod() != dom())
    throw TypeError("bijection composition mismatch: cod " + print_finset(other.cod()) +
                    " vs dom " + print_finset(dom()));
  std::map<VarName, VarName, NatLess> m;
  for (const auto& [k, v] : other.map_) m[k] = apply(v);
  return Bijection(std::move(m));
}

Bijection Bijection::restrict_core(const FinSet& ys) const {
  for (const auto& y : ys)
    if (!cod().count(y))
      throw TypeError("corestriction: " + y + " not in codomain " + print_finset(cod()));
  std::map<VarName, VarName, NatLess> m;
  for (const auto& [k, v] : map_)
    if (ys.count(v)) m[k] = v;
  return Bijection(std::move(m));
}

Bijection Bijection::disjoint_union(const Bijection& other) const {
  if (!disjoint(dom(), other.dom()) || !disjoint(cod(), other.cod()))
    throw TypeError("bijection union: domains or codomains overlap");
  std::map<VarName, VarName, NatLess> m = map_;
  for (const auto& [k, v] : other.map_) m[k] = v;
  return Bijection(std::move(m));
}

std::string print_bijection(const Bijection& b) {
  std::string out = "[";
  bool first = true;
  for (const auto& [k, v] : b.pairs()) {
    if (!first) out += ",";
    out += k + "->" + v;
    first = false;
  }
  out += "]";
  return out;
}

VarName fresh_name(const VarName& base, const FinSet& avoid) {
  std::string stem = base;
  auto hash = stem.find('#');
  if (hash != std::string::npos) stem = stem.substr(0, hash);
  if (!avoid.count(base)) return base;
  for (int k = 1;; ++k) {
    VarName cand = stem + "#" + std::to_string(k);
    if (!avoid.count(cand)) return cand;
  }
}

}  // namespace cyco
