#ifndef CYCO_NAMES_HPP
#define CYCO_NAMES_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyco {

// Entry names are plain identifiers. Ordering is "natural": the trailing
// decimal suffix compares numerically, so x2 < x10 and x#1 < x#2.
using VarName = std::string;

struct TypeError : std::runtime_error {
  explicit TypeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NatLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

using FinSet = std::set<VarName, NatLess>;

FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_minus(const FinSet& a, const VarName& x);
bool disjoint(const FinSet& a, const FinSet& b);
std::string print_finset(const FinSet& s);

// A bijection between finite name sets. The map runs new-to-old: [u->x]
// reads "sigma(u) = x", matching the contravariant convention where
// sigma : Y -> X relabels an operation of entries X into one of entries Y.
class Bijection {
 public:
  Bijection() = default;
  explicit Bijection(std::map<VarName, VarName, NatLess> map);

  static Bijection identity(const FinSet& xs);
  // X\{oldv} u {newv} -> X, sending newv to oldv and fixing the rest.
  static Bijection renaming(const FinSet& xs, const VarName& oldv, const VarName& newv);

  const std::map<VarName, VarName, NatLess>& pairs() const { return map_; }
  FinSet dom() const;
  FinSet cod() const;
  bool is_identity() const;
  bool defined_on(const VarName& v) const { return map_.count(v) != 0; }
  VarName apply(const VarName& v) const;
  VarName preimage(const VarName& v) const;

  Bijection inverse() const;
  // this o other, requires cod(other) = dom(this).
  Bijection compose(const Bijection& other) const;
  // Corestriction sigma|^Y : sigma^{-1}(Y) -> Y, requires Y subset of cod.
  Bijection restrict_core(const FinSet& ys) const;
  Bijection disjoint_union(const Bijection& other) const;

  bool operator==(const Bijection& o) const { return map_ == o.map_; }
  bool operator!=(const Bijection& o) const { return map_ != o.map_; }

 private:
  std::map<VarName, VarName, NatLess> map_;  // new -> old
};

std::string print_bijection(const Bijection& b);

// Deterministic fresh-name choice: base itself if admissible, else
// base#1, base#2, ... first suffix avoiding the given set.
VarName fresh_name(const VarName& base, const FinSet& avoid);

}  // namespace cyco

#endif
