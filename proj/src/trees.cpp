#include "cyco/trees.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "cyco/alpha.hpp"

namespace cyco {

FinSet UnrootedTree::all_half_edges() const {
  FinSet r;
  for (const auto& c : cors) r = set_union(r, c.half_edges());
  return r;
}

FinSet UnrootedTree::fv() const {
  FinSet r;
  for (const auto& [k, v] : inv)
    if (k == v) r.insert(k);
  return r;
}

VarName UnrootedTree::mate(const VarName& v) const {
  auto it = inv.find(v);
  if (it == inv.end()) throw TypeError("half-edge " + v + " not in tree");
  return it->second;
}

int UnrootedTree::corolla_index_of(const VarName& half) const {
  for (size_t i = 0; i < cors.size(); ++i)
    if (cors[i].half_edges().count(half)) return static_cast<int>(i);
  throw TypeError("half-edge " + half + " not in any corolla");
}

const Corolla& UnrootedTree::corolla(const std::string& param) const {
  for (const auto& c : cors)
    if (c.param == param) return c;
  throw TypeError("corolla " + param + " not in tree");
}

bool UnrootedTree::has_corolla(const std::string& param) const {
  for (const auto& c : cors)
    if (c.param == param) return true;
  return false;
}

std::vector<std::pair<VarName, VarName>> UnrootedTree::edges() const {
  std::vector<std::pair<VarName, VarName>> out;
  NatLess lt;
  for (const auto& [k, v] : inv) {
    if (k == v) continue;
    if (lt(k, v)) out.emplace_back(k, v);
  }
  return out;
}

bool tree_equal(const UnrootedTree& a, const UnrootedTree& b) {
  if (a.inv != b.inv) return false;
  if (a.cors.size() != b.cors.size()) return false;
  auto key = [](const Corolla& c) { return c.param + print_bijection(c.dec); };
  std::set<std::string> ka, kb;
  for (const auto& c : a.cors) ka.insert(key(c));
  for (const auto& c : b.cors) kb.insert(key(c));
  return ka == kb;
}

std::string print_tree(const UnrootedTree& t) {
  std::vector<const Corolla*> cs;
  for (const auto& c : t.cors) cs.push_back(&c);
  std::sort(cs.begin(), cs.end(),
            [](const Corolla* a, const Corolla* b) { return a->param < b->param; });
  std::string out = "tree{ ";
  bool first = true;
  for (const auto* c : cs) {
    if (!first) out += "; ";
    first = false;
    out += c->param;
    if (!c->dec.is_identity()) out += "^" + print_bijection(c->dec);
    out += "(";
    bool fv = true;
    for (const auto& v : c->half_edges()) {
      if (!fv) out += ",";
      fv = false;
      out += v;
    }
    out += ")";
  }
  out += " | ";
  first = true;
  for (const auto& [u, v] : t.edges()) {
    if (!first) out += ", ";
    first = false;
    out += u + "-" + v;
  }
  out += " }";
  return out;
}

namespace {

// Corolla adjacency; returns (number of cross edges, connectedness of sub).
bool connected_subset(const UnrootedTree& t, const std::set<int>& subset) {
  if (subset.empty()) return false;
  std::set<int> seen;
  std::queue<int> q;
  q.push(*subset.begin());
  seen.insert(*subset.begin());
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (const auto& h : t.cors[i].half_edges()) {
      VarName m = t.mate(h);
      if (m == h) continue;
      int j = t.corolla_index_of(m);
      if (subset.count(j) && !seen.count(j)) {
        seen.insert(j);
        q.push(j);
      }
    }
  }
  return seen.size() == subset.size();
}

}  // namespace

void validate_tree(const UnrootedTree& t, const Signature& sig) {
  if (t.cors.empty()) throw TypeError("tree has no corollas");
  FinSet seen;
  std::set<std::string> names;
  for (const auto& c : t.cors) {
    if (!names.insert(c.param).second)
      throw TypeError("corolla " + c.param + " occurs twice");
    const Parameter& base = sig.lookup(c.param);
    if (c.dec.cod() != base.fv)
      throw TypeError("corolla decoration mismatch on " + c.param);
    for (const auto& h : c.half_edges()) {
      if (seen.count(h)) throw TypeError("half-edge " + h + " occurs twice");
      seen.insert(h);
    }
  }
  if (t.inv.size() != seen.size()) throw TypeError("involution domain mismatch");
  for (const auto& [k, v] : t.inv) {
    if (!seen.count(k) || !seen.count(v)) throw TypeError("involution off the half-edge set");
    if (t.mate(v) != k) throw TypeError("involution is not an involution at " + k);
    if (k != v && t.corolla_index_of(k) == t.corolla_index_of(v))
      throw TypeError("loop at corolla of " + k);
  }
  // No multiple edges.
  std::set<std::pair<int, int>> pairs;
  size_t edge_count = 0;
  for (const auto& [u, v] : t.edges()) {
    ++edge_count;
    int i = t.corolla_index_of(u), j = t.corolla_index_of(v);
    auto p = std::minmax(i, j);
    if (!pairs.insert({p.first, p.second}).second)
      throw TypeError("multiple edges between corollas");
  }
  if (edge_count != t.cors.size() - 1) throw TypeError("tree is not acyclic/connected");
  std::set<int> all;
  for (size_t i = 0; i < t.cors.size(); ++i) all.insert(static_cast<int>(i));
  if (!connected_subset(t, all)) throw TypeError("tree is not connected");
}

std::pair<UnrootedTree, UnrootedTree> decompose(const UnrootedTree& t,
                                                const std::pair<VarName, VarName>& edge) {
  const VarName& a = edge.first;
  const VarName& b = edge.second;
  if (!t.inv.count(a) || t.mate(a) != b || a == b)
    throw TypeError("not an edge: " + a + "-" + b);
  // Cut the edge, then collect components.
  std::map<VarName, VarName, NatLess> cut = t.inv;
  cut[a] = a;
  cut[b] = b;
  UnrootedTree tc{t.cors, cut};
  std::set<int> compA;
  std::queue<int> q;
  q.push(tc.corolla_index_of(a));
  compA.insert(tc.corolla_index_of(a));
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (const auto& h : tc.cors[i].half_edges()) {
      VarName m = tc.mate(h);
      if (m == h) continue;
      int j = tc.corolla_index_of(m);
      if (!compA.count(j)) {
        compA.insert(j);
        q.push(j);
      }
    }
  }
  UnrootedTree t1, t2;
  for (size_t i = 0; i < t.cors.size(); ++i) {
    if (compA.count(static_cast<int>(i)))
      t1.cors.push_back(t.cors[i]);
    else
      t2.cors.push_back(t.cors[i]);
  }
  for (const auto& c : t1.cors)
    for (const auto& h : c.half_edges()) t1.inv[h] = cut.at(h);
  for (const auto& c : t2.cors)
    for (const auto& h : c.half_edges()) t2.inv[h] = cut.at(h);
  if (t2.cors.empty()) throw TypeError("edge does not decompose the tree");
  return {t1, t2};
}

// ---------------------------------------------------------------------------

PWPtr pw_leaf(const std::string& p) {
  auto w = std::make_shared<PW>();
  w->is_leaf = true;
  w->param = p;
  return w;
}

PWPtr pw_pair(PWPtr l, PWPtr r) {
  auto w = std::make_shared<PW>();
  w->is_leaf = false;
  w->l = std::move(l);
  w->r = std::move(r);
  return w;
}

bool pw_equal(const PWPtr& a, const PWPtr& b) {
  if (a->is_leaf != b->is_leaf) return false;
  if (a->is_leaf) return a->param == b->param;
  return pw_equal(a->l, b->l) && pw_equal(a->r, b->r);
}

namespace {

std::string pw_sub(const PWPtr& w) {
  if (w->is_leaf) return w->param;
  return "(" + print_pword(w) + ")";
}

}  // namespace

std::string print_pword(const PWPtr& w) {
  if (w->is_leaf) return w->param;
  std::string l = pw_sub(w->l), r = pw_sub(w->r);
  bool both_leaves = w->l->is_leaf && w->r->is_leaf;
  return l + (both_leaves ? " " : "") + r;
}

std::vector<std::string> pw_letters(const PWPtr& w) {
  std::vector<std::string> out;
  std::function<void(const PWPtr&)> go = [&](const PWPtr& t) {
    if (t->is_leaf)
      out.push_back(t->param);
    else {
      go(t->l);
      go(t->r);
    }
  };
  go(w);
  return out;
}

namespace {

// Induced subtree on a letter set; throws if disconnected or letters unknown.
UnrootedTree induced(const UnrootedTree& t, const std::vector<std::string>& letters) {
  std::set<int> idx;
  for (const auto& p : letters) {
    bool found = false;
    for (size_t i = 0; i < t.cors.size(); ++i)
      if (t.cors[i].param == p) {
        idx.insert(static_cast<int>(i));
        found = true;
      }
    if (!found) throw TypeError("word letter " + p + " is not a corolla of the tree");
  }
  UnrootedTree s;
  for (int i : idx) s.cors.push_back(t.cors[i]);
  for (const auto& c : s.cors) {
    for (const auto& h : c.half_edges()) {
      VarName m = t.mate(h);
      if (m != h && idx.count(t.corolla_index_of(m)))
        s.inv[h] = m;
      else
        s.inv[h] = h;
    }
  }
  return s;
}

bool is_connected_tree(const UnrootedTree& s) {
  std::set<int> all;
  for (size_t i = 0; i < s.cors.size(); ++i) all.insert(static_cast<int>(i));
  return connected_subset(s, all);
}

// Cross edges between the two corolla sets of t.
std::vector<std::pair<VarName, VarName>> cross_edges(const UnrootedTree& t,
                                                     const std::set<std::string>& left) {
  std::vector<std::pair<VarName, VarName>> out;
  for (const auto& [u, v] : t.edges()) {
    bool lu = left.count(t.cors[t.corolla_index_of(u)].param) != 0;
    bool lv = left.count(t.cors[t.corolla_index_of(v)].param) != 0;
    if (lu != lv) out.emplace_back(lu ? u : v, lu ? v : u);  // left half first
  }
  return out;
}

bool has_repeats(const std::vector<std::string>& xs) {
  std::set<std::string> s(xs.begin(), xs.end());
  return s.size() != xs.size();
}

}  // namespace

WordSplit split_by_word(const UnrootedTree& t, const PWPtr& w1, const PWPtr& w2) {
  auto L1 = pw_letters(w1), L2 = pw_letters(w2);
  std::set<std::string> left(L1.begin(), L1.end());
  auto cross = cross_edges(t, left);
  if (cross.size() != 1) throw TypeError("word split does not match a decomposition");
  UnrootedTree t1 = induced(t, L1);
  UnrootedTree t2 = induced(t, L2);
  if (!is_connected_tree(t1) || !is_connected_tree(t2))
    throw TypeError("word split components are not connected");
  return {t1, t2, cross[0].first, cross[0].second};
}

bool admissible(const UnrootedTree& t, const PWPtr& w) {
  auto letters = pw_letters(w);
  if (has_repeats(letters)) return false;
  std::set<std::string> ls(letters.begin(), letters.end());
  std::set<std::string> cs;
  for (const auto& c : t.cors) cs.insert(c.param);
  if (ls != cs) return false;
  if (w->is_leaf) return t.cors.size() == 1;
  auto L1 = pw_letters(w->l);
  std::set<std::string> left(L1.begin(), L1.end());
  if (cross_edges(t, left).size() != 1) return false;
  UnrootedTree t1 = induced(t, L1);
  UnrootedTree t2 = induced(t, pw_letters(w->r));
  if (!is_connected_tree(t1) || !is_connected_tree(t2)) return false;
  return admissible(t1, w->l) && admissible(t2, w->r);
}

bool rooted_admissible(const UnrootedTree& t, const VarName& x, const PWPtr& w) {
  if (!t.fv().count(x)) throw TypeError("root " + x + " is not free in the tree");
  if (w->is_leaf) return t.cors.size() == 1 && admissible(t, w);
  if (!admissible(t, w)) return false;
  auto L1 = pw_letters(w->l);
  std::set<std::string> left(L1.begin(), L1.end());
  auto cross = cross_edges(t, left);
  if (cross.size() != 1) return false;
  UnrootedTree t1 = induced(t, L1);
  UnrootedTree t2 = induced(t, pw_letters(w->r));
  // The root must lie on the first factor's side.
  if (!t1.fv().count(x)) return false;
  return rooted_admissible(t1, x, w->l) && rooted_admissible(t2, cross[0].second, w->r);
}

std::pair<FinSet, VarName> in_out(const UnrootedTree& t, const VarName& x,
                                  const std::vector<std::string>& sub_corollas) {
  if (!t.fv().count(x)) throw TypeError("root " + x + " is not free in the tree");
  UnrootedTree s = induced(t, sub_corollas);
  if (!is_connected_tree(s)) throw TypeError("not a subtree");
  FinSet sfv = s.fv();
  std::set<std::string> sub(sub_corollas.begin(), sub_corollas.end());
  int root_cor = t.corolla_index_of(x);
  if (sub.count(t.cors[root_cor].param)) return {set_minus(sfv, x), x};
  // BFS from the root corolla; the first half-edge entering the subtree from
  // outside meets it at the subtree's output.
  std::queue<int> q;
  std::set<int> seen;
  std::map<int, VarName> entry;  // corolla -> half-edge by which it was reached
  q.push(root_cor);
  seen.insert(root_cor);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    if (sub.count(t.cors[i].param)) return {set_minus(sfv, entry.at(i)), entry.at(i)};
    for (const auto& h : t.cors[i].half_edges()) {
      VarName m = t.mate(h);
      if (m == h) continue;
      int j = t.corolla_index_of(m);
      if (!seen.count(j)) {
        seen.insert(j);
        entry[j] = m;
        q.push(j);
      }
    }
  }
  throw TypeError("subtree not reachable");
}

// ---------------------------------------------------------------------------

TreeTerm delta_inv(const ObjPtr& w, const Signature& sig) {
  typecheck_object(w, sig);
  if (!is_sym_free(w)) throw TypeError("delta_inv expects a symmetry-free term");
  if (!leaf_vars_disjoint(w))
    throw TypeError("delta_inv: leaf entries are not mutually disjoint");
  UnrootedTree t;
  std::function<PWPtr(const ObjPtr&)> go = [&](const ObjPtr& u) -> PWPtr {
    if (u->kind == Obj::Kind::Param) {
      t.cors.push_back(Corolla{u->param, u->dec});
      for (const auto& h : u->dec.dom()) t.inv[h] = h;
      return pw_leaf(u->param);
    }
    PWPtr l = go(u->left);
    PWPtr r = go(u->right);
    t.inv[u->x] = u->y;
    t.inv[u->y] = u->x;
    return pw_pair(l, r);
  };
  PWPtr word = go(w);
  validate_tree(t, sig);
  return TreeTerm{t, word};
}

ObjPtr delta(const TreeTerm& tt, const Signature& sig) {
  const UnrootedTree& t = tt.tree;
  if (!admissible(t, tt.word)) throw TypeError("word is not admissible for the tree");
  std::function<ObjPtr(const UnrootedTree&, const PWPtr&)> go =
      [&](const UnrootedTree& s, const PWPtr& w) -> ObjPtr {
    if (w->is_leaf) {
      const Corolla& c = s.corolla(w->param);
      return mk_param(c.param, c.dec);
    }
    WordSplit sp = split_by_word(s, w->l, w->r);
    return mk_comp(go(sp.t1, w->l), sp.z, sp.y, go(sp.t2, w->r));
  };
  ObjPtr out = go(t, tt.word);
  typecheck_object(out, sig);
  return out;
}

// ---------------------------------------------------------------------------

WArrowPtr w_id(PWPtr w) {
  auto f = std::make_shared<WArrow>();
  f->kind = WK::Id;
  f->words = {std::move(w)};
  return f;
}

WArrowPtr w_beta(PWPtr w1, PWPtr w2, PWPtr w3, const VarName& z, const VarName& zb,
                 const VarName& y, const VarName& yb, bool inverse) {
  auto f = std::make_shared<WArrow>();
  f->kind = inverse ? WK::BetaInv : WK::Beta;
  f->words = {std::move(w1), std::move(w2), std::move(w3)};
  f->vars = {z, zb, y, yb};
  return f;
}

WArrowPtr w_gamma(PWPtr w1, PWPtr w2, const VarName& z, const VarName& y) {
  auto f = std::make_shared<WArrow>();
  f->kind = WK::Gamma;
  f->words = {std::move(w1), std::move(w2)};
  f->vars = {z, y};
  return f;
}

WArrowPtr w_vcomp(WArrowPtr before, WArrowPtr after) {
  auto f = std::make_shared<WArrow>();
  f->kind = WK::VComp;
  f->a = std::move(before);
  f->b = std::move(after);
  return f;
}

WArrowPtr w_hcomp(WArrowPtr l, const VarName& z, const VarName& y, WArrowPtr r) {
  auto f = std::make_shared<WArrow>();
  f->kind = WK::HComp;
  f->a = std::move(l);
  f->b = std::move(r);
  f->vars = {z, y};
  return f;
}

std::string print_warrow(const WArrowPtr& f) {
  switch (f->kind) {
    case WK::Id:
      return "1(" + print_pword(f->words[0]) + ")";
    case WK::Beta:
    case WK::BetaInv:
      return std::string(f->kind == WK::Beta ? "beta" : "betainv") + "(" + f->vars[0] + "," +
             f->vars[1] + ";" + f->vars[2] + "," + f->vars[3] + " | " +
             print_pword(f->words[0]) + ", " + print_pword(f->words[1]) + ", " +
             print_pword(f->words[2]) + ")";
    case WK::Gamma:
      return "gamma(" + f->vars[0] + "," + f->vars[1] + " | " + print_pword(f->words[0]) + ", " +
             print_pword(f->words[1]) + ")";
    case WK::VComp:
      return print_warrow(f->a) + " ; " + print_warrow(f->b);
    case WK::HComp:
      return "(" + print_warrow(f->a) + " " + f->vars[0] + "<>" + f->vars[1] + " " +
             print_warrow(f->b) + ")";
  }
  return "?";
}

namespace {

PWPtr warrow_src_word(const WArrowPtr& g) {
  switch (g->kind) {
    case WK::Id:
      return g->words[0];
    case WK::Beta:
      return pw_pair(pw_pair(g->words[0], g->words[1]), g->words[2]);
    case WK::BetaInv:
      return pw_pair(g->words[0], pw_pair(g->words[1], g->words[2]));
    case WK::Gamma:
      return pw_pair(g->words[0], g->words[1]);
    case WK::VComp:
      return warrow_src_word(g->a);
    case WK::HComp:
      return pw_pair(warrow_src_word(g->a), warrow_src_word(g->b));
  }
  throw TypeError("bad word arrow");
}

}  // namespace

std::pair<PWPtr, PWPtr> typecheck_warrow(const UnrootedTree& t, const WArrowPtr& f) {
  auto admit = [&](const PWPtr& w) {
    if (!admissible(t, w))
      throw TypeError("word " + print_pword(w) + " not admissible for " + print_tree(t));
  };
  switch (f->kind) {
    case WK::Id: {
      admit(f->words[0]);
      return {f->words[0], f->words[0]};
    }
    case WK::Beta:
    case WK::BetaInv: {
      PWPtr lhs = pw_pair(pw_pair(f->words[0], f->words[1]), f->words[2]);
      PWPtr rhs = pw_pair(f->words[0], pw_pair(f->words[1], f->words[2]));
      admit(lhs);
      admit(rhs);
      // Interface consistency with the tree.
      WordSplit outer = split_by_word(t, lhs->l, lhs->r);
      if (outer.z != f->vars[2] || outer.y != f->vars[3])
        throw TypeError("beta indices do not match the tree edges");
      WordSplit inner = split_by_word(outer.t1, f->words[0], f->words[1]);
      if (inner.z != f->vars[0] || inner.y != f->vars[1])
        throw TypeError("beta indices do not match the tree edges");
      if (f->kind == WK::Beta) return {lhs, rhs};
      return {rhs, lhs};
    }
    case WK::Gamma: {
      PWPtr lhs = pw_pair(f->words[0], f->words[1]);
      PWPtr rhs = pw_pair(f->words[1], f->words[0]);
      admit(lhs);
      WordSplit sp = split_by_word(t, f->words[0], f->words[1]);
      if (sp.z != f->vars[0] || sp.y != f->vars[1])
        throw TypeError("gamma indices do not match the tree edge");
      return {lhs, rhs};
    }
    case WK::VComp: {
      auto [s1, t1] = typecheck_warrow(t, f->a);
      auto [s2, t2] = typecheck_warrow(t, f->b);
      if (!pw_equal(t1, s2)) throw TypeError("vertical composition mismatch over the tree");
      return {s1, t2};
    }
    case WK::HComp: {
      PWPtr wl = warrow_src_word(f->a), wr = warrow_src_word(f->b);
      WordSplit sp = split_by_word(t, wl, wr);
      if (sp.z != f->vars[0] || sp.y != f->vars[1])
        throw TypeError("horizontal composition indices do not match the tree edge");
      auto [s1, t1] = typecheck_warrow(sp.t1, f->a);
      auto [s2, t2] = typecheck_warrow(sp.t2, f->b);
      return {pw_pair(s1, s2), pw_pair(t1, t2)};
    }
  }
  throw TypeError("bad word arrow");
}

WArrowPtr delta_inv_arrow(const ArrowPtr& f, const Signature& sig) {
  std::function<PWPtr(const ObjPtr&)> word = [&](const ObjPtr& w) -> PWPtr {
    if (w->kind == Obj::Kind::Param) return pw_leaf(w->param);
    if (w->kind != Obj::Kind::Comp) throw TypeError("delta_inv_arrow: not symmetry-free");
    return pw_pair(word(w->left), word(w->right));
  };
  std::function<WArrowPtr(const ArrowPtr&)> go = [&](const ArrowPtr& g) -> WArrowPtr {
    switch (g->kind) {
      case AK::Id:
        return w_id(word(g->objs[0]));
      case AK::Beta:
      case AK::BetaInv:
        return w_beta(word(g->objs[0]), word(g->objs[1]), word(g->objs[2]), g->vars[0],
                      g->vars[1], g->vars[2], g->vars[3], g->kind == AK::BetaInv);
      case AK::Gamma:
        return w_gamma(word(g->objs[0]), word(g->objs[1]), g->vars[0], g->vars[1]);
      case AK::VComp:
        return w_vcomp(go(g->a), go(g->b));
      case AK::HComp:
        return w_hcomp(go(g->a), g->vars[0], g->vars[1], go(g->b));
      default:
        throw TypeError("delta_inv_arrow applies to symmetry-free arrow terms");
    }
  };
  (void)sig;
  return go(f);
}

ArrowPtr delta_arrow(const UnrootedTree& t, const WArrowPtr& f, const Signature& sig) {
  std::function<ArrowPtr(const UnrootedTree&, const WArrowPtr&)> go =
      [&](const UnrootedTree& s, const WArrowPtr& g) -> ArrowPtr {
    switch (g->kind) {
      case WK::Id:
        return mk_id(delta(TreeTerm{s, g->words[0]}, sig));
      case WK::Beta:
      case WK::BetaInv: {
        PWPtr lhs = pw_pair(pw_pair(g->words[0], g->words[1]), g->words[2]);
        WordSplit outer = split_by_word(s, lhs->l, lhs->r);
        WordSplit inner = split_by_word(outer.t1, g->words[0], g->words[1]);
        return mk_beta(delta(TreeTerm{inner.t1, g->words[0]}, sig),
                       delta(TreeTerm{inner.t2, g->words[1]}, sig),
                       delta(TreeTerm{outer.t2, g->words[2]}, sig), g->vars[0], g->vars[1],
                       g->vars[2], g->vars[3], g->kind == WK::BetaInv);
      }
      case WK::Gamma: {
        WordSplit sp = split_by_word(s, g->words[0], g->words[1]);
        return mk_gamma(delta(TreeTerm{sp.t1, g->words[0]}, sig),
                        delta(TreeTerm{sp.t2, g->words[1]}, sig), g->vars[0], g->vars[1]);
      }
      case WK::VComp:
        return mk_vcomp(go(s, g->a), go(s, g->b));
      case WK::HComp: {
        WordSplit sp = split_by_word(s, warrow_src_word(g->a), warrow_src_word(g->b));
        return mk_hcomp(go(sp.t1, g->a), g->vars[0], g->vars[1], go(sp.t2, g->b));
      }
    }
    throw TypeError("bad word arrow");
  };
  return go(t, f);
}

}  // namespace cyco
