#include "cyco/reduce2.hpp"

#include <functional>

namespace cyco {

bool rooted_equal(const RootedTerm& a, const RootedTerm& b) {
  return a.root == b.root && tree_equal(a.tree, b.tree) && pw_equal(a.word, b.word);
}

std::string print_rooted(const RootedTerm& t) {
  return print_tree(t.tree) + " @ " + t.root + " : " + print_pword(t.word);
}

void validate_rooted(const RootedTerm& t, const Signature& sig) {
  validate_tree(t.tree, sig);
  if (!rooted_admissible(t.tree, t.root, t.word))
    throw TypeError("word " + print_pword(t.word) + " is not (" + t.root + ")-admissible");
}

RArrowPtr r_id(RootedTerm t) {
  auto f = std::make_shared<RArrow>();
  f->kind = RK::Id;
  f->terms = {std::move(t)};
  return f;
}

RArrowPtr r_beta(RootedTerm t1, RootedTerm t2, RootedTerm t3, const VarName& z, const VarName& y,
                 bool inverse) {
  auto f = std::make_shared<RArrow>();
  f->kind = inverse ? RK::BetaInv : RK::Beta;
  f->terms = {std::move(t1), std::move(t2), std::move(t3)};
  f->vars = {z, y};
  return f;
}

RArrowPtr r_theta(RootedTerm t1, RootedTerm t2, RootedTerm t3, const VarName& z,
                  const VarName& y) {
  auto f = std::make_shared<RArrow>();
  f->kind = RK::Theta;
  f->terms = {std::move(t1), std::move(t2), std::move(t3)};
  f->vars = {z, y};
  return f;
}

RArrowPtr r_vcomp(RArrowPtr before, RArrowPtr after) {
  auto f = std::make_shared<RArrow>();
  f->kind = RK::VComp;
  f->a = std::move(before);
  f->b = std::move(after);
  return f;
}

RArrowPtr r_hcomp(RArrowPtr l, const VarName& z, const VarName& y, RArrowPtr r) {
  auto f = std::make_shared<RArrow>();
  f->kind = RK::HComp;
  f->a = std::move(l);
  f->b = std::move(r);
  f->vars = {z, y};
  return f;
}

std::string print_rarrow(const RArrowPtr& f) {
  switch (f->kind) {
    case RK::Id:
      return "1(" + print_rooted(f->terms[0]) + ")";
    case RK::Beta:
    case RK::BetaInv:
    case RK::Theta: {
      std::string head = f->kind == RK::Beta ? "beta" : (f->kind == RK::BetaInv ? "betainv" : "theta");
      return head + "(" + f->vars[0] + ";" + f->vars[1] + " | " + print_rooted(f->terms[0]) +
             ", " + print_rooted(f->terms[1]) + ", " + print_rooted(f->terms[2]) + ")";
    }
    case RK::VComp:
      return print_rarrow(f->a) + " ; " + print_rarrow(f->b);
    case RK::HComp:
      return "(" + print_rarrow(f->a) + " " + f->vars[0] + "<>" + f->vars[1] + " " +
             print_rarrow(f->b) + ")";
  }
  return "?";
}

namespace {

// Glue two rooted factors along the edge (z, y): z free on the left, y the
// root of the right factor.
UnrootedTree glue(const UnrootedTree& t1, const VarName& z, const VarName& y,
                  const UnrootedTree& t2) {
  UnrootedTree t;
  t.cors = t1.cors;
  t.cors.insert(t.cors.end(), t2.cors.begin(), t2.cors.end());
  t.inv = t1.inv;
  for (const auto& [k, v] : t2.inv) t.inv[k] = v;
  if (t.inv.at(z) != z || t.inv.at(y) != y)
    throw TypeError("gluing along non-free half-edges " + z + "-" + y);
  t.inv[z] = y;
  t.inv[y] = z;
  return t;
}

}  // namespace

std::pair<RootedTerm, RootedTerm> typecheck_rarrow(const RArrowPtr& f, const Signature& sig) {
  switch (f->kind) {
    case RK::Id: {
      validate_rooted(f->terms[0], sig);
      return {f->terms[0], f->terms[0]};
    }
    case RK::Beta:
    case RK::BetaInv:
    case RK::Theta: {
      const RootedTerm& t1 = f->terms[0];
      const RootedTerm& t2 = f->terms[1];
      const RootedTerm& t3 = f->terms[2];
      validate_rooted(t1, sig);
      validate_rooted(t2, sig);
      validate_rooted(t3, sig);
      const VarName& z = f->vars[0];
      const VarName& y = f->vars[1];
      // T = {{T1 (z zb) T2} (y yb) T3}; zb, yb are the factor roots.
      if (!t1.tree.fv().count(z))
        throw TypeError("index " + z + " is not free in the first factor");
      UnrootedTree t12 = glue(t1.tree, z, t2.root, t2.tree);
      if (f->kind == RK::Theta) {
        if (!t1.tree.fv().count(y))
          throw TypeError("theta index " + y + " must be free in the first factor");
      } else {
        if (!t2.tree.fv().count(y))
          throw TypeError("beta index " + y + " must be free in the middle factor");
      }
      UnrootedTree t = glue(t12, y, t3.root, t3.tree);
      validate_tree(t, sig);
      PWPtr w12 = pw_pair(t1.word, t2.word);
      PWPtr lhs = pw_pair(w12, t3.word);
      RootedTerm src{t, t1.root, lhs};
      validate_rooted(src, sig);
      PWPtr rhs;
      if (f->kind == RK::Theta)
        rhs = pw_pair(pw_pair(t1.word, t3.word), t2.word);
      else
        rhs = pw_pair(t1.word, pw_pair(t2.word, t3.word));
      RootedTerm tgt{t, t1.root, rhs};
      validate_rooted(tgt, sig);
      if (f->kind == RK::BetaInv) return {tgt, src};
      return {src, tgt};
    }
    case RK::VComp: {
      auto [s1, t1] = typecheck_rarrow(f->a, sig);
      auto [s2, t2] = typecheck_rarrow(f->b, sig);
      if (!rooted_equal(t1, s2))
        throw TypeError("rooted vertical composition mismatch:\n  " + print_rooted(t1) +
                        "\n  " + print_rooted(s2));
      return {s1, t2};
    }
    case RK::HComp: {
      auto [s1, t1] = typecheck_rarrow(f->a, sig);
      auto [s2, t2] = typecheck_rarrow(f->b, sig);
      const VarName& z = f->vars[0];
      const VarName& y = f->vars[1];
      if (z == s1.root) throw TypeError("horizontal composition at the root");
      if (y != s2.root) throw TypeError("right factor must be rooted at " + y);
      UnrootedTree t = glue(s1.tree, z, y, s2.tree);
      validate_tree(t, sig);
      RootedTerm src{t, s1.root, pw_pair(s1.word, s2.word)};
      RootedTerm tgt{t, s1.root, pw_pair(t1.word, t2.word)};
      validate_rooted(src, sig);
      validate_rooted(tgt, sig);
      return {src, tgt};
    }
  }
  throw TypeError("bad rooted arrow");
}

int count_thetas(const RArrowPtr& f) {
  int n = f->kind == RK::Theta ? 1 : 0;
  if (f->a) n += count_thetas(f->a);
  if (f->b) n += count_thetas(f->b);
  return n;
}

int count_betas_r(const RArrowPtr& f) {
  int n = (f->kind == RK::Beta || f->kind == RK::BetaInv) ? 1 : 0;
  if (f->a) n += count_betas_r(f->a);
  if (f->b) n += count_betas_r(f->b);
  return n;
}

PWPtr rootify_word(const TreeTerm& t, const VarName& x) {
  if (!t.tree.fv().count(x)) throw TypeError("root " + x + " is not free in the tree");
  if (t.word->is_leaf) return t.word;
  WordSplit sp = split_by_word(t.tree, t.word->l, t.word->r);
  if (sp.t1.fv().count(x)) {
    PWPtr w1 = rootify_word(TreeTerm{sp.t1, t.word->l}, x);
    PWPtr w2 = rootify_word(TreeTerm{sp.t2, t.word->r}, sp.y);
    return pw_pair(w1, w2);
  }
  PWPtr w2 = rootify_word(TreeTerm{sp.t2, t.word->r}, x);
  PWPtr w1 = rootify_word(TreeTerm{sp.t1, t.word->l}, sp.z);
  return pw_pair(w2, w1);
}

WArrowPtr kappa(const TreeTerm& t, const VarName& x) {
  if (!t.tree.fv().count(x)) throw TypeError("root " + x + " is not free in the tree");
  if (t.word->is_leaf) return w_id(t.word);
  WordSplit sp = split_by_word(t.tree, t.word->l, t.word->r);
  if (sp.t1.fv().count(x)) {
    WArrowPtr k1 = kappa(TreeTerm{sp.t1, t.word->l}, x);
    WArrowPtr k2 = kappa(TreeTerm{sp.t2, t.word->r}, sp.y);
    return w_hcomp(k1, sp.z, sp.y, k2);
  }
  WArrowPtr g = w_gamma(t.word->l, t.word->r, sp.z, sp.y);
  WArrowPtr k2 = kappa(TreeTerm{sp.t2, t.word->r}, x);
  WArrowPtr k1 = kappa(TreeTerm{sp.t1, t.word->l}, sp.z);
  return w_vcomp(g, w_hcomp(k2, sp.y, sp.z, k1));
}

namespace {

RootedTerm rooted(const UnrootedTree& tree, const PWPtr& w, const VarName& x) {
  return RootedTerm{tree, x, rootify_word(TreeTerm{tree, w}, x)};
}

}  // namespace

RArrowPtr red2(const UnrootedTree& tree, const WArrowPtr& f, const VarName& x) {
  switch (f->kind) {
    case WK::Id:
      return r_id(rooted(tree, f->words[0], x));
    case WK::Beta:
    case WK::BetaInv: {
      bool inv = f->kind == WK::BetaInv;
      const VarName& z = f->vars[0];
      const VarName& zb = f->vars[1];
      const VarName& y = f->vars[2];
      const VarName& yb = f->vars[3];
      PWPtr lhs_l = pw_pair(f->words[0], f->words[1]);
      WordSplit outer = split_by_word(tree, lhs_l, f->words[2]);
      WordSplit inner = split_by_word(outer.t1, f->words[0], f->words[1]);
      const UnrootedTree &T1 = inner.t1, &T2 = inner.t2, &T3 = outer.t2;
      FinSet X1 = T1.fv(), X2 = T2.fv();
      if (X1.count(x)) {
        RootedTerm r1 = rooted(T1, f->words[0], x);
        RootedTerm r2 = rooted(T2, f->words[1], zb);
        RootedTerm r3 = rooted(T3, f->words[2], yb);
        return r_beta(r1, r2, r3, z, y, inv);
      }
      if (X2.count(x)) {
        RootedTerm r2 = rooted(T2, f->words[1], x);
        RootedTerm r1 = rooted(T1, f->words[0], z);
        RootedTerm r3 = rooted(T3, f->words[2], yb);
        if (!inv) return r_theta(r2, r1, r3, zb, y);
        return r_theta(r2, r3, r1, y, zb);
      }
      RootedTerm r3 = rooted(T3, f->words[2], x);
      RootedTerm r2 = rooted(T2, f->words[1], y);
      RootedTerm r1 = rooted(T1, f->words[0], z);
      return r_beta(r3, r2, r1, yb, zb, !inv);
    }
    case WK::Gamma: {
      PWPtr src = pw_pair(f->words[0], f->words[1]);
      return r_id(rooted(tree, src, x));
    }
    case WK::VComp:
      return r_vcomp(red2(tree, f->a, x), red2(tree, f->b, x));
    case WK::HComp: {
      PWPtr src = typecheck_warrow(tree, f).first;
      WordSplit sp = split_by_word(tree, src->l, src->r);
      if (sp.t1.fv().count(x))
        return r_hcomp(red2(sp.t1, f->a, x), f->vars[0], f->vars[1], red2(sp.t2, f->b, f->vars[1]));
      return r_hcomp(red2(sp.t2, f->b, x), f->vars[1], f->vars[0], red2(sp.t1, f->a, f->vars[0]));
    }
  }
  throw TypeError("bad word arrow");
}

}  // namespace cyco
