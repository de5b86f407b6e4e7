#include "cyco/alpha.hpp"

#include <functional>

#include "cyco/reduce1.hpp"
#include "cyco/units.hpp"

namespace cyco {

namespace {

// A one-point renaming tau : X\{old} u {new} -> X; returns (old, new).
std::pair<VarName, VarName> renamed_pair(const Bijection& tau) {
  VarName oldv, newv;
  int moved = 0;
  for (const auto& [k, v] : tau.pairs()) {
    if (k != v) {
      ++moved;
      newv = k;
      oldv = v;
    }
  }
  if (moved > 1) throw TypeError("substitution decoration moves more than one entry");
  return {oldv, newv};
}

int count_leaves_named(const ObjPtr& w, const std::string& name) {
  int n = 0;
  for (const auto& l : obj_leaves(w))
    if (l->param == name) ++n;
  return n;
}

// Substitute at the unique leaf with the given base name, renaming the
// enclosing composition index where the entry is composed.
std::pair<ObjPtr, bool> subst_leaf_rec(const ObjPtr& w, const std::string& leaf,
                                       const VarName& oldv, const VarName& newv) {
  switch (w->kind) {
    case Obj::Kind::Param: {
      if (w->param != leaf) return {w, false};
      Bijection tau = Bijection::renaming(w->dec.dom(), oldv, newv);
      return {mk_param(w->param, w->dec.compose(tau)), true};
    }
    case Obj::Kind::Comp: {
      auto [l, fl] = subst_leaf_rec(w->left, leaf, oldv, newv);
      if (fl) {
        VarName x = (w->x == oldv) ? newv : w->x;
        return {mk_comp(l, x, w->y, w->right), true};
      }
      auto [r, fr] = subst_leaf_rec(w->right, leaf, oldv, newv);
      if (fr) {
        VarName y = (w->y == oldv) ? newv : w->y;
        return {mk_comp(w->left, w->x, y, r), true};
      }
      return {w, false};
    }
    default:
      throw TypeError("substitution applies to symmetry-free terms only");
  }
}

}  // namespace

ObjPtr substitute_param(const ObjPtr& w, const std::string& leaf, const Bijection& tau) {
  int n = count_leaves_named(w, leaf);
  if (n == 0) throw TypeError("parameter " + leaf + " does not occur");
  if (n > 1) throw TypeError("parameter " + leaf + " occurs more than once");
  auto [oldv, newv] = renamed_pair(tau);
  if (oldv == newv) return w;
  if (obj_all_vars(w).count(newv))
    throw TypeError("substitution name " + newv + " clashes in " + print_object(w));
  auto [res, found] = subst_leaf_rec(w, leaf, oldv, newv);
  (void)found;
  return res;
}

ObjPtr subst_entry(const ObjPtr& w, const VarName& oldv, const VarName& newv) {
  if (oldv == newv) return w;
  switch (w->kind) {
    case Obj::Kind::Param: {
      Bijection tau = Bijection::renaming(w->dec.dom(), oldv, newv);
      return mk_param(w->param, w->dec.compose(tau));
    }
    case Obj::Kind::Comp: {
      // oldv comes from the left iff it is an entry of the left subterm's
      // type minus the composed index.
      std::function<FinSet(const ObjPtr&)> ty = [&](const ObjPtr& t) -> FinSet {
        if (t->kind == Obj::Kind::Param) return t->dec.dom();
        FinSet a = ty(t->left), b = ty(t->right);
        return set_union(set_minus(a, t->x), set_minus(b, t->y));
      };
      FinSet L = ty(w->left);
      if (L.count(oldv) && oldv != w->x)
        return mk_comp(subst_entry(w->left, oldv, newv), w->x, w->y, w->right);
      FinSet R = ty(w->right);
      if (R.count(oldv) && oldv != w->y)
        return mk_comp(w->left, w->x, w->y, subst_entry(w->right, oldv, newv));
      throw TypeError("entry " + oldv + " is not free in " + print_object(w));
    }
    default:
      throw TypeError("substitution applies to symmetry-free terms only");
  }
}

namespace {

bool arrow_has_leaf(const ArrowPtr& f, const std::string& leaf) {
  for (const auto& o : f->objs)
    if (count_leaves_named(o, leaf) > 0) return true;
  if (f->a && arrow_has_leaf(f->a, leaf)) return true;
  if (f->b && arrow_has_leaf(f->b, leaf)) return true;
  return false;
}

ArrowPtr subst_arrow_rec(const ArrowPtr& f, const std::string& leaf, const VarName& oldv,
                         const VarName& newv) {
  auto sub_obj = [&](const ObjPtr& o) { return subst_leaf_rec(o, leaf, oldv, newv).first; };
  auto ren = [&](const VarName& v, bool owner) { return owner && v == oldv ? newv : v; };
  switch (f->kind) {
    case AK::Id:
      return mk_id(sub_obj(f->objs[0]));
    case AK::Beta:
    case AK::BetaInv: {
      bool c1 = count_leaves_named(f->objs[0], leaf) > 0;
      bool c2 = count_leaves_named(f->objs[1], leaf) > 0;
      bool c3 = count_leaves_named(f->objs[2], leaf) > 0;
      return mk_beta(sub_obj(f->objs[0]), sub_obj(f->objs[1]), sub_obj(f->objs[2]),
                     ren(f->vars[0], c1), ren(f->vars[1], c2), ren(f->vars[2], c2),
                     ren(f->vars[3], c3), f->kind == AK::BetaInv);
    }
    case AK::Gamma: {
      bool c1 = count_leaves_named(f->objs[0], leaf) > 0;
      bool c2 = count_leaves_named(f->objs[1], leaf) > 0;
      return mk_gamma(sub_obj(f->objs[0]), sub_obj(f->objs[1]), ren(f->vars[0], c1),
                      ren(f->vars[1], c2));
    }
    case AK::VComp:
      return mk_vcomp(subst_arrow_rec(f->a, leaf, oldv, newv),
                      subst_arrow_rec(f->b, leaf, oldv, newv));
    case AK::HComp: {
      bool cl = arrow_has_leaf(f->a, leaf);
      bool cr = arrow_has_leaf(f->b, leaf);
      return mk_hcomp(subst_arrow_rec(f->a, leaf, oldv, newv), ren(f->vars[0], cl),
                      ren(f->vars[1], cr), subst_arrow_rec(f->b, leaf, oldv, newv));
    }
    default:
      throw TypeError("arrow substitution applies to symmetry-free arrow terms only");
  }
}

}  // namespace

ArrowPtr substitute_param_arrow(const ArrowPtr& f, const std::string& leaf, const Bijection& tau,
                                const Signature& sig) {
  (void)sig;
  auto [oldv, newv] = renamed_pair(tau);
  if (oldv == newv) return f;
  return subst_arrow_rec(f, leaf, oldv, newv);
}

namespace {

// Renaming the interface pair routes through globally fresh names: a
// derivation may reuse a name freed by an earlier step, so renaming directly
// to the target names can collide inside a leaf even for equivalent terms.
bool alpha_rec(const ObjPtr& u, const ObjPtr& v, const Signature& sig) {
  if (u->kind != v->kind) return false;
  if (u->kind == Obj::Kind::Param) return u->param == v->param && u->dec == v->dec;

  if (u->x == v->x && u->y == v->y)
    return alpha_rec(u->left, v->left, sig) && alpha_rec(u->right, v->right, sig);

  // Legality of the final renaming step: the target names must be fresh for
  // the (derivation-invariant) remainder entry sets.
  FinSet Xr = set_minus(typecheck_object(u->left, sig), u->x);
  FinSet Yr = set_minus(typecheck_object(u->right, sig), u->y);
  const VarName& xp = v->x;
  const VarName& yp = v->y;
  if (xp == yp) return false;
  if (Xr.count(xp) || Yr.count(xp)) return false;
  if (Xr.count(yp) || Yr.count(yp)) return false;

  FinSet avoid = set_union(obj_all_vars(u), obj_all_vars(v));
  VarName t1 = fresh_name("t", avoid);
  avoid.insert(t1);
  VarName t2 = fresh_name("t", avoid);
  ObjPtr ul = subst_entry(u->left, u->x, t1);
  ObjPtr ur = subst_entry(u->right, u->y, t2);
  ObjPtr vl = subst_entry(v->left, v->x, t1);
  ObjPtr vr = subst_entry(v->right, v->y, t2);
  return alpha_rec(ul, vl, sig) && alpha_rec(ur, vr, sig);
}

}  // namespace

bool alpha_eq(const ObjPtr& u, const ObjPtr& v, const Signature& sig) {
  if (!is_sym_free(u) || !is_sym_free(v))
    throw TypeError("alpha-equivalence is defined on symmetry-free terms");
  if (typecheck_object(u, sig) != typecheck_object(v, sig)) return false;
  return alpha_rec(u, v, sig);
}

namespace {

// The leaf (base name) contributing a free entry of w.
std::string leaf_of_free(const ObjPtr& w, const VarName& v, const Signature& sig) {
  if (w->kind == Obj::Kind::Param) return w->param;
  FinSet L = typecheck_object(w->left, sig);
  if (L.count(v) && v != w->x) return leaf_of_free(w->left, v, sig);
  return leaf_of_free(w->right, v, sig);
}

// One renaming step at the root: the displayed composite
// (eps_{W1^{s1}} x'<>y' eps_{W2^{s2}}) o eps4 o eps2inv. Returns the arrow
// and its target.
std::pair<ArrowPtr, ObjPtr> root_step(const ObjPtr& u, const VarName& xp, const VarName& yp,
                                      const Signature& sig) {
  FinSet T = typecheck_object(u, sig);
  ArrowPtr e2i = mk_eps2(u, /*inverse=*/true);
  ArrowPtr e4 = mk_eps4(u->left, u->right, u->x, u->y, xp, yp, Bijection::identity(T));
  FinSet X = typecheck_object(u->left, sig);
  FinSet Y = typecheck_object(u->right, sig);
  auto [s1, s2] = eps4_split(Bijection::identity(T), X, u->x, xp, Y, u->y, yp);
  ArrowPtr wl = nf_object_arrow(mk_act(u->left, s1), sig);
  ArrowPtr wr = nf_object_arrow(mk_act(u->right, s2), sig);
  ObjPtr ml = typecheck_arrow(wl, sig).tgt;
  ObjPtr mr = typecheck_arrow(wr, sig).tgt;
  return {mk_seq({e2i, e4, mk_hcomp(wl, xp, yp, wr)}), mk_comp(ml, xp, yp, mr)};
}

// Renames every composed interface pair to fresh names drawn from a shared
// counter; alpha-equivalent terms canonize to literally equal terms when the
// counter sequences align. A derivation may reuse freed names in an order
// the naive outside-in renaming cannot replay, so the witness goes through
// this all-fresh form on both sides.
struct Canonizer {
  const Signature& sig;
  FinSet avoid;
  int next = 1;

  VarName fresh() {
    VarName v;
    do {
      v = "w#" + std::to_string(next++);
    } while (avoid.count(v));
    avoid.insert(v);
    return v;
  }

  std::pair<ArrowPtr, ObjPtr> go(const ObjPtr& u) {
    if (u->kind != Obj::Kind::Comp) return {mk_id(u), u};
    auto [al, cl] = go(u->left);
    auto [ar, cr] = go(u->right);
    ObjPtr mid = mk_comp(cl, u->x, u->y, cr);
    ArrowPtr amid = mk_hcomp(al, u->x, u->y, ar);
    VarName n1 = fresh();
    VarName n2 = fresh();
    auto [step, tgt] = root_step(mid, n1, n2, sig);
    return {mk_vcomp(amid, step), tgt};
  }
};

}  // namespace

ArrowPtr alpha_witness(const ObjPtr& u, const ObjPtr& v, const Signature& sig) {
  if (!alpha_eq(u, v, sig))
    throw TypeError("witness requested for non-alpha-equivalent terms:\n  " + print_object(u) +
                    "\n  " + print_object(v));
  if (obj_equal(u, v)) return mk_id(u);
  FinSet avoid = set_union(obj_all_vars(u), obj_all_vars(v));
  Canonizer cu{sig, avoid};
  auto [au, tu] = cu.go(u);
  Canonizer cv{sig, avoid};
  auto [av, tv] = cv.go(v);
  if (!obj_equal(tu, tv))
    throw TypeError("witness: canonical forms disagree:\n  " + print_object(tu) + "\n  " +
                    print_object(tv));
  return mk_vcomp(au, invert_eps(av));
}

bool leaf_vars_disjoint(const ObjPtr& w) {
  FinSet seen;
  for (const auto& l : obj_leaves(w)) {
    for (const auto& v : l->dec.dom()) {
      if (seen.count(v)) return false;
      seen.insert(v);
    }
  }
  return true;
}

}  // namespace cyco
