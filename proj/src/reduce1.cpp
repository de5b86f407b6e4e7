#include "cyco/reduce1.hpp"

#include <set>

#include "cyco/alpha.hpp"

namespace cyco {

FreshPolicy FreshPolicy::canonical() {
  FreshPolicy p;
  p.pick = [](const VarName& x, const VarName& y, const FinSet& avoid) {
    VarName xp = fresh_name(x, avoid);
    FinSet avoid2 = avoid;
    avoid2.insert(xp);
    VarName yp = fresh_name(y, avoid2);
    return std::make_pair(xp, yp);
  };
  return p;
}

namespace {

struct NfResult {
  ObjPtr term;
  ArrowPtr arrow;  // input -> term, eps generators only
};

// The avoid set of the push-through rule at a composition: the rule's own
// side conditions plus the action domain (so the split stays a bijection).
FinSet eps4_avoid(const FinSet& Xr, const FinSet& Yr, const Bijection& sigma) {
  FinSet avoid = set_union(Xr, Yr);
  return set_union(avoid, sigma.dom());
}

NfResult nf_rec(const ObjPtr& w, const Signature& sig, const FreshPolicy& fresh, int& fuel);

// Act(body, sigma) with all cases of the object rewrite table.
NfResult nf_act(const ObjPtr& body, const Bijection& sigma, const Signature& sig,
                const FreshPolicy& fresh, int& fuel) {
  if (--fuel <= 0) throw TypeError("object normalisation fuel exhausted");
  switch (body->kind) {
    case Obj::Kind::Param: {
      // a^sigma ~> decorated leaf, witnessed by eps1.
      ObjPtr leaf = mk_param(body->param, body->dec.compose(sigma));
      return {leaf, mk_eps1(body, sigma)};
    }
    case Obj::Kind::Act: {
      // (W^s)^t from W^{s o t}, witnessed by eps3.
      Bijection fused = body->act.compose(sigma);
      NfResult inner = nf_act(body->body, fused, sig, fresh, fuel);
      ArrowPtr e3 = mk_eps3(body->body, body->act, sigma);
      return {inner.term, mk_vcomp(e3, inner.arrow)};
    }
    case Obj::Kind::Comp: {
      if (sigma.is_identity()) {
        // W^{id} ~> W, witnessed by eps2.
        NfResult inner = nf_rec(body, sig, fresh, fuel);
        return {inner.term, mk_vcomp(mk_eps2(body), inner.arrow)};
      }
      FinSet X = typecheck_object(body->left, sig);
      FinSet Y = typecheck_object(body->right, sig);
      FinSet Xr = set_minus(X, body->x), Yr = set_minus(Y, body->y);
      auto [xp, yp] = fresh.pick(body->x, body->y, eps4_avoid(Xr, Yr, sigma));
      auto [s1, s2] = eps4_split(sigma, X, body->x, xp, Y, body->y, yp);
      ArrowPtr e4 = mk_eps4(body->left, body->right, body->x, body->y, xp, yp, sigma);
      NfResult l = nf_act(body->left, s1, sig, fresh, fuel);
      NfResult r = nf_act(body->right, s2, sig, fresh, fuel);
      ObjPtr out = mk_comp(l.term, xp, yp, r.term);
      return {out, mk_vcomp(e4, mk_hcomp(l.arrow, xp, yp, r.arrow))};
    }
    case Obj::Kind::Unit:
      throw TypeError("unit term reached the first reduction; run reduction zero first");
  }
  throw TypeError("bad object term");
}

NfResult nf_rec(const ObjPtr& w, const Signature& sig, const FreshPolicy& fresh, int& fuel) {
  if (--fuel <= 0) throw TypeError("object normalisation fuel exhausted");
  switch (w->kind) {
    case Obj::Kind::Param:
      return {w, mk_id(w)};
    case Obj::Kind::Comp: {
      NfResult l = nf_rec(w->left, sig, fresh, fuel);
      NfResult r = nf_rec(w->right, sig, fresh, fuel);
      ObjPtr out = mk_comp(l.term, w->x, w->y, r.term);
      return {out, mk_hcomp(l.arrow, w->x, w->y, r.arrow)};
    }
    case Obj::Kind::Act:
      return nf_act(w->body, w->act, sig, fresh, fuel);
    case Obj::Kind::Unit:
      throw TypeError("unit term reached the first reduction; run reduction zero first");
  }
  throw TypeError("bad object term");
}

constexpr int kFuel = 2'000'000;

}  // namespace

ObjPtr nf_object(const ObjPtr& w, const Signature& sig, const FreshPolicy& fresh) {
  int fuel = kFuel;
  return nf_rec(w, sig, fresh, fuel).term;
}

ArrowPtr nf_object_arrow(const ObjPtr& w, const Signature& sig, const FreshPolicy& fresh) {
  int fuel = kFuel;
  return nf_rec(w, sig, fresh, fuel).arrow;
}

ArrowPtr push_rename(const ObjPtr& w, const VarName& oldv, const VarName& newv,
                     const Signature& sig) {
  FinSet X = typecheck_object(w, sig);
  Bijection rho = Bijection::renaming(X, oldv, newv);
  return nf_object_arrow(mk_act(w, rho), sig);
}

namespace {

// Palette of `bound` candidate names for one variable.
std::vector<VarName> palette(const VarName& base, const FinSet& avoid, int bound) {
  std::vector<VarName> out;
  std::string stem = base;
  auto hash = stem.find('#');
  if (hash != std::string::npos) stem = stem.substr(0, hash);
  if (!avoid.count(base)) out.push_back(base);
  for (int k = 1; static_cast<int>(out.size()) < bound; ++k) {
    VarName cand = stem + "#" + std::to_string(k);
    if (!avoid.count(cand)) out.push_back(cand);
  }
  return out;
}

void all_act(const ObjPtr& body, const Bijection& sigma, const Signature& sig, int bound,
             std::vector<ObjPtr>& out);

void all_rec(const ObjPtr& w, const Signature& sig, int bound, std::vector<ObjPtr>& out) {
  switch (w->kind) {
    case Obj::Kind::Param:
      out.push_back(w);
      return;
    case Obj::Kind::Comp: {
      std::vector<ObjPtr> ls, rs;
      all_rec(w->left, sig, bound, ls);
      all_rec(w->right, sig, bound, rs);
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(mk_comp(l, w->x, w->y, r));
      return;
    }
    case Obj::Kind::Act:
      all_act(w->body, w->act, sig, bound, out);
      return;
    case Obj::Kind::Unit:
      throw TypeError("unit term in nf_all_objects");
  }
}

void all_act(const ObjPtr& body, const Bijection& sigma, const Signature& sig, int bound,
             std::vector<ObjPtr>& out) {
  switch (body->kind) {
    case Obj::Kind::Param:
      out.push_back(mk_param(body->param, body->dec.compose(sigma)));
      return;
    case Obj::Kind::Act:
      all_act(body->body, body->act.compose(sigma), sig, bound, out);
      return;
    case Obj::Kind::Comp: {
      if (sigma.is_identity()) {
        all_rec(body, sig, bound, out);
        return;
      }
      FinSet X = typecheck_object(body->left, sig);
      FinSet Y = typecheck_object(body->right, sig);
      FinSet avoid = eps4_avoid(set_minus(X, body->x), set_minus(Y, body->y), sigma);
      for (const auto& xp : palette(body->x, avoid, bound)) {
        FinSet avoid2 = avoid;
        avoid2.insert(xp);
        for (const auto& yp : palette(body->y, avoid2, bound)) {
          auto [s1, s2] = eps4_split(sigma, X, body->x, xp, Y, body->y, yp);
          std::vector<ObjPtr> ls, rs;
          all_act(body->left, s1, sig, bound, ls);
          all_act(body->right, s2, sig, bound, rs);
          for (const auto& l : ls)
            for (const auto& r : rs) out.push_back(mk_comp(l, xp, yp, r));
        }
      }
      return;
    }
    case Obj::Kind::Unit:
      throw TypeError("unit term in nf_all_objects");
  }
}

}  // namespace

std::vector<ObjPtr> nf_all_objects(const ObjPtr& w, const Signature& sig, int bound) {
  std::vector<ObjPtr> raw;
  all_rec(w, sig, bound, raw);
  std::set<std::string> seen;
  std::vector<ObjPtr> out;
  for (const auto& t : raw) {
    if (seen.insert(print_object(t)).second) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Arrow normalisation (outputs typed in the loose system).

namespace {

struct ArrowNf {
  const Signature& sig;
  const FreshPolicy& fresh;
  int fuel = kFuel;

  ObjPtr nf(const ObjPtr& w) {
    return nf_rec(w, sig, fresh, fuel).term;
  }

  ArrowPtr go(const ArrowPtr& f) {
    if (--fuel <= 0) throw TypeError("arrow normalisation fuel exhausted");
    switch (f->kind) {
      case AK::Id:
        return mk_id(nf(f->objs[0]));
      case AK::Beta:
      case AK::BetaInv:
        return mk_beta(nf(f->objs[0]), nf(f->objs[1]), nf(f->objs[2]), f->vars[0], f->vars[1],
                       f->vars[2], f->vars[3], f->kind == AK::BetaInv);
      case AK::Gamma:
        return mk_gamma(nf(f->objs[0]), nf(f->objs[1]), f->vars[0], f->vars[1]);
      case AK::Eps1:
      case AK::Eps1Inv: {
        const ObjPtr& leaf = f->objs[0];
        return mk_id(mk_param(leaf->param, leaf->dec.compose(f->bijs[0])));
      }
      case AK::Eps2:
      case AK::Eps2Inv:
        return mk_id(nf(f->objs[0]));
      case AK::Eps3:
      case AK::Eps3Inv:
        return mk_id(nf(mk_act(f->objs[0], f->bijs[0].compose(f->bijs[1]))));
      case AK::Eps4:
      case AK::Eps4Inv: {
        ObjPtr comp = mk_comp(f->objs[0], f->vars[0], f->vars[1], f->objs[1]);
        if (f->kind == AK::Eps4) return mk_id(nf(mk_act(comp, f->bijs[0])));
        FinSet X = typecheck_object(f->objs[0], sig);
        FinSet Y = typecheck_object(f->objs[1], sig);
        auto [s1, s2] =
            eps4_split(f->bijs[0], X, f->vars[0], f->vars[2], Y, f->vars[1], f->vars[3]);
        return mk_id(mk_comp(nf(mk_act(f->objs[0], s1)), f->vars[2], f->vars[3],
                             nf(mk_act(f->objs[1], s2))));
      }
      case AK::Iota:
      case AK::Nu:
        throw TypeError("unit generator reached the first reduction; run reduction zero first");
      case AK::VComp:
        return mk_vcomp(go(f->a), go(f->b));
      case AK::HComp:
        return mk_hcomp(go(f->a), f->vars[0], f->vars[1], go(f->b));
      case AK::Act:
        return act(f->a, f->bijs[0]);
    }
    throw TypeError("bad arrow term");
  }

  // (Phi)^sigma cases.
  ArrowPtr act(const ArrowPtr& sub, const Bijection& sigma) {
    if (--fuel <= 0) throw TypeError("arrow normalisation fuel exhausted");
    if (sigma.is_identity()) return go(sub);
    switch (sub->kind) {
      case AK::Id:
        return mk_id(nf(mk_act(sub->objs[0], sigma)));
      case AK::Beta:
      case AK::BetaInv: {
        const ObjPtr &W1 = sub->objs[0], &W2 = sub->objs[1], &W3 = sub->objs[2];
        const VarName &x = sub->vars[0], &xb = sub->vars[1], &y = sub->vars[2],
                      &yb = sub->vars[3];
        FinSet X1 = typecheck_object(W1, sig);
        FinSet X2 = typecheck_object(W2, sig);
        FinSet X3 = typecheck_object(W3, sig);
        FinSet r1 = set_minus(X1, x);
        FinSet r2 = set_minus(set_minus(X2, xb), y);
        FinSet r3 = set_minus(X3, yb);
        FinSet avoid = set_union(set_union(r1, r2), set_union(r3, sigma.dom()));
        auto [xp, xbp] = fresh.pick(x, xb, avoid);
        avoid.insert(xp);
        avoid.insert(xbp);
        auto [yp, ybp] = fresh.pick(y, yb, avoid);
        auto s1 = split_one(sigma, r1, xp, x);
        auto s2 = split_two(sigma, r2, xbp, xb, yp, y);
        auto s3 = split_one(sigma, r3, ybp, yb);
        return mk_beta(nf(mk_act(W1, s1)), nf(mk_act(W2, s2)), nf(mk_act(W3, s3)), xp, xbp, yp,
                       ybp, sub->kind == AK::BetaInv);
      }
      case AK::Gamma: {
        const ObjPtr &W1 = sub->objs[0], &W2 = sub->objs[1];
        const VarName &x = sub->vars[0], &y = sub->vars[1];
        FinSet r1 = set_minus(typecheck_object(W1, sig), x);
        FinSet r2 = set_minus(typecheck_object(W2, sig), y);
        FinSet avoid = set_union(set_union(r1, r2), sigma.dom());
        auto [xp, yp] = fresh.pick(x, y, avoid);
        auto s1 = split_one(sigma, r1, xp, x);
        auto s2 = split_one(sigma, r2, yp, y);
        return mk_gamma(nf(mk_act(W1, s1)), nf(mk_act(W2, s2)), xp, yp);
      }
      case AK::Eps1:
      case AK::Eps1Inv:
      case AK::Eps2:
      case AK::Eps2Inv:
      case AK::Eps3:
      case AK::Eps3Inv:
      case AK::Eps4:
      case AK::Eps4Inv: {
        ObjPtr src = typecheck_arrow(sub, sig).src;
        return mk_id(nf(mk_act(src, sigma)));
      }
      case AK::VComp:
        return mk_vcomp(act(sub->a, sigma), act(sub->b, sigma));
      case AK::HComp: {
        ArrowType t1 = typecheck_arrow(sub->a, sig, CompRule::Loose);
        ArrowType t2 = typecheck_arrow(sub->b, sig, CompRule::Loose);
        FinSet X = typecheck_object(t1.src, sig);
        FinSet Y = typecheck_object(t2.src, sig);
        FinSet r1 = set_minus(X, sub->vars[0]), r2 = set_minus(Y, sub->vars[1]);
        FinSet avoid = set_union(set_union(r1, r2), sigma.dom());
        auto [xp, yp] = fresh.pick(sub->vars[0], sub->vars[1], avoid);
        auto s1 = split_one(sigma, r1, xp, sub->vars[0]);
        auto s2 = split_one(sigma, r2, yp, sub->vars[1]);
        return mk_hcomp(act(sub->a, s1), xp, yp, act(sub->b, s2));
      }
      case AK::Act:
        return act(sub->a, sub->bijs[0].compose(sigma));
      case AK::Iota:
      case AK::Nu:
        throw TypeError("unit generator reached the first reduction; run reduction zero first");
    }
    throw TypeError("bad arrow term");
  }

  // Restriction of sigma hitting `live`, extended with xp -> x.
  static Bijection split_one(const Bijection& sigma, const FinSet& live, const VarName& xp,
                             const VarName& x) {
    std::map<VarName, VarName, NatLess> m;
    for (const auto& [k, v] : sigma.pairs())
      if (live.count(v)) m[k] = v;
    if (m.count(xp)) throw TypeError("fresh name " + xp + " collides with the action domain");
    m[xp] = x;
    return Bijection(std::move(m));
  }

  static Bijection split_two(const Bijection& sigma, const FinSet& live, const VarName& xp,
                             const VarName& x, const VarName& yp, const VarName& y) {
    std::map<VarName, VarName, NatLess> m;
    for (const auto& [k, v] : sigma.pairs())
      if (live.count(v)) m[k] = v;
    if (m.count(xp) || m.count(yp) || xp == yp)
      throw TypeError("fresh names collide with the action domain");
    m[xp] = x;
    m[yp] = y;
    return Bijection(std::move(m));
  }
};

}  // namespace

ArrowPtr nf_arrow(const ArrowPtr& f, const Signature& sig, const FreshPolicy& fresh) {
  ArrowNf n{sig, fresh};
  return n.go(f);
}

// ---------------------------------------------------------------------------
// Lemma-construction transfer.

namespace {

struct Transfer {
  const Signature& sig;

  ArrowPtr go(const ArrowPtr& f, const ObjPtr& u) {
    switch (f->kind) {
      case AK::Id:
        return mk_id(u);
      case AK::Beta: {
        if (u->kind != Obj::Kind::Comp || u->left->kind != Obj::Kind::Comp)
          throw TypeError("transfer: source shape mismatch for beta");
        const ObjPtr& inner = u->left;
        return mk_beta(inner->left, inner->right, u->right, inner->x, inner->y, u->x, u->y);
      }
      case AK::BetaInv: {
        if (u->kind != Obj::Kind::Comp || u->right->kind != Obj::Kind::Comp)
          throw TypeError("transfer: source shape mismatch for betainv");
        const ObjPtr& inner = u->right;
        return mk_beta(u->left, inner->left, inner->right, u->x, u->y, inner->x, inner->y, true);
      }
      case AK::Gamma: {
        if (u->kind != Obj::Kind::Comp) throw TypeError("transfer: source shape mismatch");
        return mk_gamma(u->left, u->right, u->x, u->y);
      }
      case AK::VComp: {
        ArrowPtr t1 = go(f->a, u);
        ObjPtr mid = typecheck_arrow(t1, sig).tgt;
        ArrowPtr t2 = go(f->b, mid);
        return mk_vcomp(t1, t2);
      }
      case AK::HComp: {
        if (u->kind != Obj::Kind::Comp) throw TypeError("transfer: source shape mismatch");
        ArrowType ta = typecheck_arrow(f->a, sig, CompRule::Loose);
        ArrowType tb = typecheck_arrow(f->b, sig, CompRule::Loose);
        ArrowPtr l = side(f->a, ta.src, u->left, f->vars[0], u->x);
        ArrowPtr r = side(f->b, tb.src, u->right, f->vars[1], u->y);
        return mk_hcomp(l, u->x, u->y, r);
      }
      default:
        throw TypeError("transfer applies to symmetry-free arrow terms");
    }
  }

  // One factor of a horizontal composition: the interface entry may have been
  // renamed from x (in the arrow) to xp (in the new source).
  ArrowPtr side(const ArrowPtr& f, const ObjPtr& fsrc, const ObjPtr& u, const VarName& x,
                const VarName& xp) {
    if (x == xp) return go(f, u);
    ObjPtr back = subst_entry(u, xp, x);
    ArrowPtr t = go(f, back);
    std::string leaf = leaf_of(back, x);
    Bijection tau = Bijection::renaming(leaf_dom(back, leaf), x, xp);
    (void)fsrc;
    return substitute_param_arrow(t, leaf, tau, sig);
  }

  std::string leaf_of(const ObjPtr& w, const VarName& v) {
    if (w->kind == Obj::Kind::Param) return w->param;
    FinSet L = typecheck_object(w->left, sig);
    if (L.count(v) && v != w->x) return leaf_of(w->left, v);
    return leaf_of(w->right, v);
  }

  FinSet leaf_dom(const ObjPtr& w, const std::string& leaf) {
    for (const auto& l : obj_leaves(w))
      if (l->param == leaf) return l->dec.dom();
    throw TypeError("leaf " + leaf + " not found");
  }
};

}  // namespace

ArrowPtr transfer(const ArrowPtr& f, const ObjPtr& u_prime, const Signature& sig) {
  ArrowType t = typecheck_arrow(f, sig, CompRule::Loose);
  if (!alpha_eq(t.src, u_prime, sig))
    throw TypeError("transfer: new source is not alpha-equivalent to the arrow's source");
  return Transfer{sig}.go(f, u_prime);
}

ArrowPtr red1(const ArrowPtr& f, const Signature& sig) {
  ArrowType t = typecheck_arrow(f, sig);
  ArrowPtr loose = nf_arrow(f, sig);
  ObjPtr u0 = nf_object(t.src, sig);
  return transfer(loose, u0, sig);
}

ObjPtr alpha_canonical(const ObjPtr& w, const Signature& sig) {
  typecheck_object(w, sig);
  if (leaf_vars_disjoint(w)) return w;
  FinSet used = obj_all_vars(w);
  int next = 1;
  auto fresh_pair = [&]() {
    VarName v;
    do {
      v = "e#" + std::to_string(next++);
    } while (used.count(v));
    used.insert(v);
    return v;
  };
  std::function<ObjPtr(const ObjPtr&)> rec = [&](const ObjPtr& t) -> ObjPtr {
    if (t->kind != Obj::Kind::Comp) return t;
    ObjPtr l = rec(t->left);
    ObjPtr r = rec(t->right);
    VarName a = fresh_pair();
    VarName b = fresh_pair();
    return mk_comp(subst_entry(l, t->x, a), a, b, subst_entry(r, t->y, b));
  };
  return rec(w);
}

}  // namespace cyco
