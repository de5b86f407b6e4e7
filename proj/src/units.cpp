#include "cyco/units.hpp"

namespace cyco {

namespace {

bool is_unit(const ObjPtr& w) { return w->kind == Obj::Kind::Unit; }

VarName partner(const ObjPtr& unit, const VarName& v) {
  if (unit->x == v) return unit->y;
  if (unit->y == v) return unit->x;
  throw TypeError("entry " + v + " not in unit " + print_object(unit));
}

}  // namespace

ObjPtr red0_object(const ObjPtr& w, const Signature& sig) {
  switch (w->kind) {
    case Obj::Kind::Param:
    case Obj::Kind::Unit:
      return w;
    case Obj::Kind::Comp: {
      ObjPtr l = red0_object(w->left, sig);
      ObjPtr r = red0_object(w->right, sig);
      if (is_unit(l) && is_unit(r)) return mk_unit(partner(l, w->x), partner(r, w->y));
      if (is_unit(r)) {
        VarName v = partner(r, w->y);
        FinSet X = typecheck_object(l, sig);
        return mk_act(l, Bijection::renaming(X, w->x, v));
      }
      if (is_unit(l)) {
        VarName u = partner(l, w->x);
        FinSet Y = typecheck_object(r, sig);
        return mk_act(r, Bijection::renaming(Y, w->y, u));
      }
      return mk_comp(l, w->x, w->y, r);
    }
    case Obj::Kind::Act: {
      ObjPtr b = red0_object(w->body, sig);
      if (is_unit(b)) {
        FinSet d = w->act.dom();
        auto it = d.begin();
        VarName p = *it++;
        VarName q = *it;
        return mk_unit(p, q);
      }
      return mk_act(b, w->act);
    }
  }
  throw TypeError("bad object term");
}

ArrowPtr invert_eps(const ArrowPtr& f) {
  switch (f->kind) {
    case AK::Id:
      return f;
    case AK::Eps1:
    case AK::Eps1Inv:
      return mk_eps1(f->objs[0], f->bijs[0], f->kind == AK::Eps1);
    case AK::Eps2:
    case AK::Eps2Inv:
      return mk_eps2(f->objs[0], f->kind == AK::Eps2);
    case AK::Eps3:
    case AK::Eps3Inv:
      return mk_eps3(f->objs[0], f->bijs[0], f->bijs[1], f->kind == AK::Eps3);
    case AK::Eps4:
    case AK::Eps4Inv:
      return mk_eps4(f->objs[0], f->objs[1], f->vars[0], f->vars[1], f->vars[2], f->vars[3],
                     f->bijs[0], f->kind == AK::Eps4);
    case AK::Beta:
    case AK::BetaInv:
      return mk_beta(f->objs[0], f->objs[1], f->objs[2], f->vars[0], f->vars[1], f->vars[2],
                     f->vars[3], f->kind == AK::Beta);
    case AK::VComp:
      return mk_vcomp(invert_eps(f->b), invert_eps(f->a));
    case AK::HComp:
      return mk_hcomp(invert_eps(f->a), f->vars[0], f->vars[1], invert_eps(f->b));
    case AK::Act:
      return mk_aact(invert_eps(f->a), f->bijs[0]);
    default:
      throw TypeError("invert_eps: not an invertible composite");
  }
}

namespace {

struct Red0 {
  const Signature& sig;

  ObjPtr obj(const ObjPtr& w) const { return red0_object(w, sig); }

  // red0(beta^{x,xb;y,yb}_{W1,W2,W3}) in the forward direction; the result
  // for betainv is the formal inverse except in the no-unit case.
  ArrowPtr beta_fwd(const ObjPtr& R1, const ObjPtr& R2, const ObjPtr& R3, const VarName& x,
                    const VarName& xb, const VarName& y, const VarName& yb) const {
    bool u1 = is_unit(R1), u2 = is_unit(R2), u3 = is_unit(R3);
    if (!u1 && !u2 && !u3) return mk_beta(R1, R2, R3, x, xb, y, yb);

    if (!u1 && !u2 && u3) {
      // (eps2_{R1} x<>xb 1_{R2^tau}) o eps4^{x,xb;x,xb}_{R1,R2;sigma}
      VarName v = partner(R3, yb);
      FinSet T12 = typecheck_object(mk_comp(R1, x, xb, R2), sig);
      Bijection sigma = Bijection::renaming(T12, y, v);
      Bijection tau = Bijection::renaming(typecheck_object(R2, sig), y, v);
      ArrowPtr e4 = mk_eps4(R1, R2, x, xb, x, xb, sigma);
      ArrowPtr fin = mk_hcomp(mk_eps2(R1), x, xb, mk_id(mk_act(R2, tau)));
      return mk_seq({e4, fin});
    }
    if (!u1 && u2 && !u3) {
      // through (R1 x<>yb R3)^{id}: eps2inv, eps4inv, eps4, eps2.
      VarName yu = partner(R2, xb);  // = y by typing
      (void)yu;
      FinSet X1 = typecheck_object(R1, sig);
      FinSet X3 = typecheck_object(R3, sig);
      Bijection tau1 = Bijection::renaming(X1, x, y);
      Bijection tau3 = Bijection::renaming(X3, yb, xb);
      FinSet T = set_union(set_minus(X1, x), set_minus(X3, yb));
      Bijection idT = Bijection::identity(T);
      ArrowPtr s1 = mk_hcomp(mk_id(mk_act(R1, tau1)), y, yb, mk_eps2(R3, true));
      ArrowPtr s2 = mk_eps4(R1, R3, x, yb, y, yb, idT, true);
      ArrowPtr s3 = mk_eps4(R1, R3, x, yb, x, xb, idT);
      ArrowPtr s4 = mk_hcomp(mk_eps2(R1), x, xb, mk_id(mk_act(R3, tau3)));
      return mk_seq({s1, s2, s3, s4});
    }
    if (u1 && !u2 && !u3) {
      // eps4inv^{y,yb;y,yb}_{R2,R3;tau} o (1_{R2^{tau2}} y<>yb eps2inv_{R3})
      VarName u = partner(R1, x);
      FinSet X2 = typecheck_object(R2, sig);
      FinSet X3 = typecheck_object(R3, sig);
      Bijection tau2 = Bijection::renaming(X2, xb, u);
      FinSet T = set_union(set_minus(X2, y), set_minus(X3, yb));
      Bijection sigma = Bijection::renaming(T, xb, u);
      ArrowPtr s1 = mk_hcomp(mk_id(mk_act(R2, tau2)), y, yb, mk_eps2(R3, true));
      ArrowPtr s2 = mk_eps4(R2, R3, y, yb, y, yb, sigma, true);
      return mk_seq({s1, s2});
    }
    if (!u1 && u2 && u3) {
      // eps3^{tau,sigma}_{R1}
      VarName v = partner(R3, yb);
      FinSet X1 = typecheck_object(R1, sig);
      Bijection tau = Bijection::renaming(X1, x, y);
      Bijection sigma = Bijection::renaming(tau.dom(), y, v);
      return mk_eps3(R1, tau, sigma);
    }
    if (u1 && !u2 && u3) {
      VarName u = partner(R1, x);
      VarName v = partner(R3, yb);
      FinSet X2 = typecheck_object(R2, sig);
      Bijection tau2 = Bijection::renaming(X2, xb, u);
      Bijection sig1 = Bijection::renaming(tau2.dom(), y, v);
      Bijection taup = Bijection::renaming(X2, y, v);
      Bijection sigp = Bijection::renaming(taup.dom(), xb, u);
      return mk_seq({mk_eps3(R2, tau2, sig1), mk_eps3(R2, taup, sigp, true)});
    }
    if (u1 && u2 && !u3) {
      VarName u = partner(R1, x);
      FinSet X3 = typecheck_object(R3, sig);
      Bijection tau3 = Bijection::renaming(X3, yb, xb);
      Bijection sig3 = Bijection::renaming(tau3.dom(), xb, u);
      return mk_eps3(R3, tau3, sig3, true);
    }
    // all units
    VarName u = partner(R1, x);
    VarName v = partner(R3, yb);
    return mk_id(mk_unit(u, v));
  }

  ArrowPtr go(const ArrowPtr& f) const {
    switch (f->kind) {
      case AK::Id:
        return mk_id(obj(f->objs[0]));
      case AK::VComp:
        return mk_vcomp(go(f->a), go(f->b));
      case AK::HComp: {
        ArrowType ta = typecheck_arrow(f->a, sig);
        ArrowType tb = typecheck_arrow(f->b, sig);
        ObjPtr SL = obj(ta.src), SR = obj(tb.src);
        if (is_unit(SL) && is_unit(SR))
          return mk_id(obj(mk_comp(ta.src, f->vars[0], f->vars[1], tb.src)));
        if (is_unit(SR)) {
          VarName v = partner(SR, f->vars[1]);
          FinSet X = typecheck_object(SL, sig);
          return mk_aact(go(f->a), Bijection::renaming(X, f->vars[0], v));
        }
        if (is_unit(SL)) {
          VarName u = partner(SL, f->vars[0]);
          FinSet Y = typecheck_object(SR, sig);
          return mk_aact(go(f->b), Bijection::renaming(Y, f->vars[1], u));
        }
        return mk_hcomp(go(f->a), f->vars[0], f->vars[1], go(f->b));
      }
      case AK::Act: {
        ArrowType t = typecheck_arrow(f->a, sig);
        if (is_unit(obj(t.src))) return mk_id(obj(mk_act(t.src, f->bijs[0])));
        return mk_aact(go(f->a), f->bijs[0]);
      }
      case AK::Gamma: {
        ObjPtr R1 = obj(f->objs[0]), R2 = obj(f->objs[1]);
        if (is_unit(R1) || is_unit(R2))
          return mk_id(obj(mk_comp(f->objs[0], f->vars[0], f->vars[1], f->objs[1])));
        return mk_gamma(R1, R2, f->vars[0], f->vars[1]);
      }
      case AK::Beta:
      case AK::BetaInv: {
        ObjPtr R1 = obj(f->objs[0]), R2 = obj(f->objs[1]), R3 = obj(f->objs[2]);
        ArrowPtr fwd =
            beta_fwd(R1, R2, R3, f->vars[0], f->vars[1], f->vars[2], f->vars[3]);
        if (f->kind == AK::Beta) return fwd;
        return invert_eps(fwd);
      }
      case AK::Iota: {
        ObjPtr src = mk_comp(f->objs[0], f->vars[0], f->vars[1],
                             mk_unit(f->vars[1], f->vars[2]));
        return mk_id(obj(src));
      }
      case AK::Nu:
        return mk_id(mk_unit(f->vars[2], f->vars[3]));
      case AK::Eps1:
      case AK::Eps1Inv:
        return f;
      case AK::Eps2:
      case AK::Eps2Inv: {
        ObjPtr R = obj(f->objs[0]);
        if (is_unit(R)) return mk_id(R);
        return mk_eps2(R, f->kind == AK::Eps2Inv);
      }
      case AK::Eps3:
      case AK::Eps3Inv: {
        ObjPtr R = obj(f->objs[0]);
        if (is_unit(R))
          return mk_id(obj(mk_act(mk_act(f->objs[0], f->bijs[0]), f->bijs[1])));
        return mk_eps3(R, f->bijs[0], f->bijs[1], f->kind == AK::Eps3Inv);
      }
      case AK::Eps4:
      case AK::Eps4Inv: {
        ObjPtr R1 = obj(f->objs[0]), R2 = obj(f->objs[1]);
        const VarName &x = f->vars[0], &y = f->vars[1], &xp = f->vars[2], &yp = f->vars[3];
        if (!is_unit(R1) && !is_unit(R2))
          return mk_eps4(R1, R2, x, y, xp, yp, f->bijs[0], f->kind == AK::Eps4Inv);
        if (is_unit(R1) && is_unit(R2)) {
          ObjPtr src = typecheck_arrow(f, sig).src;
          return mk_id(obj(src));
        }
        FinSet X = typecheck_object(f->objs[0], sig);
        FinSet Y = typecheck_object(f->objs[1], sig);
        auto [s1, s2] = eps4_split(f->bijs[0], X, x, xp, Y, y, yp);
        ArrowPtr fwd;
        if (is_unit(R2)) {
          VarName v = partner(R2, y);
          VarName vp = s2.preimage(v);
          FinSet X1 = typecheck_object(R1, sig);
          Bijection kappa = Bijection::renaming(X1, x, v);
          Bijection kp = Bijection::renaming(s1.dom(), xp, vp);
          fwd = mk_seq({mk_eps3(R1, kappa, f->bijs[0]), mk_eps3(R1, s1, kp, true)});
        } else {
          VarName u = partner(R1, x);
          VarName up = s1.preimage(u);
          FinSet X2 = typecheck_object(R2, sig);
          Bijection kappa = Bijection::renaming(X2, y, u);
          Bijection kp = Bijection::renaming(s2.dom(), yp, up);
          fwd = mk_seq({mk_eps3(R2, kappa, f->bijs[0]), mk_eps3(R2, s2, kp, true)});
        }
        if (f->kind == AK::Eps4) return fwd;
        return invert_eps(fwd);
      }
    }
    throw TypeError("bad arrow term");
  }
};

}  // namespace

ArrowPtr red0_arrow(const ArrowPtr& f, const Signature& sig) {
  if (!sig.units) throw TypeError("red0 requires a unit-mode signature");
  typecheck_arrow(f, sig);
  return Red0{sig}.go(f);
}

std::vector<std::string> red0_cases() {
  return {
      "id          -> 1_{red0}",
      "vcomp/hcomp -> componentwise; a unit-reducing side becomes an action",
      "act         -> red0(sub)^sigma; unit body relabels the unit",
      "gamma nn    -> gamma over reduced factors",
      "gamma un/nu -> 1 on the common reduced endpoint",
      "gamma uu    -> 1_{id}",
      "beta nnn    -> beta over reduced factors",
      "beta nnu    -> (eps2 x<>xb 1) . eps4                      [paper]",
      "beta nun    -> (1 y<>yb eps2inv) ; eps4inv ; eps4 ; (eps2 x<>xb 1)",
      "beta nuu    -> eps3^{tau,sigma}                           [paper]",
      "beta unn    -> (1 y<>yb eps2inv) ; eps4inv",
      "beta unu    -> eps3 ; eps3inv",
      "beta uun    -> eps3inv",
      "beta uuu    -> 1_{id}                                     [paper]",
      "betainv *   -> formal inverse of the beta case",
      "iota        -> 1_{red0(source)}                           [paper]",
      "nu          -> 1_{id{u,v}}                                [paper]",
      "eps1        -> unchanged",
      "eps2/eps3   -> over reduced factor; 1 when it is a unit",
      "eps4 nn     -> over reduced factors",
      "eps4 nu/un  -> eps3 ; eps3inv",
      "eps4 uu     -> 1 on the reduced endpoint",
  };
}

}  // namespace cyco
