#include "cyco/terms.hpp"

#include <algorithm>
#include <functional>

#include "cyco/alpha.hpp"

namespace cyco {

void Signature::declare(const std::string& name, const FinSet& fv) {
  if (params.count(name)) throw TypeError("parameter " + name + " declared twice");
  if (fv.empty()) throw TypeError("parameter " + name + " has no entries");
  if (constant_free && fv.size() < 2)
    throw TypeError("parameter " + name + " has fewer than two entries (constant-free mode)");
  params[name] = Parameter{name, fv};
}

const Parameter& Signature::lookup(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw TypeError("unknown parameter " + name);
  return it->second;
}

ObjPtr mk_param(const std::string& name, const Bijection& dec) {
  auto o = std::make_shared<Obj>();
  o->kind = Obj::Kind::Param;
  o->param = name;
  o->dec = dec;
  return o;
}

ObjPtr mk_param(const std::string& name, const FinSet& fv) {
  return mk_param(name, Bijection::identity(fv));
}

ObjPtr mk_comp(ObjPtr l, const VarName& x, const VarName& y, ObjPtr r) {
  auto o = std::make_shared<Obj>();
  o->kind = Obj::Kind::Comp;
  o->left = std::move(l);
  o->right = std::move(r);
  o->x = x;
  o->y = y;
  return o;
}

ObjPtr mk_act(ObjPtr body, const Bijection& act) {
  auto o = std::make_shared<Obj>();
  o->kind = Obj::Kind::Act;
  if (body->kind == Obj::Kind::Unit) {
    // id^{sigma1} = id^{sigma2}: canonicalize to the sorted-to-sorted bijection.
    FinSet d = act.dom(), c = act.cod();
    if (d.size() == 2 && c.size() == 2) {
      std::map<VarName, VarName, NatLess> m;
      auto di = d.begin();
      auto ci = c.begin();
      m[*di] = *ci;
      m[*std::next(di)] = *std::next(ci);
      o->body = std::move(body);
      o->act = Bijection(std::move(m));
      return o;
    }
  }
  o->body = std::move(body);
  o->act = act;
  return o;
}

ObjPtr mk_unit(const VarName& x, const VarName& y) {
  auto o = std::make_shared<Obj>();
  o->kind = Obj::Kind::Unit;
  NatLess lt;
  o->x = lt(x, y) ? x : y;
  o->y = lt(x, y) ? y : x;
  return o;
}

bool obj_equal(const ObjPtr& a, const ObjPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Obj::Kind::Param:
      return a->param == b->param && a->dec == b->dec;
    case Obj::Kind::Comp:
      return a->x == b->x && a->y == b->y && obj_equal(a->left, b->left) &&
             obj_equal(a->right, b->right);
    case Obj::Kind::Act:
      return a->act == b->act && obj_equal(a->body, b->body);
    case Obj::Kind::Unit:
      return a->x == b->x && a->y == b->y;
  }
  return false;
}

bool is_sym_free(const ObjPtr& w) {
  switch (w->kind) {
    case Obj::Kind::Param:
      return true;
    case Obj::Kind::Comp:
      return is_sym_free(w->left) && is_sym_free(w->right);
    default:
      return false;
  }
}

bool has_unit(const ObjPtr& w) {
  switch (w->kind) {
    case Obj::Kind::Param:
      return false;
    case Obj::Kind::Comp:
      return has_unit(w->left) || has_unit(w->right);
    case Obj::Kind::Act:
      return has_unit(w->body);
    case Obj::Kind::Unit:
      return true;
  }
  return false;
}

std::string print_object(const ObjPtr& w) {
  switch (w->kind) {
    case Obj::Kind::Param:
      if (w->dec.is_identity()) return w->param + print_finset(w->dec.dom());
      return w->param + "^" + print_bijection(w->dec);
    case Obj::Kind::Comp:
      return "(" + print_object(w->left) + " " + w->x + "<>" + w->y + " " +
             print_object(w->right) + ")";
    case Obj::Kind::Act:
      return print_object(w->body) + "^" + print_bijection(w->act);
    case Obj::Kind::Unit:
      return "id{" + w->x + "," + w->y + "}";
  }
  return "?";
}

FinSet obj_all_vars(const ObjPtr& w) {
  FinSet r;
  switch (w->kind) {
    case Obj::Kind::Param:
      return w->dec.dom();
    case Obj::Kind::Comp:
      r = set_union(obj_all_vars(w->left), obj_all_vars(w->right));
      r.insert(w->x);
      r.insert(w->y);
      return r;
    case Obj::Kind::Act:
      r = obj_all_vars(w->body);
      r = set_union(r, w->act.dom());
      return r;
    case Obj::Kind::Unit:
      return FinSet{w->x, w->y};
  }
  return r;
}

std::vector<ObjPtr> obj_leaves(const ObjPtr& w) {
  std::vector<ObjPtr> out;
  std::function<void(const ObjPtr&)> go = [&](const ObjPtr& t) {
    switch (t->kind) {
      case Obj::Kind::Param:
        out.push_back(t);
        break;
      case Obj::Kind::Comp:
        go(t->left);
        go(t->right);
        break;
      case Obj::Kind::Act:
        go(t->body);
        break;
      case Obj::Kind::Unit:
        break;
    }
  };
  go(w);
  return out;
}

FinSet typecheck_object(const ObjPtr& w, const Signature& sig) {
  switch (w->kind) {
    case Obj::Kind::Param: {
      const Parameter& base = sig.lookup(w->param);
      if (w->dec.cod() != base.fv)
        throw TypeError("decoration of " + w->param + " has codomain " +
                        print_finset(w->dec.cod()) + ", expected " + print_finset(base.fv));
      return w->dec.dom();
    }
    case Obj::Kind::Comp: {
      FinSet X = typecheck_object(w->left, sig);
      FinSet Y = typecheck_object(w->right, sig);
      if (!X.count(w->x))
        throw TypeError("composition index " + w->x + " not an entry of " +
                        print_object(w->left));
      if (!Y.count(w->y))
        throw TypeError("composition index " + w->y + " not an entry of " +
                        print_object(w->right));
      FinSet Xr = set_minus(X, w->x), Yr = set_minus(Y, w->y);
      if (!disjoint(Xr, Yr)) {
        for (const auto& v : Xr)
          if (Yr.count(v)) throw TypeError("entry clash on " + v + " in " + print_object(w));
      }
      return set_union(Xr, Yr);
    }
    case Obj::Kind::Act: {
      FinSet X = typecheck_object(w->body, sig);
      if (w->act.cod() != X)
        throw TypeError("action codomain " + print_finset(w->act.cod()) + " differs from type " +
                        print_finset(X) + " of " + print_object(w->body));
      return w->act.dom();
    }
    case Obj::Kind::Unit: {
      if (!sig.units) throw TypeError("unit term in unit-free mode: " + print_object(w));
      if (w->x == w->y) throw TypeError("unit with equal entries " + w->x);
      return FinSet{w->x, w->y};
    }
  }
  throw TypeError("bad object term");
}

// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<Arrow> make(AK k) {
  auto a = std::make_shared<Arrow>();
  a->kind = k;
  return a;
}

}  // namespace

ArrowPtr mk_id(ObjPtr w) {
  auto a = std::make_shared<Arrow>();
  a->kind = AK::Id;
  a->objs = {std::move(w)};
  return a;
}

ArrowPtr mk_beta(ObjPtr w1, ObjPtr w2, ObjPtr w3, const VarName& x, const VarName& xb,
                 const VarName& y, const VarName& yb, bool inverse) {
  auto m = make(inverse ? AK::BetaInv : AK::Beta);
  m->objs = {std::move(w1), std::move(w2), std::move(w3)};
  m->vars = {x, xb, y, yb};
  return m;
}

ArrowPtr mk_gamma(ObjPtr w1, ObjPtr w2, const VarName& x, const VarName& y) {
  auto m = make(AK::Gamma);
  m->objs = {std::move(w1), std::move(w2)};
  m->vars = {x, y};
  return m;
}

ArrowPtr mk_eps1(ObjPtr leaf, const Bijection& sigma, bool inverse) {
  auto m = make(inverse ? AK::Eps1Inv : AK::Eps1);
  m->objs = {std::move(leaf)};
  m->bijs = {sigma};
  return m;
}

ArrowPtr mk_eps2(ObjPtr w, bool inverse) {
  auto m = make(inverse ? AK::Eps2Inv : AK::Eps2);
  m->objs = {std::move(w)};
  return m;
}

ArrowPtr mk_eps3(ObjPtr w, const Bijection& sigma, const Bijection& tau, bool inverse) {
  auto m = make(inverse ? AK::Eps3Inv : AK::Eps3);
  m->objs = {std::move(w)};
  m->bijs = {sigma, tau};
  return m;
}

ArrowPtr mk_eps4(ObjPtr w1, ObjPtr w2, const VarName& x, const VarName& y, const VarName& xp,
                 const VarName& yp, const Bijection& sigma, bool inverse) {
  auto m = make(inverse ? AK::Eps4Inv : AK::Eps4);
  m->objs = {std::move(w1), std::move(w2)};
  m->vars = {x, y, xp, yp};
  m->bijs = {sigma};
  return m;
}

ArrowPtr mk_iota(ObjPtr w, const VarName& x, const VarName& y, const VarName& z) {
  auto m = make(AK::Iota);
  m->objs = {std::move(w)};
  m->vars = {x, y, z};
  return m;
}

ArrowPtr mk_nu(const VarName& x, const VarName& y, const VarName& u, const VarName& v) {
  auto m = make(AK::Nu);
  NatLess lt;
  VarName x0 = lt(x, y) ? x : y, y0 = lt(x, y) ? y : x;
  VarName u0 = lt(u, v) ? u : v, v0 = lt(u, v) ? v : u;
  m->vars = {x0, y0, u0, v0};
  return m;
}

ArrowPtr mk_vcomp(ArrowPtr before, ArrowPtr after) {
  auto m = make(AK::VComp);
  m->a = std::move(before);
  m->b = std::move(after);
  return m;
}

ArrowPtr mk_seq(const std::vector<ArrowPtr>& steps) {
  if (steps.empty()) throw TypeError("empty arrow sequence");
  ArrowPtr acc = steps[0];
  for (size_t i = 1; i < steps.size(); ++i) acc = mk_vcomp(acc, steps[i]);
  return acc;
}

ArrowPtr mk_hcomp(ArrowPtr l, const VarName& x, const VarName& y, ArrowPtr r) {
  auto m = make(AK::HComp);
  m->a = std::move(l);
  m->b = std::move(r);
  m->vars = {x, y};
  return m;
}

ArrowPtr mk_aact(ArrowPtr sub, const Bijection& sigma) {
  auto m = make(AK::Act);
  m->a = std::move(sub);
  m->bijs = {sigma};
  return m;
}

bool arrow_equal(const ArrowPtr& a, const ArrowPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  if (a->vars != b->vars) return false;
  if (a->bijs.size() != b->bijs.size()) return false;
  for (size_t i = 0; i < a->bijs.size(); ++i)
    if (a->bijs[i] != b->bijs[i]) return false;
  if (a->objs.size() != b->objs.size()) return false;
  for (size_t i = 0; i < a->objs.size(); ++i)
    if (!obj_equal(a->objs[i], b->objs[i])) return false;
  if ((a->a == nullptr) != (b->a == nullptr)) return false;
  if (a->a && !arrow_equal(a->a, b->a)) return false;
  if ((a->b == nullptr) != (b->b == nullptr)) return false;
  if (a->b && !arrow_equal(a->b, b->b)) return false;
  return true;
}

namespace {

std::string print_arrow_atom(const ArrowPtr& f);

std::string print_arrow_seq(const ArrowPtr& f) {
  if (f->kind == AK::VComp) return print_arrow_seq(f->a) + " ; " + print_arrow_seq(f->b);
  return print_arrow_atom(f);
}

std::string print_arrow_atom(const ArrowPtr& f) {
  switch (f->kind) {
    case AK::Id:
      return "1(" + print_object(f->objs[0]) + ")";
    case AK::Beta:
    case AK::BetaInv:
      return std::string(f->kind == AK::Beta ? "beta" : "betainv") + "(" + f->vars[0] + "," +
             f->vars[1] + ";" + f->vars[2] + "," + f->vars[3] + " | " +
             print_object(f->objs[0]) + ", " + print_object(f->objs[1]) + ", " +
             print_object(f->objs[2]) + ")";
    case AK::Gamma:
      return "gamma(" + f->vars[0] + "," + f->vars[1] + " | " + print_object(f->objs[0]) + ", " +
             print_object(f->objs[1]) + ")";
    case AK::Eps1:
    case AK::Eps1Inv:
      return std::string(f->kind == AK::Eps1 ? "eps1" : "eps1inv") + "(" +
             print_bijection(f->bijs[0]) + " | " + print_object(f->objs[0]) + ")";
    case AK::Eps2:
    case AK::Eps2Inv:
      return std::string(f->kind == AK::Eps2 ? "eps2" : "eps2inv") + "(" +
             print_object(f->objs[0]) + ")";
    case AK::Eps3:
    case AK::Eps3Inv:
      return std::string(f->kind == AK::Eps3 ? "eps3" : "eps3inv") + "(" +
             print_bijection(f->bijs[0]) + "," + print_bijection(f->bijs[1]) + " | " +
             print_object(f->objs[0]) + ")";
    case AK::Eps4:
    case AK::Eps4Inv:
      return std::string(f->kind == AK::Eps4 ? "eps4" : "eps4inv") + "(" + f->vars[0] + "," +
             f->vars[1] + ";" + f->vars[2] + "," + f->vars[3] + " | " +
             print_bijection(f->bijs[0]) + " | " + print_object(f->objs[0]) + ", " +
             print_object(f->objs[1]) + ")";
    case AK::Iota:
      return "iota(" + f->vars[0] + "," + f->vars[1] + "," + f->vars[2] + " | " +
             print_object(f->objs[0]) + ")";
    case AK::Nu:
      return "nu(" + f->vars[0] + "," + f->vars[1] + ";" + f->vars[2] + "," + f->vars[3] + ")";
    case AK::VComp:
      return "(" + print_arrow_seq(f) + ")";
    case AK::HComp:
      return "(" + print_arrow_seq(f->a) + " " + f->vars[0] + "<>" + f->vars[1] + " " +
             print_arrow_seq(f->b) + ")";
    case AK::Act:
      return print_arrow_atom(f->a) + "^" + print_bijection(f->bijs[0]);
  }
  return "?";
}

}  // namespace

std::string print_arrow(const ArrowPtr& a) { return print_arrow_seq(a); }

std::pair<Bijection, Bijection> eps4_split(const Bijection& sigma, const FinSet& X,
                                           const VarName& x, const VarName& xp, const FinSet& Y,
                                           const VarName& y, const VarName& yp) {
  FinSet Xr = set_minus(X, x), Yr = set_minus(Y, y);
  std::map<VarName, VarName, NatLess> m1, m2;
  for (const auto& [k, v] : sigma.pairs()) {
    if (Xr.count(v))
      m1[k] = v;
    else if (Yr.count(v))
      m2[k] = v;
    else
      throw TypeError("eps4: action value " + v + " outside the composite type");
  }
  if (m1.count(xp) || m2.count(xp))
    throw TypeError("eps4: chosen name " + xp + " collides with the action domain");
  if (m1.count(yp) || m2.count(yp))
    throw TypeError("eps4: chosen name " + yp + " collides with the action domain");
  if (xp == yp) throw TypeError("eps4: chosen names coincide: " + xp);
  m1[xp] = x;
  m2[yp] = y;
  return {Bijection(std::move(m1)), Bijection(std::move(m2))};
}

namespace {

struct Checker {
  const Signature& sig;
  CompRule rule;

  ObjPtr typed(const ObjPtr& w) const {
    typecheck_object(w, sig);
    return w;
  }

  ArrowType check(const ArrowPtr& f) const {
    switch (f->kind) {
      case AK::Id: {
        auto w = typed(f->objs[0]);
        return {w, w};
      }
      case AK::Beta:
      case AK::BetaInv: {
        const auto& x = f->vars[0];
        const auto& xb = f->vars[1];
        const auto& y = f->vars[2];
        const auto& yb = f->vars[3];
        ObjPtr lhs = mk_comp(mk_comp(f->objs[0], x, xb, f->objs[1]), y, yb, f->objs[2]);
        ObjPtr rhs = mk_comp(f->objs[0], x, xb, mk_comp(f->objs[1], y, yb, f->objs[2]));
        FinSet Y = typecheck_object(f->objs[1], sig);
        if (!Y.count(y))
          throw TypeError("beta: index " + y + " must be an entry of the middle factor");
        typed(lhs);
        typed(rhs);
        if (f->kind == AK::Beta) return {lhs, rhs};
        return {rhs, lhs};
      }
      case AK::Gamma: {
        ObjPtr lhs = mk_comp(f->objs[0], f->vars[0], f->vars[1], f->objs[1]);
        ObjPtr rhs = mk_comp(f->objs[1], f->vars[1], f->vars[0], f->objs[0]);
        typed(lhs);
        typed(rhs);
        return {lhs, rhs};
      }
      case AK::Eps1:
      case AK::Eps1Inv: {
        const ObjPtr& leaf = f->objs[0];
        if (leaf->kind != Obj::Kind::Param)
          throw TypeError("eps1 expects a parameter leaf, got " + print_object(leaf));
        typed(leaf);
        if (f->bijs[0].cod() != leaf->dec.dom())
          throw TypeError("eps1: action codomain mismatch on " + print_object(leaf));
        ObjPtr lhs = mk_act(leaf, f->bijs[0]);
        ObjPtr rhs = mk_param(leaf->param, leaf->dec.compose(f->bijs[0]));
        if (f->kind == AK::Eps1) return {lhs, rhs};
        return {rhs, lhs};
      }
      case AK::Eps2:
      case AK::Eps2Inv: {
        FinSet X = typecheck_object(f->objs[0], sig);
        ObjPtr lhs = mk_act(f->objs[0], Bijection::identity(X));
        if (f->kind == AK::Eps2) return {lhs, f->objs[0]};
        return {f->objs[0], lhs};
      }
      case AK::Eps3:
      case AK::Eps3Inv: {
        ObjPtr lhs = mk_act(mk_act(f->objs[0], f->bijs[0]), f->bijs[1]);
        ObjPtr rhs = mk_act(f->objs[0], f->bijs[0].compose(f->bijs[1]));
        typed(lhs);
        typed(rhs);
        if (f->kind == AK::Eps3) return {lhs, rhs};
        return {rhs, lhs};
      }
      case AK::Eps4:
      case AK::Eps4Inv: {
        const auto& x = f->vars[0];
        const auto& y = f->vars[1];
        const auto& xp = f->vars[2];
        const auto& yp = f->vars[3];
        FinSet X = typecheck_object(f->objs[0], sig);
        FinSet Y = typecheck_object(f->objs[1], sig);
        ObjPtr comp = mk_comp(f->objs[0], x, y, f->objs[1]);
        typed(comp);
        auto [s1, s2] = eps4_split(f->bijs[0], X, x, xp, Y, y, yp);
        ObjPtr lhs = mk_act(comp, f->bijs[0]);
        ObjPtr rhs = mk_comp(mk_act(f->objs[0], s1), xp, yp, mk_act(f->objs[1], s2));
        typed(lhs);
        typed(rhs);
        if (f->kind == AK::Eps4) return {lhs, rhs};
        return {rhs, lhs};
      }
      case AK::Iota: {
        if (!sig.units) throw TypeError("iota in unit-free mode");
        const auto& x = f->vars[0];
        const auto& y = f->vars[1];
        const auto& z = f->vars[2];
        FinSet X = typecheck_object(f->objs[0], sig);
        ObjPtr lhs = mk_comp(f->objs[0], x, y, mk_unit(y, z));
        typed(lhs);
        ObjPtr rhs = mk_act(f->objs[0], Bijection::renaming(X, x, z));
        typed(rhs);
        return {lhs, rhs};
      }
      case AK::Nu: {
        if (!sig.units) throw TypeError("nu in unit-free mode");
        const auto& x = f->vars[0];
        const auto& y = f->vars[1];
        const auto& u = f->vars[2];
        const auto& v = f->vars[3];
        if (x == y || u == v) throw TypeError("nu with equal entries");
        std::map<VarName, VarName, NatLess> m;
        m[u] = x;
        m[v] = y;
        ObjPtr lhs = mk_act(mk_unit(x, y), Bijection(std::move(m)));
        ObjPtr rhs = mk_unit(u, v);
        typed(lhs);
        return {lhs, rhs};
      }
      case AK::VComp: {
        ArrowType t1 = check(f->a);
        ArrowType t2 = check(f->b);
        bool ok = obj_equal(t1.tgt, t2.src);
        if (!ok && rule == CompRule::Loose && is_sym_free(t1.tgt) && is_sym_free(t2.src))
          ok = alpha_eq(t1.tgt, t2.src, sig);
        if (!ok)
          throw TypeError("vertical composition mismatch:\n  " + print_object(t1.tgt) +
                          "\n  " + print_object(t2.src));
        return {t1.src, t2.tgt};
      }
      case AK::HComp: {
        ArrowType t1 = check(f->a);
        ArrowType t2 = check(f->b);
        ObjPtr lhs = mk_comp(t1.src, f->vars[0], f->vars[1], t2.src);
        ObjPtr rhs = mk_comp(t1.tgt, f->vars[0], f->vars[1], t2.tgt);
        typed(lhs);
        typed(rhs);
        return {lhs, rhs};
      }
      case AK::Act: {
        ArrowType t = check(f->a);
        ObjPtr lhs = mk_act(t.src, f->bijs[0]);
        ObjPtr rhs = mk_act(t.tgt, f->bijs[0]);
        typed(lhs);
        typed(rhs);
        return {lhs, rhs};
      }
    }
    throw TypeError("bad arrow term");
  }
};

}  // namespace

ArrowType typecheck_arrow(const ArrowPtr& f, const Signature& sig, CompRule rule) {
  return Checker{sig, rule}.check(f);
}

int count_gammas(const ArrowPtr& f) {
  int n = f->kind == AK::Gamma ? 1 : 0;
  if (f->a) n += count_gammas(f->a);
  if (f->b) n += count_gammas(f->b);
  return n;
}

int generator_sign(const ArrowPtr& f, const SignTable& table) {
  int g = count_gammas(f);
  return (g % 2 == 0) ? 1 : table.gamma;
}

}  // namespace cyco
