#include "cyco/engine.hpp"

namespace cyco {

ArrowPtr theta_arrow(const ObjPtr& f, const ObjPtr& g, const ObjPtr& h, const VarName& x,
                     const VarName& xb, const VarName& y, const VarName& yb) {
  // gamma o beta o (gamma <> 1), the parallel associativity.
  return mk_seq({mk_hcomp(mk_gamma(f, g, x, xb), y, yb, mk_id(h)),
                 mk_beta(g, f, h, xb, x, y, yb),
                 mk_gamma(g, mk_comp(f, y, yb, h), xb, x)});
}

std::vector<Cell> all_cells() {
  return {Cell::BetaPentagon,
          Cell::BetaGammaHexagon,
          Cell::BetaGammaDecagon,
          Cell::GammaInvolution,
          Cell::BetaSigma,
          Cell::GammaSigma,
          Cell::EqMor,
          Cell::BetaEpsHexagon,
          Cell::GammaEpsSquare,
          Cell::BetaGammaIotaEpsHexagon1,
          Cell::BetaGammaIotaEpsHexagon2,
          Cell::BetaIotaEpsSquare,
          Cell::GammaIotaSquare,
          Cell::EpsIotaSquare,
          Cell::IotaEpsNuSquare,
          Cell::GammaIotaNuPentagon,
          Cell::IotaNuPentagon,
          Cell::NuSigma,
          Cell::NuInvolution,
          Cell::ThetaInvolution,
          Cell::BetaThetaPentagon,
          Cell::ThetaHexagon};
}

std::string cell_name(Cell c) {
  switch (c) {
    case Cell::BetaPentagon: return "beta-pentagon";
    case Cell::BetaGammaHexagon: return "betagamma-hexagon";
    case Cell::BetaGammaDecagon: return "betagamma-decagon";
    case Cell::GammaInvolution: return "gamma-involution";
    case Cell::BetaSigma: return "beta-sigma";
    case Cell::GammaSigma: return "gamma-sigma";
    case Cell::EqMor: return "eq-mor";
    case Cell::BetaEpsHexagon: return "betaeps-hexagon";
    case Cell::GammaEpsSquare: return "gammaeps-square";
    case Cell::BetaGammaIotaEpsHexagon1: return "betagammaiotaeps-hexagon-1";
    case Cell::BetaGammaIotaEpsHexagon2: return "betagammaiotaeps-hexagon-2";
    case Cell::BetaIotaEpsSquare: return "betaiotaeps-square";
    case Cell::GammaIotaSquare: return "gammaiota-square";
    case Cell::EpsIotaSquare: return "epsiota-square";
    case Cell::IotaEpsNuSquare: return "iotaepsnu-square";
    case Cell::GammaIotaNuPentagon: return "gammaiotanu-pentagon";
    case Cell::IotaNuPentagon: return "iotanu-pentagon";
    case Cell::NuSigma: return "nu-sigma";
    case Cell::NuInvolution: return "nu-involution";
    case Cell::ThetaInvolution: return "theta-involution";
    case Cell::BetaThetaPentagon: return "betatheta-pentagon";
    case Cell::ThetaHexagon: return "theta-hexagon";
  }
  return "?";
}

bool cell_needs_units(Cell c) {
  switch (c) {
    case Cell::BetaGammaIotaEpsHexagon1:
    case Cell::BetaGammaIotaEpsHexagon2:
    case Cell::BetaIotaEpsSquare:
    case Cell::GammaIotaSquare:
    case Cell::EpsIotaSquare:
    case Cell::IotaEpsNuSquare:
    case Cell::GammaIotaNuPentagon:
    case Cell::IotaNuPentagon:
    case Cell::NuSigma:
    case Cell::NuInvolution:
      return true;
    default:
      return false;
  }
}

namespace {

struct CB {
  Signature& sig;
  std::string pfx;
  int variant;

  VarName v(const std::string& base) const { return pfx + base; }

  ObjPtr leaf(const std::string& base, const std::vector<std::string>& vars, int extra = 0) {
    FinSet fv;
    for (const auto& s : vars) fv.insert(v(s));
    int spares = std::max(0, 2 - static_cast<int>(fv.size())) + extra;
    for (int i = 0; i < spares; ++i) fv.insert(v(base + "s" + std::to_string(i)));
    std::string name = v(base);
    if (!sig.declared(name)) sig.declare(name, fv);
    return mk_param(name, sig.lookup(name).fv);
  }

  ObjPtr unit(const std::string& a, const std::string& b) const {
    return mk_unit(v(a), v(b));
  }

  // A relabelling of the free entries, varied by the variant:
  // 0 -> rename the least entry, 1 -> rename everything, else identity.
  Bijection var_sigma(const FinSet& T) const {
    if (variant % 3 == 2) return Bijection::identity(T);
    if (variant % 3 == 0) return Bijection::renaming(T, *T.begin(), v("q0"));
    std::map<VarName, VarName, NatLess> m;
    int i = 1;
    for (const auto& t : T) m[v("q" + std::to_string(i++))] = t;
    return Bijection(std::move(m));
  }
};

FinSet objtype(const ObjPtr& w, const Signature& sig) { return typecheck_object(w, sig); }

}  // namespace

CellInstance cell_borders(Cell c, Signature& sig, int variant) {
  CB b{sig, cell_name(c).substr(0, 4) + std::to_string(variant) + "_", variant};
  if (cell_needs_units(c)) sig.units = true;
  int ex = variant;  // extra spare entries on the first factor

  switch (c) {
    case Cell::BetaPentagon: {
      ObjPtr f = b.leaf("f", {"x"}, ex), g = b.leaf("g", {"xb", "y"}),
             h = b.leaf("h", {"yb", "z"}), k = b.leaf("k", {"zb"});
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb"), z = b.v("z"),
              zb = b.v("zb");
      ArrowPtr lhs = mk_seq({mk_hcomp(mk_beta(f, g, h, x, xb, y, yb), z, zb, mk_id(k)),
                             mk_beta(f, mk_comp(g, y, yb, h), k, x, xb, z, zb),
                             mk_hcomp(mk_id(f), x, xb, mk_beta(g, h, k, y, yb, z, zb))});
      ArrowPtr rhs = mk_seq({mk_beta(mk_comp(f, x, xb, g), h, k, y, yb, z, zb),
                             mk_beta(f, g, mk_comp(h, z, zb, k), x, xb, y, yb)});
      return {lhs, rhs};
    }
    case Cell::BetaGammaHexagon: {
      ObjPtr f = b.leaf("f", {"x"}, ex), g = b.leaf("g", {"xb", "y"}), h = b.leaf("h", {"yb"});
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb");
      ArrowPtr lhs = mk_seq({mk_beta(f, g, h, x, xb, y, yb),
                             mk_gamma(f, mk_comp(g, y, yb, h), x, xb),
                             mk_hcomp(mk_gamma(g, h, y, yb), xb, x, mk_id(f)),
                             mk_beta(h, g, f, yb, y, xb, x)});
      ArrowPtr rhs = mk_seq({mk_hcomp(mk_gamma(f, g, x, xb), y, yb, mk_id(h)),
                             mk_gamma(mk_comp(g, xb, x, f), h, y, yb)});
      return {lhs, rhs};
    }
    case Cell::BetaGammaDecagon: {
      ObjPtr f = b.leaf("f", {"x"}, ex), g = b.leaf("g", {"xb", "y", "z"}),
             h = b.leaf("h", {"yb"}), k = b.leaf("k", {"zb"});
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb"), z = b.v("z"),
              zb = b.v("zb");
      ObjPtr fg = mk_comp(f, x, xb, g);
      ArrowPtr lhs = mk_seq({mk_hcomp(mk_gamma(fg, h, y, yb), z, zb, mk_id(k)),
                             mk_beta(h, fg, k, yb, y, z, zb),
                             mk_gamma(h, mk_comp(fg, z, zb, k), yb, y),
                             mk_hcomp(mk_beta(f, g, k, x, xb, z, zb), y, yb, mk_id(h)),
                             mk_beta(f, mk_comp(g, z, zb, k), h, x, xb, y, yb)});
      ArrowPtr rhs =
          mk_seq({mk_hcomp(mk_beta(f, g, h, x, xb, y, yb), z, zb, mk_id(k)),
                  mk_beta(f, mk_comp(g, y, yb, h), k, x, xb, z, zb),
                  mk_hcomp(mk_id(f), x, xb, mk_hcomp(mk_gamma(g, h, y, yb), z, zb, mk_id(k))),
                  mk_hcomp(mk_id(f), x, xb, mk_beta(h, g, k, yb, y, z, zb)),
                  mk_hcomp(mk_id(f), x, xb, mk_gamma(h, mk_comp(g, z, zb, k), yb, y))});
      return {lhs, rhs};
    }
    case Cell::GammaInvolution: {
      ObjPtr f = b.leaf("f", {"x"}, ex), g = b.leaf("g", {"xb"});
      VarName x = b.v("x"), xb = b.v("xb");
      ArrowPtr lhs = mk_seq({mk_gamma(f, g, x, xb), mk_gamma(g, f, xb, x)});
      ArrowPtr rhs = mk_id(mk_comp(f, x, xb, g));
      return {lhs, rhs};
    }
    case Cell::BetaSigma:
    case Cell::GammaSigma: {
      if (c == Cell::GammaSigma) {
        ObjPtr f = b.leaf("f", {"x"}, ex), g = b.leaf("g", {"y"});
        VarName x = b.v("x"), y = b.v("y");
        FinSet Xf = objtype(f, sig), Xg = objtype(g, sig);
        FinSet T = set_union(set_minus(Xf, x), set_minus(Xg, y));
        Bijection s = b.var_sigma(T);
        VarName x1 = variant == 0 ? x : b.v("x1");
        VarName y1 = variant == 0 ? y : b.v("y1");
        auto [s1, s2] = eps4_split(s, Xf, x, x1, Xg, y, y1);
        ArrowPtr lhs = mk_aact(mk_gamma(f, g, x, y), s);
        ArrowPtr rhs = mk_gamma(mk_act(f, s1), mk_act(g, s2), x1, y1);
        return {lhs, rhs};
      }
      ObjPtr f = b.leaf("f", {"x"}, ex), g = b.leaf("g", {"xb", "y"}), h = b.leaf("h", {"yb"});
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb");
      FinSet Xf = objtype(f, sig), Xg = objtype(g, sig), Xh = objtype(h, sig);
      FinSet T12 = objtype(mk_comp(f, x, xb, g), sig);
      FinSet T = set_union(set_minus(T12, y), set_minus(Xh, yb));
      Bijection s = b.var_sigma(T);
      VarName x1 = variant == 0 ? x : b.v("x1");
      VarName xb1 = variant == 0 ? xb : b.v("xb1");
      VarName y1 = variant == 0 ? y : b.v("y1");
      VarName yb1 = variant == 0 ? yb : b.v("yb1");
      auto [sL, s3] = eps4_split(s, T12, y, y1, Xh, yb, yb1);
      // sL carries the fresh point y1 -> y, which lands on g's side.
      auto [s1, s2] = eps4_split(sL, Xf, x, x1, Xg, xb, xb1);
      ArrowPtr lhs = mk_aact(mk_beta(f, g, h, x, xb, y, yb), s);
      ArrowPtr rhs =
          mk_beta(mk_act(f, s1), mk_act(g, s2), mk_act(h, s3), x1, xb1, y1, yb1);
      return {lhs, rhs};
    }
    case Cell::EqMor: {
      ObjPtr f1 = b.leaf("f1", {"p", "x"}, ex), f2 = b.leaf("f2", {"q"});
      ObjPtr g = b.leaf("g", {"y"});
      VarName p = b.v("p"), q = b.v("q"), x = b.v("x"), y = b.v("y");
      ObjPtr f = mk_comp(f1, p, q, f2);
      FinSet Xf = objtype(f, sig), Xg = objtype(g, sig);
      FinSet T = set_union(set_minus(Xf, x), set_minus(Xg, y));
      Bijection s = b.var_sigma(T);
      VarName x1 = variant == 0 ? x : b.v("x1");
      VarName y1 = variant == 0 ? y : b.v("y1");
      auto [s1, s2] = eps4_split(s, Xf, x, x1, Xg, y, y1);
      ArrowPtr phi = mk_gamma(f1, f2, p, q);
      ArrowPtr psi = mk_id(g);
      ArrowPtr lhs = mk_aact(mk_hcomp(phi, x, y, psi), s);
      ArrowPtr rhs = mk_hcomp(mk_aact(phi, s1), x1, y1, mk_aact(psi, s2));
      return {lhs, rhs};
    }
    case Cell::BetaEpsHexagon: {
      ObjPtr f = b.leaf("f", {"x"}, ex), g = b.leaf("g", {"xb", "y"}), h = b.leaf("h", {"yb"});
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb");
      VarName x1 = b.v("x1"), xb1 = b.v("xb1"), y1 = b.v("y1"), yb1 = b.v("yb1");
      FinSet Xf = objtype(f, sig), Xg = objtype(g, sig), Xh = objtype(h, sig);
      ObjPtr fg = mk_comp(f, x, xb, g);
      ObjPtr gh = mk_comp(g, y, yb, h);
      FinSet T12 = objtype(fg, sig);
      FinSet T = set_union(set_minus(T12, y), set_minus(Xh, yb));
      Bijection s = b.var_sigma(T);
      auto [sL, s2] = eps4_split(s, T12, y, y1, Xh, yb, yb1);
      auto [s11, s12] = eps4_split(sL, Xf, x, x1, Xg, xb, xb1);
      FinSet Tgh = objtype(gh, sig);
      auto [s11a, s3] = eps4_split(s, Xf, x, x1, Tgh, y, y1);
      (void)s11a;  // equals s11: restrictions commute
      ArrowPtr pathA =
          mk_seq({mk_aact(mk_beta(f, g, h, x, xb, y, yb), s),
                  mk_eps4(f, gh, x, xb, x1, xb1, s),
                  mk_hcomp(mk_id(mk_act(f, s11)), x1, xb1,
                           mk_eps4(g, h, y, yb, y1, yb1, s3))});
      ArrowPtr pathB = mk_seq({mk_eps4(fg, h, y, yb, y1, yb1, s),
                               mk_hcomp(mk_eps4(f, g, x, xb, x1, xb1, sL), y1, yb1,
                                        mk_id(mk_act(h, s2))),
                               mk_beta(mk_act(f, s11), mk_act(g, s12), mk_act(h, s2), x1, xb1,
                                       y1, yb1)});
      return {pathA, pathB};
    }
    case Cell::GammaEpsSquare: {
      ObjPtr f = b.leaf("f", {"x"}, ex), g = b.leaf("g", {"y"});
      VarName x = b.v("x"), y = b.v("y"), x1 = b.v("x1"), y1 = b.v("y1");
      FinSet Xf = objtype(f, sig), Xg = objtype(g, sig);
      FinSet T = set_union(set_minus(Xf, x), set_minus(Xg, y));
      Bijection s = b.var_sigma(T);
      auto [s1, s2] = eps4_split(s, Xf, x, x1, Xg, y, y1);
      ArrowPtr lhs = mk_seq({mk_aact(mk_gamma(f, g, x, y), s),
                             mk_eps4(g, f, y, x, y1, x1, s)});
      ArrowPtr rhs = mk_seq({mk_eps4(f, g, x, y, x1, y1, s),
                             mk_gamma(mk_act(f, s1), mk_act(g, s2), x1, y1)});
      return {lhs, rhs};
    }
    case Cell::BetaGammaIotaEpsHexagon1: {
      ObjPtr f = b.leaf("f", {"xb", "y"}, ex), g = b.leaf("g", {"yb"});
      ObjPtr u = b.unit("x", "z");
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb"), z = b.v("z");
      FinSet Xf = objtype(f, sig);
      ObjPtr fg = mk_comp(f, y, yb, g);
      FinSet Tfg = objtype(fg, sig);
      Bijection tau = Bijection::renaming(Tfg, xb, z);
      Bijection s1 = Bijection::renaming(Xf, xb, z);
      ArrowPtr pathR = mk_seq({mk_beta(u, f, g, x, xb, y, yb),
                               mk_gamma(u, fg, x, xb),
                               mk_iota(fg, xb, x, z),
                               mk_eps4(f, g, y, yb, y, yb, tau),
                               mk_hcomp(mk_id(mk_act(f, s1)), y, yb, mk_eps2(g))});
      ArrowPtr pathL = mk_seq({mk_hcomp(mk_gamma(u, f, x, xb), y, yb, mk_id(g)),
                               mk_hcomp(mk_iota(f, xb, x, z), y, yb, mk_id(g))});
      return {pathR, pathL};
    }
    case Cell::BetaGammaIotaEpsHexagon2: {
      ObjPtr f = b.leaf("f", {"x"}, ex), g = b.leaf("g", {"yb"});
      ObjPtr u = b.unit("xb", "y");
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb");
      FinSet Xf = objtype(f, sig), Xg = objtype(g, sig);
      Bijection s = Bijection::renaming(Xf, x, y);
      Bijection tau = Bijection::renaming(Xg, yb, xb);
      FinSet T = set_union(set_minus(Xf, x), set_minus(Xg, yb));
      Bijection idT = Bijection::identity(T);
      ObjPtr mid = mk_comp(f, x, yb, g);
      ArrowPtr pathL = mk_seq({mk_hcomp(mk_iota(f, x, xb, y), y, yb, mk_id(g)),
                               mk_hcomp(mk_id(mk_act(f, s)), y, yb, mk_eps2(g, true)),
                               mk_eps4(f, g, x, yb, y, yb, idT, true),
                               mk_eps2(mid),
                               mk_eps2(mid, true),
                               mk_eps4(f, g, x, yb, x, xb, idT),
                               mk_hcomp(mk_eps2(f), x, xb, mk_id(mk_act(g, tau)))});
      ArrowPtr pathR = mk_seq({mk_beta(f, u, g, x, xb, y, yb),
                               mk_hcomp(mk_id(f), x, xb, mk_gamma(u, g, y, yb)),
                               mk_hcomp(mk_id(f), x, xb, mk_iota(g, yb, y, xb))});
      return {pathL, pathR};
    }
    case Cell::BetaIotaEpsSquare: {
      ObjPtr f = b.leaf("f", {"x"}, ex), g = b.leaf("g", {"xb", "y"});
      ObjPtr u = b.unit("yb", "z");
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb"), z = b.v("z");
      FinSet Xg = objtype(g, sig);
      ObjPtr fg = mk_comp(f, x, xb, g);
      Bijection sc = Bijection::renaming(objtype(fg, sig), y, z);
      Bijection tau = Bijection::renaming(Xg, y, z);
      ArrowPtr path1 = mk_seq({mk_beta(f, g, u, x, xb, y, yb),
                               mk_hcomp(mk_id(f), x, xb, mk_iota(g, y, yb, z))});
      ArrowPtr path2 = mk_seq({mk_iota(fg, y, yb, z),
                               mk_eps4(f, g, x, xb, x, xb, sc),
                               mk_hcomp(mk_eps2(f), x, xb, mk_id(mk_act(g, tau)))});
      return {path1, path2};
    }
    case Cell::GammaIotaSquare: {
      ObjPtr f = b.leaf("f", {"x", "y"}, ex), g = b.leaf("g", {"yb"});
      ObjPtr u = b.unit("xb", "w");
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb"), w = b.v("w");
      FinSet Xf = objtype(f, sig);
      Bijection s = Bijection::renaming(Xf, x, w);
      ObjPtr fu = mk_comp(f, x, xb, u);
      ArrowPtr path1 = mk_seq({mk_gamma(fu, g, y, yb),
                               mk_hcomp(mk_id(g), yb, y, mk_iota(f, x, xb, w))});
      ArrowPtr path2 = mk_seq({mk_hcomp(mk_iota(f, x, xb, w), y, yb, mk_id(g)),
                               mk_gamma(mk_act(f, s), g, y, yb)});
      return {path1, path2};
    }
    case Cell::EpsIotaSquare: {
      ObjPtr f = b.leaf("f", {"z", "x"}, ex), g = b.leaf("g", {"xb"}, 1);
      ObjPtr u1 = b.unit("u", "q");
      VarName z = b.v("z"), x = b.v("x"), xb = b.v("xb"), u = b.v("u"), q = b.v("q");
      FinSet Xf = objtype(f, sig), Xg = objtype(g, sig);
      ObjPtr c0 = mk_comp(f, z, u, u1);
      FinSet TC = set_union(set_minus(objtype(c0, sig), x), set_minus(Xg, xb));
      // tau relabels only the g side
      VarName gs = *set_minus(Xg, xb).begin();
      Bijection tau = variant % 3 == 2 ? Bijection::identity(TC)
                                       : Bijection::renaming(TC, gs, b.v("q9"));
      Bijection kappa1 = Bijection::renaming(Xf, z, q);
      // g-side split of tau
      std::map<VarName, VarName, NatLess> m2;
      for (const auto& [kk, vv] : tau.pairs())
        if (set_minus(Xg, xb).count(vv)) m2[kk] = vv;
      m2[xb] = xb;
      Bijection kappa2{std::move(m2)};
      ObjPtr fk = mk_act(f, kappa1);
      ArrowPtr path1 = mk_seq({mk_aact(mk_hcomp(mk_iota(f, z, u, q), x, xb, mk_id(g)), tau),
                               mk_eps4(fk, g, x, xb, x, xb, tau),
                               mk_hcomp(mk_eps2(fk), x, xb, mk_id(mk_act(g, kappa2)))});
      ArrowPtr path2 = mk_seq({mk_eps4(c0, g, x, xb, x, xb, tau),
                               mk_hcomp(mk_eps2(c0), x, xb, mk_id(mk_act(g, kappa2))),
                               mk_hcomp(mk_iota(f, z, u, q), x, xb, mk_id(mk_act(g, kappa2)))});
      return {path1, path2};
    }
    case Cell::IotaEpsNuSquare: {
      ObjPtr f = b.leaf("f", {"x"}, ex);
      ObjPtr u = b.unit("y", "z");
      VarName x = b.v("x"), y = b.v("y"), z = b.v("z"), x1 = b.v("x1"), y1 = b.v("y1");
      FinSet Xf = objtype(f, sig);
      FinSet T = set_union(set_minus(Xf, x), FinSet{z});
      Bijection s = b.var_sigma(T);
      Bijection kap = Bijection::renaming(Xf, x, z);
      auto [s1, s2] = eps4_split(s, Xf, x, x1, FinSet{y, z}, y, y1);
      VarName vv = s2.preimage(z);
      Bijection kp = Bijection::renaming(s1.dom(), x1, vv);
      ArrowPtr path1 = mk_seq({mk_aact(mk_iota(f, x, y, z), s), mk_eps3(f, kap, s)});
      ArrowPtr path2 = mk_seq({mk_eps4(f, u, x, y, x1, y1, s),
                               mk_hcomp(mk_id(mk_act(f, s1)), x1, y1, mk_nu(y, z, y1, vv)),
                               mk_iota(mk_act(f, s1), x1, y1, vv),
                               mk_eps3(f, s1, kp)});
      return {path1, path2};
    }
    case Cell::GammaIotaNuPentagon: {
      VarName x = b.v("x"), y = b.v("y"), z = b.v("z"), u = b.v("u");
      ArrowPtr path1 = mk_seq({mk_iota(mk_unit(x, y), y, z, u), mk_nu(x, y, x, u)});
      ArrowPtr path2 = mk_seq({mk_gamma(mk_unit(x, y), mk_unit(z, u), y, z),
                               mk_iota(mk_unit(z, u), z, y, x), mk_nu(z, u, x, u)});
      return {path1, path2};
    }
    case Cell::IotaNuPentagon: {
      VarName x = b.v("x"), y = b.v("y"), z = b.v("z"), u = b.v("u"), w = b.v("w");
      std::map<VarName, VarName, NatLess> m;
      m[x] = x;
      m[u] = y;
      Bijection s0{std::move(m)};
      ObjPtr udec = mk_act(mk_unit(x, y), s0);
      Bijection sc = udec->act;
      Bijection tau = Bijection::renaming(FinSet{x, u}, u, w);
      ArrowPtr path1 = mk_seq({mk_iota(udec, u, z, w), mk_eps3(mk_unit(x, y), sc, tau),
                               mk_nu(x, y, x, w)});
      ArrowPtr path2 = mk_seq({mk_hcomp(mk_nu(x, y, x, u), u, z, mk_id(mk_unit(z, w))),
                               mk_iota(mk_unit(x, u), u, z, w), mk_nu(x, u, x, w)});
      return {path1, path2};
    }
    case Cell::NuSigma: {
      VarName x = b.v("x"), y = b.v("y"), u = b.v("u"), vv = b.v("v"), p = b.v("p"),
              q = b.v("q");
      std::map<VarName, VarName, NatLess> m;
      m[p] = u;
      m[q] = vv;
      Bijection s{std::move(m)};
      ArrowPtr lhs = mk_aact(mk_nu(x, y, u, vv), s);
      ArrowPtr rhs = mk_nu(x, y, p, q);
      return {lhs, rhs};
    }
    case Cell::NuInvolution: {
      VarName x = b.v("x"), y = b.v("y"), u = b.v("u"), vv = b.v("v");
      return {mk_nu(x, y, u, vv), mk_nu(x, y, vv, u)};
    }
    case Cell::ThetaInvolution: {
      ObjPtr f = b.leaf("f", {"x", "y"}, ex), g = b.leaf("g", {"xb"}), h = b.leaf("h", {"yb"});
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb");
      ArrowPtr lhs = mk_seq({theta_arrow(f, g, h, x, xb, y, yb),
                             theta_arrow(f, h, g, y, yb, x, xb)});
      ArrowPtr rhs = mk_id(mk_comp(mk_comp(f, x, xb, g), y, yb, h));
      return {lhs, rhs};
    }
    case Cell::BetaThetaPentagon: {
      ObjPtr f = b.leaf("f", {"x", "y"}, ex), g = b.leaf("g", {"xb", "z"}),
             h = b.leaf("h", {"yb"}), k = b.leaf("k", {"zb"});
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb"), z = b.v("z"),
              zb = b.v("zb");
      ArrowPtr lhs = mk_seq({mk_hcomp(theta_arrow(f, g, h, x, xb, y, yb), z, zb, mk_id(k)),
                             mk_beta(mk_comp(f, y, yb, h), g, k, x, xb, z, zb),
                             theta_arrow(f, h, mk_comp(g, z, zb, k), y, yb, x, xb)});
      ArrowPtr rhs = mk_seq({theta_arrow(mk_comp(f, x, xb, g), h, k, y, yb, z, zb),
                             mk_hcomp(mk_beta(f, g, k, x, xb, z, zb), y, yb, mk_id(h))});
      return {lhs, rhs};
    }
    case Cell::ThetaHexagon: {
      ObjPtr f = b.leaf("f", {"x", "y", "z"}, ex), g = b.leaf("g", {"xb"}),
             h = b.leaf("h", {"yb"}), k = b.leaf("k", {"zb"});
      VarName x = b.v("x"), xb = b.v("xb"), y = b.v("y"), yb = b.v("yb"), z = b.v("z"),
              zb = b.v("zb");
      ArrowPtr lhs = mk_seq({theta_arrow(mk_comp(f, x, xb, g), h, k, y, yb, z, zb),
                             mk_hcomp(theta_arrow(f, g, k, x, xb, z, zb), y, yb, mk_id(h)),
                             theta_arrow(mk_comp(f, z, zb, k), g, h, x, xb, y, yb)});
      ArrowPtr rhs = mk_seq({mk_hcomp(theta_arrow(f, g, h, x, xb, y, yb), z, zb, mk_id(k)),
                             theta_arrow(mk_comp(f, y, yb, h), g, k, x, xb, z, zb),
                             mk_hcomp(theta_arrow(f, h, k, y, yb, z, zb), x, xb, mk_id(g))});
      return {lhs, rhs};
    }
  }
  throw TypeError("unknown cell");
}

}  // namespace cyco
