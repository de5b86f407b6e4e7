#ifndef CYCO_TERMS_HPP
#define CYCO_TERMS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyco/names.hpp"

namespace cyco {

// A signature parameter: a named operation with a set of entries.
struct Parameter {
  std::string name;
  FinSet fv;
};

struct Signature {
  std::map<std::string, Parameter> params;
  bool units = false;          // enable id{x,y}, iota, nu
  bool constant_free = true;   // require |fv| >= 2

  void declare(const std::string& name, const FinSet& fv);
  const Parameter& lookup(const std::string& name) const;
  bool declared(const std::string& name) const { return params.count(name) != 0; }
};

struct Obj;
using ObjPtr = std::shared_ptr<const Obj>;

// Object terms: decorated parameter leaves a^sigma, partial compositions
// (W1 x<>y W2), actions W^sigma, and (in unit mode) units id{x,y}.
struct Obj {
  enum class Kind { Param, Comp, Act, Unit };
  Kind kind;

  // Param: base name plus decoration dec : fv(term) -> fv(base).
  std::string param;
  Bijection dec;

  // Comp
  ObjPtr left, right;
  VarName x, y;

  // Act
  ObjPtr body;
  Bijection act;

  // Unit reuses x, y (stored sorted).
};

ObjPtr mk_param(const std::string& name, const Bijection& dec);
// Identity decoration on the given entry set.
ObjPtr mk_param(const std::string& name, const FinSet& fv);
ObjPtr mk_comp(ObjPtr l, const VarName& x, const VarName& y, ObjPtr r);
ObjPtr mk_act(ObjPtr body, const Bijection& act);
ObjPtr mk_unit(const VarName& x, const VarName& y);

bool obj_equal(const ObjPtr& a, const ObjPtr& b);
bool is_sym_free(const ObjPtr& w);   // no Act, no Unit
bool has_unit(const ObjPtr& w);
std::string print_object(const ObjPtr& w);

// All variable names textually occurring in the term (free or composed).
FinSet obj_all_vars(const ObjPtr& w);
// Leaves in left-to-right order.
std::vector<ObjPtr> obj_leaves(const ObjPtr& w);

FinSet typecheck_object(const ObjPtr& w, const Signature& sig);

// ---------------------------------------------------------------------------

struct Arrow;
using ArrowPtr = std::shared_ptr<const Arrow>;

enum class AK {
  Id,
  Beta,
  BetaInv,
  Gamma,
  Eps1,
  Eps1Inv,
  Eps2,
  Eps2Inv,
  Eps3,
  Eps3Inv,
  Eps4,
  Eps4Inv,
  Iota,
  Nu,
  VComp,
  HComp,
  Act
};

// Canonical arrow terms. Field use per kind:
//   Id:      objs={W}
//   Beta*:   objs={W1,W2,W3}, vars={x,xb,y,yb}
//   Gamma:   objs={W1,W2}, vars={x,y}
//   Eps1*:   objs={param leaf}, bijs={sigma}
//   Eps2*:   objs={W}
//   Eps3*:   objs={W}, bijs={sigma,tau}
//   Eps4*:   objs={W1,W2}, vars={x,y,xp,yp}, bijs={sigma}
//   Iota:    objs={W}, vars={x,y,z}            (iota^{x,y}_{W,id{y,z}})
//   Nu:      vars={x,y,u,v}                    (nu^{u,v}_{x,y})
//   VComp:   a=before, b=after                 (printed before;after)
//   HComp:   a=left, b=right, vars={x,y}
//   Act:     a=sub, bijs={sigma}
struct Arrow {
  AK kind;
  std::vector<ObjPtr> objs;
  std::vector<VarName> vars;
  std::vector<Bijection> bijs;
  ArrowPtr a, b;
};

ArrowPtr mk_id(ObjPtr w);
ArrowPtr mk_beta(ObjPtr w1, ObjPtr w2, ObjPtr w3, const VarName& x, const VarName& xb,
                 const VarName& y, const VarName& yb, bool inverse = false);
ArrowPtr mk_gamma(ObjPtr w1, ObjPtr w2, const VarName& x, const VarName& y);
ArrowPtr mk_eps1(ObjPtr leaf, const Bijection& sigma, bool inverse = false);
ArrowPtr mk_eps2(ObjPtr w, bool inverse = false);
ArrowPtr mk_eps3(ObjPtr w, const Bijection& sigma, const Bijection& tau, bool inverse = false);
ArrowPtr mk_eps4(ObjPtr w1, ObjPtr w2, const VarName& x, const VarName& y, const VarName& xp,
                 const VarName& yp, const Bijection& sigma, bool inverse = false);
ArrowPtr mk_iota(ObjPtr w, const VarName& x, const VarName& y, const VarName& z);
ArrowPtr mk_nu(const VarName& x, const VarName& y, const VarName& u, const VarName& v);
ArrowPtr mk_vcomp(ArrowPtr before, ArrowPtr after);
// Chain left-to-right: seq {f,g,h} = h o (g o f), printed f;g;h.
ArrowPtr mk_seq(const std::vector<ArrowPtr>& steps);
ArrowPtr mk_hcomp(ArrowPtr l, const VarName& x, const VarName& y, ArrowPtr r);
ArrowPtr mk_aact(ArrowPtr sub, const Bijection& sigma);

bool arrow_equal(const ArrowPtr& a, const ArrowPtr& b);
std::string print_arrow(const ArrowPtr& a);

enum class CompRule { Strict, Loose };

struct ArrowType {
  ObjPtr src, tgt;
};

// Typechecks and returns the endpoints. Loose mode allows vertical
// composition along alpha-equivalent middle objects (symmetry-free only).
ArrowType typecheck_arrow(const ArrowPtr& f, const Signature& sig,
                          CompRule rule = CompRule::Strict);

// For the eps4 typing rule: split sigma into (sigma1, sigma2) relative to the
// interface (x, y) and the chosen fresh names (xp, yp).
std::pair<Bijection, Bijection> eps4_split(const Bijection& sigma, const FinSet& X,
                                           const VarName& x, const VarName& xp, const FinSet& Y,
                                           const VarName& y, const VarName& yp);

struct SignTable {
  int gamma = -1;  // the odd assignment; +1 is the debug/negative-control table
};

// Multiplicative sign: product over generator occurrences, inverses counting
// as their generator. Everything except gamma is +1.
int generator_sign(const ArrowPtr& f, const SignTable& table = SignTable{});
int count_gammas(const ArrowPtr& f);

}  // namespace cyco

#endif
