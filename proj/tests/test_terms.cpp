#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyco/parser.hpp"
#include "cyco/terms.hpp"

using namespace cyco;

namespace {

Signature base_sig() {
  Signature s;
  s.declare("a", FinSet{"x", "y"});
  s.declare("b", FinSet{"u", "v"});
  s.declare("c", FinSet{"p", "q"});
  return s;
}

ObjPtr obj(Signature& sig, const std::string& text) { return parse_object(text, sig); }
ArrowPtr arr(Signature& sig, const std::string& text) { return parse_arrow(text, sig); }

}  // namespace

TEST_CASE("object typing basics") {
  Signature sig;
  sig.declare("a", FinSet{"x", "y", "z"});
  CHECK(typecheck_object(obj(sig, "a{x,y,z}"), sig) == FinSet{"x", "y", "z"});

  Signature sig2;
  CHECK(typecheck_object(obj(sig2, "(a{x,y} x<>u b{u,v})"), sig2) == FinSet{"y", "v"});

  Signature sig3;
  ObjPtr clash = obj(sig3, "(a{x,y} x<>u b{u,y})");
  CHECK_THROWS_WITH_AS(typecheck_object(clash, sig3), doctest::Contains("entry clash on y"),
                       TypeError);
}

TEST_CASE("typing of the two-corolla tree composition") {
  Signature sig;
  ObjPtr w = obj(sig, "(a{x1,x2,x3,x4,x5} x5<>y2 b{y1,y2,y3,y4})");
  CHECK(print_finset(typecheck_object(w, sig)) == "{x1,x2,x3,x4,y1,y3,y4}");
}

TEST_CASE("unknown parameter and decoration mismatch") {
  Signature sig = base_sig();
  CHECK_THROWS_AS(typecheck_object(mk_param("zzz", FinSet{"x", "y"}), sig), TypeError);
  CHECK_THROWS_AS(typecheck_object(mk_param("a", FinSet{"x", "w"}), sig), TypeError);
  // decorated leaf a^[x9->x, y->y]
  Bijection dec = parse_bijection("[x9->x,y->y]");
  CHECK(typecheck_object(mk_param("a", dec), sig) == FinSet{"x9", "y"});
}

TEST_CASE("action typing") {
  Signature sig = base_sig();
  ObjPtr w = obj(sig, "a{x,y}^[u->x,w->y]");
  CHECK(typecheck_object(w, sig) == FinSet{"u", "w"});
  ObjPtr bad = obj(sig, "a{x,y}^[u->x,w->z]");
  CHECK_THROWS_AS(typecheck_object(bad, sig), TypeError);
}

TEST_CASE("units only in unit mode") {
  Signature sig = base_sig();
  CHECK_THROWS_AS(typecheck_object(mk_unit("x", "y"), sig), TypeError);
  sig.units = true;
  CHECK(typecheck_object(mk_unit("y", "x"), sig) == FinSet{"x", "y"});
  CHECK(print_object(mk_unit("y", "x")) == "id{x,y}");
}

TEST_CASE("constant-free toggle") {
  Signature sig;
  CHECK_THROWS_AS(sig.declare("one", FinSet{"x"}), TypeError);
  Signature loose;
  loose.constant_free = false;
  loose.declare("one", FinSet{"x"});
  CHECK(loose.lookup("one").fv == FinSet{"x"});
}

TEST_CASE("arrow typing: identity and gamma") {
  Signature sig = base_sig();
  ObjPtr a = obj(sig, "a{x,y}");
  ObjPtr b = obj(sig, "b{u,v}");
  ArrowType t = typecheck_arrow(mk_id(a), sig);
  CHECK(obj_equal(t.src, a));
  CHECK(obj_equal(t.tgt, a));
  ArrowType g = typecheck_arrow(mk_gamma(a, b, "x", "u"), sig);
  CHECK(print_object(g.src) == "(a{x,y} x<>u b{u,v})");
  CHECK(print_object(g.tgt) == "(b{u,v} u<>x a{x,y})");
}

TEST_CASE("arrow typing: beta over the pentagon top edge") {
  Signature sig;
  sig.declare("f", FinSet{"x", "f1"});
  sig.declare("g", FinSet{"xb", "y"});
  sig.declare("h", FinSet{"yb", "z"});
  sig.declare("k", FinSet{"zb", "k1"});
  ArrowPtr top = arr(sig,
                     "(beta(x,xb;y,yb | f{f1,x}, g{xb,y}, h{yb,z}) z<>zb 1(k{k1,zb}))");
  ArrowType t = typecheck_arrow(top, sig);
  CHECK(print_object(t.src) ==
        "(((f{f1,x} x<>xb g{xb,y}) y<>yb h{yb,z}) z<>zb k{k1,zb})");
  CHECK(print_object(t.tgt) ==
        "((f{f1,x} x<>xb (g{xb,y} y<>yb h{yb,z})) z<>zb k{k1,zb})");
  // beta's middle-factor side condition
  CHECK_THROWS_AS(
      typecheck_arrow(arr(sig, "beta(x,xb;f1,yb | f{f1,x}, g{xb,y}, h{yb,z})"), sig),
      TypeError);
}

TEST_CASE("vertical composition needs matching middles") {
  Signature sig = base_sig();
  ArrowPtr gg = arr(sig, "gamma(x,u | a{x,y}, b{u,v}) ; gamma(u,x | b{u,v}, a{x,y})");
  CHECK_NOTHROW(typecheck_arrow(gg, sig));
  ArrowPtr bad = arr(sig, "gamma(x,u | a{x,y}, b{u,v}) ; gamma(x,u | a{x,y}, b{u,v})");
  CHECK_THROWS_AS(typecheck_arrow(bad, sig), TypeError);
}

TEST_CASE("eps generators typecheck") {
  Signature sig = base_sig();
  ArrowPtr e1 = arr(sig, "eps1([u->x,w->y] | a{x,y})");
  ArrowType t1 = typecheck_arrow(e1, sig);
  CHECK(print_object(t1.src) == "a{x,y}^[u->x,w->y]");
  CHECK(print_object(t1.tgt) == "a^[u->x,w->y]");

  ArrowPtr e2 = arr(sig, "eps2((a{x,y} x<>u b{u,v}))");
  ArrowType t2 = typecheck_arrow(e2, sig);
  CHECK(print_object(t2.src) == "(a{x,y} x<>u b{u,v})^[v->v,y->y]");

  ArrowPtr e3 = arr(sig, "eps3([u->x,w->y],[p->u,r->w] | a{x,y})");
  ArrowType t3 = typecheck_arrow(e3, sig);
  CHECK(print_object(t3.tgt) == "a{x,y}^[p->x,r->y]");

  ArrowPtr e4 = arr(sig, "eps4(x,u;x2,u2 | [w->y,z->v] | a{x,y}, b{u,v})");
  ArrowType t4 = typecheck_arrow(e4, sig);
  CHECK(print_object(t4.src) == "(a{x,y} x<>u b{u,v})^[w->y,z->v]");
  CHECK(print_object(t4.tgt) == "(a{x,y}^[w->y,x2->x] x2<>u2 b{u,v}^[u2->u,z->v])");

  // eps4inv with the (sigma1, sigma2) spelling normalizes to the same data
  ArrowPtr e4i = arr(sig, "eps4inv(x,u;x2,u2 | [w->y,x2->x] ; [u2->u,z->v] | a{x,y}, b{u,v})");
  ArrowType t4i = typecheck_arrow(e4i, sig);
  CHECK(obj_equal(t4i.src, t4.tgt));
  CHECK(obj_equal(t4i.tgt, t4.src));
}

TEST_CASE("generator signs") {
  Signature sig = base_sig();
  ObjPtr a = obj(sig, "a{x,y}");
  ObjPtr b = obj(sig, "b{u,v}");
  CHECK(generator_sign(mk_id(a)) == 1);
  ArrowPtr g = mk_gamma(a, b, "x", "u");
  CHECK(generator_sign(g) == -1);
  ArrowPtr gg = mk_vcomp(g, mk_gamma(b, a, "u", "x"));
  CHECK(generator_sign(gg) == 1);
  // multiplicative under both compositions, action preserves sign
  ArrowPtr h = mk_hcomp(g, "y", "v", mk_id(b));
  CHECK(generator_sign(h) == -1);
  SignTable flip;
  flip.gamma = 1;
  CHECK(generator_sign(g, flip) == 1);
}

TEST_CASE("printer and parser round-trip byte-identically") {
  Signature sig;
  std::vector<std::string> objects = {
      "a{x,y}",
      "a^[u->x,w->y]",
      "(a{x,y} x<>u b{u,v})",
      "(a{x,y} x<>u b{u,v})^[s->v,t->y]",
      "((a{x,y} x<>u b{u,v}) y<>p c{p,q})",
      "id{x,y}",
  };
  for (const auto& s : objects) {
    Signature fresh;
    fresh.units = true;
    ObjPtr w = parse_object(s, fresh);
    CHECK(print_object(w) == s);
    ObjPtr again = parse_object(print_object(w), fresh);
    CHECK(obj_equal(w, again));
  }
  std::vector<std::string> arrows = {
      "1(a{x,y})",
      "gamma(x,u | a{x,y}, b{u,v})",
      "beta(x,xb;y,yb | f{f1,x}, g{xb,y}, h{yb,z})",
      "betainv(x,xb;y,yb | f{f1,x}, g{xb,y}, h{yb,z})",
      "gamma(x,u | a{x,y}, b{u,v}) ; 1((b{u,v} u<>x a{x,y}))",
      "(gamma(x,u | a{x,y}, b{u,v}) y<>p 1(c{p,q}))",
      "eps2((a{x,y} x<>u b{u,v}))",
      "1(a{x,y})^[u->x,w->y]",
      "iota(x,y,z | a{x,y})",
      "nu(x,y;u,v)",
  };
  for (const auto& s : arrows) {
    Signature fresh;
    fresh.units = true;
    ArrowPtr f = parse_arrow(s, fresh);
    CHECK(print_arrow(f) == s);
    ArrowPtr again = parse_arrow(print_arrow(f), fresh);
    CHECK(arrow_equal(f, again));
  }
}

TEST_CASE("iota and nu typing") {
  Signature sig = base_sig();
  sig.units = true;
  ArrowPtr i = mk_iota(mk_param("a", FinSet{"x", "y"}), "x", "w", "z");
  ArrowType t = typecheck_arrow(i, sig);
  CHECK(print_object(t.src) == "(a{x,y} x<>w id{w,z})");
  CHECK(print_object(t.tgt) == "a{x,y}^[y->y,z->x]");
  ArrowPtr n = mk_nu("x", "y", "u", "v");
  ArrowType tn = typecheck_arrow(n, sig);
  CHECK(print_object(tn.tgt) == "id{u,v}");
}

TEST_CASE("parse errors carry a location") {
  Signature sig;
  try {
    parse_object("(a{x,y} x<> b{u,v})", sig);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("1:") != std::string::npos);
  }
}
