#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyco/alpha.hpp"
#include "cyco/parser.hpp"
#include "cyco/reduce1.hpp"

using namespace cyco;

TEST_CASE("leaf actions fuse into decorations") {
  Signature sig;
  ObjPtr w = parse_object("a{x,y}^[u->x,w->y]", sig);
  ObjPtr n = nf_object(w, sig);
  CHECK(print_object(n) == "a^[u->x,w->y]");
  // already-normal terms are untouched
  CHECK(print_object(nf_object(n, sig)) == "a^[u->x,w->y]");
}

TEST_CASE("identity action over a composition disappears keeping names") {
  Signature sig;
  ObjPtr w = parse_object("(a{x,y} x<>u b{u,v})^[y->y,v->v]", sig);
  ObjPtr n = nf_object(w, sig);
  CHECK(print_object(n) == "(a{x,y} x<>u b{u,v})");
  // and is alpha-equivalent to the primed choice
  ObjPtr primed = parse_object("(a^[x2->x,y->y] x2<>u2 b^[u2->u,v->v])", sig);
  CHECK(alpha_eq(n, primed, sig));
}

TEST_CASE("stacked actions reduce like their composite") {
  Signature sig;
  ObjPtr w1 = parse_object("(a{x,y} x<>u b{u,v})^[s->y,t->v]^[m->s,n->t]", sig);
  ObjPtr w2 = parse_object("(a{x,y} x<>u b{u,v})^[m->y,n->v]", sig);
  CHECK(print_object(nf_object(w1, sig)) == print_object(nf_object(w2, sig)));
}

TEST_CASE("a non-identity action pushes to the leaves") {
  Signature sig;
  ObjPtr w = parse_object("(a{x,y} x<>u b{u,v})^[s->y,v->v]", sig);
  ObjPtr n = nf_object(w, sig);
  CHECK(print_object(n) == "(a^[s->y,x->x] x<>u b{u,v})");
  CHECK(is_sym_free(n));
  CHECK(typecheck_object(n, sig) == typecheck_object(w, sig));
}

TEST_CASE("all normal forms are pairwise alpha-equivalent") {
  Signature sig;
  ObjPtr w = parse_object("((a{x,y} x<>u b{u,v}) y<>p c{p,q})^[s->v,r->q]", sig);
  auto all = nf_all_objects(w, sig, 2);
  CHECK(all.size() >= 2);
  for (const auto& n1 : all)
    for (const auto& n2 : all) CHECK(alpha_eq(n1, n2, sig));
  // the canonical choice is among them
  ObjPtr can = nf_object(w, sig);
  bool found = false;
  for (const auto& n : all) found = found || obj_equal(n, can);
  CHECK(found);
}

TEST_CASE("NF of a leaf is the leaf") {
  Signature sig;
  ObjPtr w = parse_object("a{x,y}", sig);
  auto all = nf_all_objects(w, sig, 3);
  CHECK(all.size() == 1);
  CHECK(obj_equal(all[0], w));
}

TEST_CASE("nf_object_arrow witnesses the reduction") {
  Signature sig;
  ObjPtr w = parse_object("((a{x,y} x<>u b{u,v}) y<>p c{p,q})^[s->v,r->q]", sig);
  ArrowPtr e = nf_object_arrow(w, sig);
  ArrowType t = typecheck_arrow(e, sig);
  CHECK(obj_equal(t.src, w));
  CHECK(obj_equal(t.tgt, nf_object(w, sig)));
}

TEST_CASE("arrow normal forms of the eps generators are identities") {
  Signature sig;
  ArrowPtr e3 = parse_arrow("eps3([u->x,w->y],[p->u,r->w] | a{x,y})", sig);
  ArrowPtr n3 = nf_arrow(e3, sig);
  CHECK(n3->kind == AK::Id);
  CHECK(print_object(n3->objs[0]) == "a^[p->x,r->y]");

  ArrowPtr e2 = parse_arrow("eps2((a{x,y} x<>u b{u,v}))", sig);
  ArrowPtr n2 = nf_arrow(e2, sig);
  CHECK(n2->kind == AK::Id);
  CHECK(print_object(n2->objs[0]) == "(a{x,y} x<>u b{u,v})");
}

TEST_CASE("an acted gamma reduces to a reindexed gamma") {
  Signature sig;
  ArrowPtr g = parse_arrow("gamma(x,u | a{x,y}, b{u,v})^[s->y,v->v]", sig);
  ArrowPtr n = nf_arrow(g, sig);
  CHECK(n->kind == AK::Gamma);
  CHECK(n->vars[0] == "x");
  CHECK(n->vars[1] == "u");
  CHECK(print_object(n->objs[0]) == "a^[s->y,x->x]");
  // the loose arrow typechecks
  CHECK_NOTHROW(typecheck_arrow(n, sig, CompRule::Loose));
}

TEST_CASE("an acted identity reduces to the identity on the normal form") {
  Signature sig;
  ArrowPtr i = parse_arrow("1((a{x,y} x<>u b{u,v}))^[s->y,v->v]", sig);
  ArrowPtr n = nf_arrow(i, sig);
  CHECK(n->kind == AK::Id);
  CHECK(print_object(n->objs[0]) == "(a^[s->y,x->x] x<>u b{u,v})");
}

TEST_CASE("transfer cases") {
  Signature sig;
  ObjPtr u = parse_object("(a{x,y} x<>u b{u,v})", sig);
  ObjPtr up = parse_object("(a^[x2->x,y->y] x2<>u2 b^[u2->u,v->v])", sig);
  // identity transfers to the identity on the new source
  ArrowPtr t1 = transfer(mk_id(u), up, sig);
  CHECK(t1->kind == AK::Id);
  CHECK(obj_equal(t1->objs[0], up));
  // gamma transfers with primed indices
  ArrowPtr g = mk_gamma(u->left, u->right, "x", "u");
  ArrowPtr t2 = transfer(g, up, sig);
  CHECK(t2->kind == AK::Gamma);
  CHECK(t2->vars[0] == "x2");
  CHECK(t2->vars[1] == "u2");
  // beta transfers with primed indices
  Signature sig2;
  ObjPtr s = parse_object("((f{f1,x} x<>xb g{xb,y}) y<>yb h{h1,yb})", sig2);
  ObjPtr sp = parse_object("((f^[f1->f1,x9->x] x9<>xb g{xb,y}) y<>yb h{h1,yb})", sig2);
  ArrowPtr bt = parse_arrow("beta(x,xb;y,yb | f{f1,x}, g{xb,y}, h{h1,yb})", sig2);
  ArrowPtr t3 = transfer(bt, sp, sig2);
  CHECK(t3->kind == AK::Beta);
  CHECK(t3->vars[0] == "x9");
  ArrowType tt = typecheck_arrow(t3, sig2);
  CHECK(obj_equal(tt.src, sp));
  CHECK(alpha_eq(tt.tgt, typecheck_arrow(bt, sig2).tgt, sig2));
  // transfer onto a non-equivalent source is rejected
  CHECK_THROWS_AS(transfer(g, s, sig2), TypeError);
}

TEST_CASE("transfer of horizontal compositions with renamed interfaces") {
  Signature sig;
  ObjPtr u = parse_object("((a{x,y} x<>u b{u,v}) y<>p c{p,q})", sig);
  ObjPtr up = parse_object("((a^[x3->x,y->y] x3<>u3 b^[u3->u,v->v]) y<>p c{p,q})", sig);
  ArrowPtr g = mk_gamma(parse_object("a{x,y}", sig), parse_object("b{u,v}", sig), "x", "u");
  ArrowPtr h = mk_hcomp(g, "y", "p", mk_id(parse_object("c{p,q}", sig)));
  ArrowPtr t = transfer(h, up, sig);
  ArrowType tt = typecheck_arrow(t, sig);
  CHECK(obj_equal(tt.src, up));
  CHECK(alpha_eq(tt.tgt, typecheck_arrow(h, sig).tgt, sig));
  CHECK(count_gammas(t) == 1);
}

TEST_CASE("red1 on identities and simple generators") {
  Signature sig;
  ArrowPtr i = parse_arrow("1(a{x,y}^[u->x,w->y])", sig);
  ArrowPtr r = red1(i, sig);
  CHECK(r->kind == AK::Id);
  CHECK(print_object(r->objs[0]) == "a^[u->x,w->y]");

  ArrowPtr g = parse_arrow("gamma(x,u | a{x,y}, b{u,v})^[y->y,v->v]", sig);
  ArrowPtr rg = red1(g, sig);
  CHECK(rg->kind == AK::Gamma);
  CHECK(rg->vars[0] == "x");
  CHECK(rg->vars[1] == "u");
}

TEST_CASE("red1 outputs are strict symmetry-free arrows with the nf source") {
  Signature sig;
  std::vector<std::string> samples = {
      "gamma(x,u | a{x,y}, b{u,v})^[s->y,v->v]",
      "eps2((a{x,y} x<>u b{u,v})) ; gamma(x,u | a{x,y}, b{u,v})",
      "(gamma(x,u | a{x,y}, b{u,v}) y<>p 1(c{p,q}))^[s->v,r->q]",
      "eps4(x,u;x2,u2 | [w->y,z->v] | a{x,y}, b{u,v}) ; "
      "gamma(x2,u2 | a{x,y}^[w->y,x2->x], b{u,v}^[u2->u,z->v])",
  };
  for (const auto& s : samples) {
    CAPTURE(s);
    Signature fresh;
    ArrowPtr f = parse_arrow(s, fresh);
    ArrowType t0 = typecheck_arrow(f, fresh);
    ArrowPtr r = red1(f, fresh);
    ArrowType t1 = typecheck_arrow(r, fresh);  // strict typing must succeed
    CHECK(obj_equal(t1.src, nf_object(t0.src, fresh)));
    CHECK(alpha_eq(t1.tgt, nf_object(t0.tgt, fresh), fresh));
    CHECK(is_sym_free(t1.src));
    CHECK(is_sym_free(t1.tgt));
    CHECK(generator_sign(r) == generator_sign(f));
  }
}

TEST_CASE("parallel arrows reduce to parallel arrows") {
  Signature sig;
  // the two borders of the involution square share endpoints
  ArrowPtr f = parse_arrow(
      "gamma(x,u | a{x,y}, b{u,v}) ; gamma(u,x | b{u,v}, a{x,y})", sig);
  ArrowPtr g = parse_arrow("1((a{x,y} x<>u b{u,v}))", sig);
  ArrowPtr rf = red1(f, sig);
  ArrowPtr rg = red1(g, sig);
  ArrowType tf = typecheck_arrow(rf, sig);
  ArrowType tg = typecheck_arrow(rg, sig);
  CHECK(obj_equal(tf.src, tg.src));
  CHECK(obj_equal(tf.tgt, tg.tgt));
}

TEST_CASE("alpha_canonical repairs aliased bound names") {
  Signature sig;
  ObjPtr alias = parse_object("(a{x,z} x<>y b{y,x})", sig);
  ObjPtr fixed = alpha_canonical(alias, sig);
  CHECK(leaf_vars_disjoint(fixed));
  CHECK(alpha_eq(alias, fixed, sig));
  // disjoint inputs pass through unchanged
  Signature sig2;
  ObjPtr good = parse_object("(a{x,z} x<>y b{y,w})", sig2);
  CHECK(obj_equal(alpha_canonical(good, sig2), good));
}

TEST_CASE("push_rename reaches the substituted term") {
  Signature sig;
  ObjPtr w = parse_object("(a{x,y} x<>u b{u,v})", sig);
  ArrowPtr p = push_rename(w, "y", "y9", sig);
  ArrowType t = typecheck_arrow(p, sig);
  CHECK(obj_equal(t.tgt, subst_entry(w, "y", "y9")));
}

TEST_CASE("normalisation terminates within fuel on nested stacks") {
  Signature sig;
  std::string deep = "(a{x,y} x<>u b{u,v})";
  Signature s2;
  ObjPtr w = parse_object(deep, s2);
  FinSet ty = typecheck_object(w, s2);
  for (int i = 0; i < 10; ++i) w = mk_act(w, Bijection::identity(ty));
  CHECK_NOTHROW(nf_object(w, s2));
  CHECK(print_object(nf_object(w, s2)) == deep);
}
