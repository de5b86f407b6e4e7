#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyco/parser.hpp"
#include "cyco/trees.hpp"

using namespace cyco;

namespace {

UnrootedTree ex2_tree(Signature& sig) {
  return parse_tree(
      "tree{ a(x1,x2,x3,x4,x5); b(y1,y2,y3,y4); c(z1,z2,z3) | x5-y2, y3-z1 }", sig);
}

}  // namespace

TEST_CASE("parallel edges are rejected") {
  Signature sig;
  UnrootedTree g = parse_tree("tree{ a(x1,x2,x3,x4,x5); b(y1,y2,y3,y4) | x1-y1, x2-y2 }", sig);
  CHECK_THROWS_WITH_AS(validate_tree(g, sig), doctest::Contains("multiple edges"), TypeError);
}

TEST_CASE("the worked example tree validates") {
  Signature sig;
  UnrootedTree t = ex2_tree(sig);
  CHECK_NOTHROW(validate_tree(t, sig));
  CHECK(t.fv() == FinSet{"x1", "x2", "x3", "x4", "y1", "y4", "z2", "z3"});
  CHECK(t.edges().size() == 2);
}

TEST_CASE("loops, disconnection and duplicate half-edges are rejected") {
  Signature sig;
  UnrootedTree loop = parse_tree("tree{ a(x1,x2,x3) | x1-x2 }", sig);
  CHECK_THROWS_WITH_AS(validate_tree(loop, sig), doctest::Contains("loop"), TypeError);
  Signature s2;
  UnrootedTree disc = parse_tree("tree{ a(x1,x2); b(y1,y2) | }", s2);
  CHECK_THROWS_AS(validate_tree(disc, s2), TypeError);
}

TEST_CASE("decompose at an edge and reassemble") {
  Signature sig;
  UnrootedTree t = ex2_tree(sig);
  auto [t1, t2] = decompose(t, {"x5", "y2"});
  CHECK(t1.cors.size() == 1);
  CHECK(t1.cors[0].param == "a");
  CHECK(t2.cors.size() == 2);
  CHECK(t2.inv.at("y3") == "z1");
  CHECK(t1.fv().count("x5"));
  CHECK(t2.fv().count("y2"));
  CHECK_THROWS_AS(decompose(t, {"x1", "y1"}), TypeError);
  // reassembly
  UnrootedTree r;
  r.cors = t1.cors;
  r.cors.insert(r.cors.end(), t2.cors.begin(), t2.cors.end());
  r.inv = t1.inv;
  for (const auto& [k, v] : t2.inv) r.inv[k] = v;
  r.inv["x5"] = "y2";
  r.inv["y2"] = "x5";
  CHECK(tree_equal(r, t));
}

TEST_CASE("two-corolla decomposition") {
  Signature sig;
  UnrootedTree t = parse_tree("tree{ a(x1,x2); b(y1,y2) | x1-y1 }", sig);
  auto [t1, t2] = decompose(t, {"y1", "x1"});
  CHECK(t1.cors[0].param == "b");
  CHECK(t2.cors[0].param == "a");
}

TEST_CASE("admissible words") {
  Signature sig;
  UnrootedTree t = ex2_tree(sig);
  PWPtr ab_c = pw_pair(pw_pair(pw_leaf("a"), pw_leaf("b")), pw_leaf("c"));
  PWPtr ac_b = pw_pair(pw_pair(pw_leaf("a"), pw_leaf("c")), pw_leaf("b"));
  PWPtr a_bc = pw_pair(pw_leaf("a"), pw_pair(pw_leaf("b"), pw_leaf("c")));
  CHECK(admissible(t, ab_c));
  CHECK(!admissible(t, ac_b));  // a and c are not adjacent
  CHECK(admissible(t, a_bc));
  PWPtr rep = pw_pair(pw_leaf("a"), pw_leaf("a"));
  CHECK(!admissible(t, rep));
  Signature s1;
  UnrootedTree single = parse_tree("tree{ a(x1,x2) | }", s1);
  CHECK(admissible(single, pw_leaf("a")));
}

TEST_CASE("operadic words of the rooted example") {
  Signature sig;
  UnrootedTree t = ex2_tree(sig);
  // enumerate every admissible word and keep the (T,y4)-admissible ones
  std::vector<std::string> letters = {"a", "b", "c"};
  std::vector<PWPtr> words;
  std::sort(letters.begin(), letters.end());
  do {
    PWPtr l0 = pw_leaf(letters[0]), l1 = pw_leaf(letters[1]), l2 = pw_leaf(letters[2]);
    words.push_back(pw_pair(pw_pair(l0, l1), l2));
    words.push_back(pw_pair(l0, pw_pair(l1, l2)));
  } while (std::next_permutation(letters.begin(), letters.end()));
  std::set<std::string> operadic;
  int admissible_count = 0;
  for (const auto& w : words) {
    if (admissible(t, w)) ++admissible_count;
    if (admissible(t, w) && rooted_admissible(t, "y4", w))
      operadic.insert(print_pword(w));
  }
  CHECK(admissible_count > 2);
  CHECK(operadic == std::set<std::string>{"(b a)c", "(b c)a"});
  // every rooted-admissible word is admissible
  for (const auto& w : words)
    if (admissible(t, w) && rooted_admissible(t, "y4", w)) CHECK(admissible(t, w));
  CHECK_THROWS_AS(rooted_admissible(t, "x5", pw_leaf("a")), TypeError);
}

TEST_CASE("inputs and output of subtrees") {
  Signature sig;
  UnrootedTree t = ex2_tree(sig);
  auto [in_b, out_b] = in_out(t, "y4", {"b"});
  CHECK(in_b == FinSet{"y1", "y2", "y3"});
  CHECK(out_b == "y4");
  auto [in_a, out_a] = in_out(t, "y4", {"a"});
  CHECK(in_a == FinSet{"x1", "x2", "x3", "x4"});
  CHECK(out_a == "x5");
  auto [in_c, out_c] = in_out(t, "y4", {"c"});
  CHECK(in_c == FinSet{"z2", "z3"});
  CHECK(out_c == "z1");
  auto [in_t, out_t] = in_out(t, "y4", {"a", "b", "c"});
  CHECK(in_t == set_minus(t.fv(), "y4"));
  CHECK(out_t == "y4");
  CHECK_THROWS_AS(in_out(t, "y4", {"a", "c"}), TypeError);  // not connected
}

TEST_CASE("delta on leaves and simple compositions") {
  Signature sig;
  ObjPtr leaf = parse_object("a^[u->x,w->y]", sig);
  sig.declare("a", FinSet{"x", "y"});
  TreeTerm tt = delta_inv(leaf, sig);
  CHECK(tt.tree.cors.size() == 1);
  CHECK(tt.word->is_leaf);
  CHECK(obj_equal(delta(tt, sig), leaf));

  Signature s2;
  ObjPtr comp = parse_object("(a{x,y} x<>u b{u,v})", s2);
  TreeTerm t2 = delta_inv(comp, s2);
  CHECK(t2.tree.inv.at("x") == "u");
  CHECK(print_pword(t2.word) == "a b");
  CHECK(obj_equal(delta(t2, s2), comp));
}

TEST_CASE("delta round-trips over a hundred enumerated normal terms") {
  Signature sig;
  sig.declare("a", FinSet{"x1", "x2"});
  sig.declare("b", FinSet{"y1", "y2"});
  sig.declare("c", FinSet{"z1", "z2", "z3"});
  // all bracketings and interfaces over subsets of {a,b,c}
  std::vector<ObjPtr> pool;
  std::vector<ObjPtr> leaves = {mk_param("a", sig.lookup("a").fv),
                                mk_param("b", sig.lookup("b").fv),
                                mk_param("c", sig.lookup("c").fv)};
  for (const auto& l : leaves) pool.push_back(l);
  std::vector<ObjPtr> pairs;
  for (const auto& l : leaves)
    for (const auto& r : leaves) {
      if (l->param == r->param) continue;
      for (const auto& x : l->dec.dom())
        for (const auto& y : r->dec.dom()) pairs.push_back(mk_comp(l, x, y, r));
    }
  for (const auto& p : pairs) pool.push_back(p);
  for (const auto& p : pairs)
    for (const auto& l : leaves) {
      bool used = false;
      for (const auto& lf : obj_leaves(p))
        if (lf->param == l->param) used = true;
      if (used) continue;
      FinSet pt = typecheck_object(p, sig);
      for (const auto& x : pt)
        for (const auto& y : l->dec.dom()) pool.push_back(mk_comp(p, x, y, l));
    }
  CHECK(pool.size() > 100);
  for (const auto& w : pool) {
    TreeTerm tt = delta_inv(w, sig);
    CHECK(obj_equal(delta(tt, sig), w));
    CHECK(typecheck_object(w, sig) == tt.tree.fv());
    CHECK(tt.tree.edges().size() + 1 == tt.tree.cors.size());
  }
}

TEST_CASE("delta extends to arrow terms") {
  Signature sig;
  ArrowPtr f = parse_arrow(
      "(gamma(x,u | a{x,y}, b{u,v}) y<>p 1(c{p,q})) ; "
      "beta(u,x;y,p | b{u,v}, a{x,y}, c{p,q})",
      sig);
  ArrowType t = typecheck_arrow(f, sig);
  WArrowPtr wf = delta_inv_arrow(f, sig);
  TreeTerm tt = delta_inv(t.src, sig);
  auto [ws, wt] = typecheck_warrow(tt.tree, wf);
  CHECK(print_pword(ws) == "(a b)c");
  CHECK(print_pword(wt) == "b(a c)");
  ArrowPtr back = delta_arrow(tt.tree, wf, sig);
  CHECK(arrow_equal(back, f));
}

TEST_CASE("tree text round-trip") {
  Signature sig;
  UnrootedTree t = ex2_tree(sig);
  std::string s = print_tree(t);
  Signature s2;
  UnrootedTree t2 = parse_tree(s, s2);
  CHECK(tree_equal(t, t2));
  CHECK(print_tree(t2) == s);
}
