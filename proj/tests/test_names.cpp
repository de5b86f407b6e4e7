#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyco/names.hpp"

using namespace cyco;

namespace {

Bijection bij(std::initializer_list<std::pair<VarName, VarName>> ps) {
  std::map<VarName, VarName, NatLess> m;
  for (const auto& [a, b] : ps) m[a] = b;
  return Bijection(std::move(m));
}

}  // namespace

TEST_CASE("natural order for suffixed names") {
  NatLess lt;
  CHECK(lt("x2", "x10"));
  CHECK(lt("x5", "y2"));
  CHECK(lt("x#1", "x#2"));
  CHECK(!lt("x10", "x2"));
}

TEST_CASE("compose identities and chains") {
  FinSet xy{"x", "y"};
  Bijection id = Bijection::identity(xy);
  CHECK(id.compose(id) == id);
  Bijection ux = bij({{"u", "x"}});
  Bijection pu = bij({{"p", "u"}});
  CHECK(ux.compose(pu) == bij({{"p", "x"}}));
}

TEST_CASE("compose equals pointwise chase on random 4-point bijections") {
  std::mt19937 rng(7);
  std::vector<VarName> A{"a1", "a2", "a3", "a4"}, B{"b1", "b2", "b3", "b4"},
      C{"c1", "c2", "c3", "c4"};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<VarName> pb = B, pc = C;
    std::shuffle(pb.begin(), pb.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    std::map<VarName, VarName, NatLess> m1, m2;
    for (int i = 0; i < 4; ++i) m1[B[i]] = A[i];   // sigma : B -> A
    for (int i = 0; i < 4; ++i) m2[C[i]] = pb[i];  // tau : C -> B
    Bijection sigma{m1}, tau{m2};
    Bijection st = sigma.compose(tau);
    for (const auto& c : C) CHECK(st.apply(c) == sigma.apply(tau.apply(c)));
  }
}

TEST_CASE("corestriction") {
  Bijection s = bij({{"u", "x"}, {"v", "y"}});
  CHECK(s.restrict_core(FinSet{"x"}) == bij({{"u", "x"}}));
  CHECK(s.restrict_core(s.cod()) == s);
  CHECK_THROWS_AS(s.restrict_core(FinSet{"z"}), TypeError);
}

TEST_CASE("corestriction of a 5-point bijection matches elementwise filter") {
  Bijection s = bij({{"a", "p"}, {"b", "q"}, {"c", "r"}, {"d", "s"}, {"e", "t"}});
  FinSet Y{"q", "t"};
  Bijection r = s.restrict_core(Y);
  std::map<VarName, VarName, NatLess> expect;
  for (const auto& [k, v] : s.pairs())
    if (Y.count(v)) expect[k] = v;
  CHECK(r == Bijection(expect));
}

TEST_CASE("renaming") {
  FinSet xy{"x", "y"};
  CHECK(Bijection::renaming(xy, "x", "u") == bij({{"u", "x"}, {"y", "y"}}));
  CHECK(Bijection::renaming(FinSet{"x"}, "x", "x") == Bijection::identity(FinSet{"x"}));
  CHECK_THROWS_AS(Bijection::renaming(xy, "z", "u"), TypeError);
  FinSet s3{"a", "b", "c"};
  Bijection r = Bijection::renaming(s3, "a", "n");
  Bijection back = Bijection::renaming(r.dom(), "n", "a");
  CHECK(r.compose(back) == Bijection::identity(s3));
}

TEST_CASE("disjoint union") {
  Bijection ux = bij({{"u", "x"}});
  Bijection vy = bij({{"v", "y"}});
  CHECK(ux.disjoint_union(vy) == bij({{"u", "x"}, {"v", "y"}}));
  CHECK(ux.disjoint_union(Bijection()) == ux);
  CHECK_THROWS_AS(ux.disjoint_union(bij({{"u", "z"}})), TypeError);
  Bijection a = bij({{"m1", "n1"}, {"m2", "n2"}, {"m3", "n3"}});
  Bijection b = bij({{"p1", "q1"}, {"p2", "q2"}, {"p3", "q3"}});
  Bijection u = a.disjoint_union(b);
  std::map<VarName, VarName, NatLess> merged = a.pairs();
  for (const auto& [k, v] : b.pairs()) merged[k] = v;
  CHECK(u == Bijection(merged));
  CHECK(u.restrict_core(a.cod()) == a);
}

TEST_CASE("inverse round-trips") {
  Bijection s = bij({{"u", "x"}, {"v", "y"}, {"w", "z"}});
  CHECK(s.compose(s.inverse()) == Bijection::identity(s.cod()));
  CHECK(s.inverse().compose(s) == Bijection::identity(s.dom()));
}

TEST_CASE("printing") {
  CHECK(print_finset(FinSet{"y", "x"}) == "{x,y}");
  CHECK(print_bijection(bij({{"v", "y"}, {"u", "x"}})) == "[u->x,v->y]");
}

TEST_CASE("fresh names") {
  CHECK(fresh_name("x", FinSet{}) == "x");
  CHECK(fresh_name("x", FinSet{"x"}) == "x#1");
  CHECK(fresh_name("x", FinSet{"x", "x#1"}) == "x#2");
  CHECK(fresh_name("x#1", FinSet{"x#1"}) == "x#2");
}
