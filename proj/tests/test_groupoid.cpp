#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace vbpb;

TEST_CASE("pair and unit groupoids validate") {
  CHECK(gpd_validate(gpd_unit({"p"})).empty());
  FiniteGroupoid p1 = gpd_pair(1);
  CHECK(p1.n_arrows() == 1);
  CHECK(gpd_is_unit_groupoid(p1));
  FiniteGroupoid p2 = gpd_pair(2);
  CHECK(p2.n_arrows() == 4);
  CHECK(p2.unit.size() == 2);
  CHECK(gpd_validate(p2).empty());
  FiniteGroupoid p3 = gpd_pair(3);
  CHECK(p3.n_arrows() == 9);
  CHECK(gpd_validate(p3).empty());
}

TEST_CASE("unit groupoid on several points") {
  FiniteGroupoid u1 = gpd_unit({"a"});
  CHECK(u1.n_arrows() == 1);
  FiniteGroupoid u2 = gpd_unit({"a", "b"});
  CHECK(u2.n_arrows() == 2);
  CHECK(u2.composable(0, 0));
  CHECK_FALSE(u2.composable(0, 1));
  CHECK(gpd_validate(gpd_unit({"a", "b", "c", "d", "e"})).empty());
}

TEST_CASE("composition in the pair groupoid") {
  FiniteGroupoid g = gpd_pair(3);
  Arrow a12 = g.arrow_index("(1,2)"), a23 = g.arrow_index("(2,3)"), a13 = g.arrow_index("(1,3)");
  CHECK(gpd_compose(g, a12, a23) == a13);
  for (Arrow a = 0; a < g.n_arrows(); ++a) {
    CHECK(gpd_compose(g, a, g.unit[g.src[a]]) == a);
    CHECK(gpd_compose(g, a, g.inv[a]) == g.unit[g.tgt[a]]);
  }
  try {
    gpd_compose(g, a12, a12);
    FAIL("expected NotComposable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotComposable);
  }
}

TEST_CASE("corrupted composition entry is named") {
  FiniteGroupoid g = gpd_pair(2);
  Arrow a12 = g.arrow_index("(1,2)"), a21 = g.arrow_index("(2,1)");
  g.comp_at(a21, a12) = g.arrow_index("(1,1)");  // should be (2,2)
  auto rep = gpd_validate(g);
  REQUIRE_FALSE(rep.empty());
  bool named = std::any_of(rep.begin(), rep.end(), [](const std::string& s) {
    return s.find("comp((2,1),(1,2)) = (1,1)") != std::string::npos;
  });
  CHECK(named);
}

TEST_CASE("associativity failure names a triple") {
  // Z/2 on one object with the multiplication table broken
  FiniteGroupoid g;
  g.objects = {"x"};
  g.arrows = {"e", "a"};
  g.src = {0, 0};
  g.tgt = {0, 0};
  g.unit = {0};
  g.inv = {0, 1};
  g.comp = {0, 1, 1, 0};
  CHECK(gpd_validate(g).empty());
  g.comp = {0, 1, 1, 1};  // a.a = a
  auto rep = gpd_validate(g);
  REQUIRE_FALSE(rep.empty());
  bool triple = std::any_of(rep.begin(), rep.end(), [](const std::string& s) {
    return s.find("(a,a)") != std::string::npos || s.find("associativity fails at") != std::string::npos ||
           s.find("inverse law fails at a") != std::string::npos;
  });
  CHECK(triple);
}

TEST_CASE("opposite groupoid") {
  FiniteGroupoid g = gpd_pair(3);
  FiniteGroupoid op = gpd_opposite(g);
  CHECK(gpd_validate(op).empty());
  for (auto [a, b] : g.composable_pairs()) CHECK(op.comp_at(b, a) == g.comp_at(a, b));
}
