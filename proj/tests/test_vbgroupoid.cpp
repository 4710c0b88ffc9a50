#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace vbpb;
using testing::ratio_rep;

namespace {

bool mentions(const std::vector<std::string>& rep, const std::string& what) {
  return std::any_of(rep.begin(), rep.end(), [&](const std::string& s) { return s.find(what) != std::string::npos; });
}

}

TEST_CASE("example instances and their duals validate") {
  for (auto& [name, v] : testing::instances()) {
    INFO(name);
    CHECK(vbg_validate(v).empty());
    CHECK(vbg_validate(vbg_opposite(v)).empty());
    CHECK(vbg_double_dual_check(v).empty());
  }
}

TEST_CASE("canonical VB-groupoid on {0,1}") {
  VBGroupoid v = vbg_canonical(1, 1, {Mat{{0}}, Mat{{1}}});
  CHECK(vbg_validate(v).empty());
  CHECK(v.base.n_arrows() == 2);
  CHECK(v.base.arrows[0] == "[[0]]");
  // d = 0: target equals source
  CHECK(v.T[0] == v.S[0]);
  // d = 1: t(w,v) = w + v
  CHECK(v.T[1] == Mat{{1, 1}});
  CHECK(kernel(v.T[1]) == Subspace::span(Mat{{1}, {-1}}));
  Rng r(5);
  std::vector<Mat> pts = {rand_mat(r, 3, 2), rand_mat(r, 3, 2), rand_mat(r, 3, 2)};
  CHECK(vbg_validate(vbg_canonical(2, 3, pts)).empty());
}

TEST_CASE("core of the example instances") {
  for (Q d : {Q(0), Q(1), Q(-3, 2)}) {
    VBGroupoid v = vbg_canonical(1, 1, {Mat{{d}}});
    Core c = vbg_core(v, 0);
    CHECK(c.C == Subspace::span(Mat{{1}, {0}}));
    CHECK(c.rho == Mat{{d}});
  }
  FiniteGroupoid P = gpd_pair(2);
  VBGroupoid tc = vbg_trivial_core(P, 1, ratio_rep(P, {1, 2}));
  Core c0 = vbg_core(tc, 0);
  CHECK(c0.C.dim() == 0);
  CHECK(c0.rho.rows() == 1);
  CHECK(c0.rho.cols() == 0);
  ArrowRep rot = [&](Arrow g) { return P.src[g] == P.tgt[g] ? Mat::identity(2) : (P.tgt[g] == 1 ? Mat{{0, -1}, {1, 0}} : Mat{{0, 1}, {-1, 0}}); };
  VBGroupoid tb = vbg_trivial_base(P, 2, rot);
  CHECK(vbg_validate(tb).empty());
  Core c1 = vbg_core(tb, 1);
  CHECK(c1.C == Subspace::full(2));
  CHECK(c1.rho.rows() == 0);
  CHECK(c1.rho.cols() == 2);
}

TEST_CASE("right translation") {
  VBGroupoid can = vbg_canonical(1, 1, {Mat{{1}}});
  CHECK(vbg_right_translation(can, 0, 0) == Mat::identity(1));
  FiniteGroupoid P = gpd_pair(2);
  VBGroupoid tb = vbg_trivial_base(P, 1, ratio_rep(P, {1, 2}));
  // on ker s the translation is (h, c) -> (hg, c)
  for (auto [h, g] : P.composable_pairs()) CHECK(vbg_right_translation(tb, h, g) == Mat::identity(1));
  for (auto& [name, v] : testing::instances()) {
    INFO(name);
    for (auto [h, g] : v.base.composable_pairs()) CHECK(invertible(vbg_right_translation(v, h, g)));
  }
}

TEST_CASE("trivial core constructor") {
  FiniteGroupoid U = gpd_unit({"p", "q"});
  VBGroupoid prod = vbg_trivial_core(U, 2, [](Arrow) { return Mat::identity(2); });
  CHECK(vbg_validate(prod).empty());
  CHECK(prod.l == 0);
  CHECK(prod.mul(0, 0) == hcat(Mat::zero(2, 2), Mat::identity(2)));

  FiniteGroupoid P = gpd_pair(2);
  Arrow a21 = P.arrow_index("(2,1)"), a12 = P.arrow_index("(1,2)");
  auto rep = [&](Q fwd, Q back) {
    return [=](Arrow g) { return g == a21 ? Mat{{fwd}} : g == a12 ? Mat{{back}} : Mat{{1}}; };
  };
  VBGroupoid ok = vbg_trivial_core(P, 1, rep(2, Q(1, 2)));
  CHECK(vbg_validate(ok).empty());
  CHECK(vbg_core(ok, 0).C.dim() == 0);
  try {
    vbg_trivial_core(P, 1, rep(2, 3));
    FAIL("expected NonFunctorialRep");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFunctorialRep);
  }
}

TEST_CASE("corrupted multiplication is reported") {
  FiniteGroupoid P = gpd_pair(2);
  VBGroupoid v = vbg_trivial_core(P, 1, [](Arrow) { return Mat::identity(1); });
  REQUIRE(vbg_validate(v).empty());
  Arrow a12 = P.arrow_index("(1,2)"), a21 = P.arrow_index("(2,1)");
  v.mul(a12, a21) = Q(2) * v.mul(a12, a21);
  auto rep = vbg_validate(v);
  REQUIRE_FALSE(rep.empty());
  CHECK(mentions(rep, "(1,2)"));
  CHECK(mentions(rep, "(2,1)"));
}

TEST_CASE("singular inverse is reported with the arrow") {
  FiniteGroupoid P = gpd_pair(2);
  VBGroupoid v = vbg_pullback(P, 1);
  Arrow g = P.arrow_index("(2,1)");
  v.Inv[g] = Mat::zero(2, 2);
  auto rep = vbg_validate(v);
  CHECK(mentions(rep, "Inv at (2,1) is singular"));
  try {
    vbg_require_valid(v);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationFailure);
    CHECK(std::string(e.what()).find("ValidationError") == 0);
  }
}

TEST_CASE("trivial base constructor") {
  FiniteGroupoid P = gpd_pair(2);
  VBGroupoid plain = vbg_trivial_base(P, 1, [](Arrow) { return Mat::identity(1); });
  CHECK(vbg_validate(plain).empty());
  for (auto [g, h] : P.composable_pairs()) CHECK(plain.mul(g, h) == Mat{{1, 1}});
  Arrow a21 = P.arrow_index("(2,1)");
  VBGroupoid v = vbg_trivial_base(P, 1, ratio_rep(P, {1, 2}));
  CHECK(vbg_validate(v).empty());
  // multiplication is additive: m(c1 + c3, c2 + c4) = m(c1, c2) + m(c3, c4)
  Rng r(3);
  for (auto [g, h] : P.composable_pairs()) {
    Mat a = rand_mat(r, 1, 1), b = rand_mat(r, 1, 1), c = rand_mat(r, 1, 1), d = rand_mat(r, 1, 1);
    CHECK(v.mul(g, h) * vcat(a + c, b + d) == v.mul(g, h) * vcat(a, b) + v.mul(g, h) * vcat(c, d));
  }
  // m((g1,c1),(g2,c2)) = (g1 g2, c1 + rep(g1) c2)
  CHECK(v.mul(a21, P.unit[0]) == Mat{{1, 2}});
  CHECK(v.mul(P.unit[1], a21) == Mat{{1, 1}});
}

TEST_CASE("pullback constructor") {
  VBGroupoid pt = vbg_pullback(gpd_unit({"x"}), 1);
  CHECK(pt.n() == 2);
  Core c = vbg_core(pt, 0);
  CHECK(c.C == Subspace::span(Mat{{1}, {0}}));
  CHECK(c.rho == Mat{{1}});
  for (std::size_t k : {1u, 2u}) {
    VBGroupoid v = vbg_pullback(gpd_pair(2), k);
    CHECK(vbg_validate(v).empty());
    for (Object x = 0; x < 2; ++x) CHECK(vbg_core(v, x).C.dim() == k);
  }
}

TEST_CASE("dual") {
  FiniteGroupoid P = gpd_pair(2);
  VBGroupoid tc = vbg_trivial_core(P, 1, ratio_rep(P, {1, 3}));
  VBGroupoid d = vbg_dual(tc);
  CHECK(d.l == 1);
  CHECK(d.k == 0);
  CHECK(vbg_validate(d).empty());
  for (Q x : {Q(0), Q(2), Q(-1, 3)}) {
    VBGroupoid c = vbg_dual(vbg_canonical(1, 1, {Mat{{x}}}));
    CHECK(vbg_core(c, 0).rho == Mat{{x}});
  }
  VBGroupoid can23 = vbg_canonical(2, 3, {Mat{{1, 2}, {0, -1}, {3, 1}}});
  CHECK(vbg_core(vbg_dual(can23), 0).rho == vbg_core(can23, 0).rho.transpose());
}

TEST_CASE("anchored 2-vector bundles") {
  Anchored2VB zero{{"p"}, {1}, {1}, {Mat{{0}}}};
  VBGroupoid z = vbg_from_anchored(zero);
  CHECK(vbg_validate(z).empty());
  CHECK(z.T[0] == z.S[0]);

  Anchored2VB one{{"p"}, {1}, {1}, {Mat{{1}}}};
  VBGroupoid a = vbg_from_anchored(one), c = vbg_canonical(1, 1, {Mat{{1}}});
  CHECK(a.S == c.S);
  CHECK(a.T == c.T);
  CHECK(a.Inv == c.Inv);
  CHECK(a.U == c.U);
  CHECK(a.Mul == c.Mul);

  Rng r(17);
  for (int i = 0; i < 5; ++i) {
    std::size_t e1 = 1 + r.below(3), e0 = 1 + r.below(3);
    Anchored2VB x;
    for (int p = 0; p < 3; ++p) {
      x.points.push_back("p" + std::to_string(p));
      x.e1_dim.push_back(e1);
      x.e0_dim.push_back(e0);
      x.delta.push_back(rand_mat(r, e0, e1));
    }
    VBGroupoid v = vbg_from_anchored(x);
    CHECK(vbg_validate(v).empty());
    CHECK(vbg_to_anchored(v) == x);
  }
  try {
    vbg_to_anchored(vbg_pullback(gpd_pair(2), 1));
    FAIL("expected NonUnitBase");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitBase);
  }
}
