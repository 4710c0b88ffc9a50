#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vbpb/suites.hpp"

namespace vbpb::testing {

inline Mat scalar(const Q& q) { return Mat{{q}}; }

// rep((a,b)) = c_a / c_b over the pair groupoid, functorial by construction
inline ArrowRep ratio_rep(const FiniteGroupoid& G, std::vector<Q> c) {
  return [G, c](Arrow g) { return Mat{{c[G.tgt[g]] / c[G.src[g]]}}; };
}

inline std::vector<std::pair<std::string, VBGroupoid>> instances() {
  FiniteGroupoid P = gpd_pair(2);
  auto rep = ratio_rep(P, {1, 2});
  std::vector<std::pair<std::string, VBGroupoid>> out = {
      {"canonical(1,1)", vbg_canonical(1, 1, {Mat{{0}}, Mat{{1}}})},
      {"canonical(2,3)", vbg_canonical(2, 3, {Mat{{1, 2}, {0, -1}, {3, 1}}, Mat{{0, 1}, {1, 1}, {-1, 2}}, Mat::zero(3, 2)})},
      {"trivial_core", vbg_trivial_core(P, 1, rep)},
      {"trivial_base", vbg_trivial_base(P, 1, rep)},
      {"pullback", vbg_pullback(P, 1)},
  };
  std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back({"dual " + out[i].first, vbg_dual(out[i].second)});
  return out;
}

// Small 2x2 inverse by the adjugate, used as an independent oracle.
inline Mat inv2(const Mat& m) {
  Q det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return Mat{{m(1, 1) / det, -m(0, 1) / det}, {-m(1, 0) / det, m(0, 0) / det}};
}

}
