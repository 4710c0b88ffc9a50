#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vbpb/groupoid.hpp"
#include "vbpb/linalg.hpp"

namespace vbpb {

// VB-groupoid of rank (l,k) over a finite groupoid. Every arrow fiber is
// Q^(l+k), every object fiber Q^k. Mul(g,h) is some linear extension of the
// fiberwise multiplication to all of Q^(l+k) x Q^(l+k); only its restriction
// to {(a,b) : S_g a = T_h b} carries meaning.
struct VBGroupoid {
  FiniteGroupoid base;
  std::size_t l = 0, k = 0;
  std::vector<Mat> S, T, Inv;  // per arrow
  std::vector<Mat> U;          // per object
  std::vector<Mat> Mul;        // per (g,h) at index g*n_arrows+h, empty if not composable

  std::size_t n() const { return l + k; }
  const Mat& mul(Arrow g, Arrow h) const { return Mul[g * base.arrows.size() + h]; }
  Mat& mul(Arrow g, Arrow h) { return Mul[g * base.arrows.size() + h]; }

  friend bool operator==(const VBGroupoid&, const VBGroupoid&) = default;
};

struct Core {
  Subspace C;  // ker S at the unit arrow
  Mat rho;     // k x l, T restricted to C in the canonical basis of C
};

struct Anchored2VB {
  std::vector<std::string> points;
  std::vector<std::size_t> e1_dim, e0_dim;
  std::vector<Mat> delta;  // e0 x e1 at each point
  friend bool operator==(const Anchored2VB&, const Anchored2VB&) = default;
};

using ArrowRep = std::function<Mat(Arrow)>;

std::vector<std::string> vbg_validate(const VBGroupoid& v);
// Throws ValidationFailure carrying the report.
void vbg_require_valid(const VBGroupoid& v);

Core vbg_core(const VBGroupoid& v, Object x);

// Canonical basis of ker S_g, (l+k) x l.
Mat kernel_basis(const VBGroupoid& v, Arrow g);
// Basis of the fibered subspace {(a,b) : S_g a = T_h b}, 2n columns tall.
Mat fibered_basis(const VBGroupoid& v, Arrow g, Arrow h);

// R~_g : ker S_h -> ker S_hg, e -> Mul(h,g)[e;0], as an l x l matrix in the
// canonical kernel bases. Requires s(h) = t(g).
Mat vbg_right_translation(const VBGroupoid& v, Arrow h, Arrow g);
// Same map on raw fiber vectors (columns of e lie in ker S_h).
Mat right_translate(const VBGroupoid& v, Arrow h, Arrow g, const Mat& e);
// Coordinates of vectors in ker S_g with respect to kernel_basis(v, g).
Mat kernel_coords(const VBGroupoid& v, Arrow g, const Mat& e);

VBGroupoid vbg_trivial_core(const FiniteGroupoid& base, std::size_t k, const ArrowRep& rep);
VBGroupoid vbg_trivial_base(const FiniteGroupoid& base, std::size_t l, const ArrowRep& rep);
VBGroupoid vbg_pullback(const FiniteGroupoid& base, std::size_t k);
VBGroupoid vbg_canonical(std::size_t l, std::size_t k, const std::vector<Mat>& sample);
VBGroupoid vbg_dual(const VBGroupoid& v);
VBGroupoid vbg_from_anchored(const Anchored2VB& a);
Anchored2VB vbg_to_anchored(const VBGroupoid& v);
// Swaps S and T, Mul^op(a,b) = Mul(b,a); lives over the opposite groupoid.
VBGroupoid vbg_opposite(const VBGroupoid& v);

// Per-object change of basis N_x = B*^T U_x from E_M to the object fiber of
// the double dual, B* the core basis of the dual. Returns a report of
// mismatches when the double dual is compared with v through N.
std::vector<std::string> vbg_double_dual_check(const VBGroupoid& v);

}
