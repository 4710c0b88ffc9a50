#pragma once

#include <optional>
#include <string>

#include "vbpb/linalg.hpp"

namespace vbpb {

// 2-cell of GL(l,k): base point d (k x l) and block matrix [[A, J B],[0, B]].
struct GL2Element {
  Mat d, A, J, B;
  std::size_t l() const { return A.rows(); }
  std::size_t k() const { return B.rows(); }
  Mat block() const;  // [[A, JB],[0,B]]
  std::string str() const;  // (d | A | J | B)
  friend bool operator==(const GL2Element&, const GL2Element&) = default;
};

// 1-cell (d, A, B), an arrow from B^-1 d A to d in the action groupoid.
struct GL1Element {
  Mat d, A, B;
  std::string str() const;
  friend bool operator==(const GL1Element&, const GL1Element&) = default;
};

bool gl2_member(const Mat& d, const Mat& A, const Mat& J, const Mat& B);
bool gl2_member(const GL2Element& e);
void gl2_require_member(const GL2Element& e);

Mat gl2_t20(const GL2Element& e);
Mat gl2_s20(const GL2Element& e);
GL2Element gl2_m20(const GL2Element& e1, const GL2Element& e2);
GL2Element gl2_u20(const Mat& d, std::size_t l);
GL2Element gl2_i20(const GL2Element& e);

GL1Element gl2_t21(const GL2Element& e);
GL1Element gl2_s21(const GL2Element& e);
GL2Element gl2_m21(const GL2Element& e1, const GL2Element& e2);
GL2Element gl2_u21(const GL1Element& f);
GL2Element gl2_i21(const GL2Element& e);

Mat gl1_t10(const GL1Element& f);
Mat gl1_s10(const GL1Element& f);
GL1Element gl1_compose(const GL1Element& f1, const GL1Element& f2);
GL1Element gl1_unit(const Mat& d);
GL1Element gl1_inverse(const GL1Element& f);

// Rebuilds (d, A, J, B) from a block matrix with zero lower-left block.
GL2Element gl2_from_block(const Mat& d, const Mat& M, std::size_t l);

// Block transpose e -> (-R s20^T R, T M^T T) as an element of GL(k,l), with R
// the reversal matrices and T the full reversal. Reverses o20.
GL2Element gl2_transpose(const GL2Element& e);

// Isotropy crossed module at d. The group H consists of the J with
// (d, I+Jd, J, I) in GL(l,k); the boundary lands in the isotropy of d under
// the 1-cell action, G_d = {(A,B) : B^-1 d A = d}.
struct CrossedModule {
  Mat d;
  std::size_t l, k;
  bool in_H(const Mat& J) const;
  bool in_G(const GL1Element& g) const;
  GL2Element element(const Mat& J) const;
  Mat h_mul(const Mat& J1, const Mat& J2) const;
  Mat h_inv(const Mat& J) const;
  GL1Element g_mul(const GL1Element& a, const GL1Element& b) const { return gl1_compose(a, b); }
  GL1Element g_inv(const GL1Element& a) const { return gl1_inverse(a); }
  GL1Element boundary(const Mat& J) const;
  // u21(g) o20 element(J) o20 i20(u21(g)), read back as a J
  Mat conjugate(const GL1Element& g, const Mat& J) const;
};

CrossedModule gl2_isotropy_crossed_module(std::size_t l, std::size_t k, const Mat& d);

// Element-wise GL(E): 1-cell test d_y A = B d_x; 2-cell test between (A,B)
// and (A2,B2) given J : E0_x -> E1_y.
struct GLECell2 {
  Mat J, A2, B2;
};
bool gle_member(const Mat& d_x, const Mat& d_y, const Mat& A, const Mat& B,
                const std::optional<GLECell2>& cell = std::nullopt);

// A 2-cell of GL(l,k) seen in GL(E) over a point: from t21 to s21, anchors
// s20 at the source and d at the target, with J_E = J B.
struct GLEFromGL2 {
  Mat d_x, d_y, A, B;
  GLECell2 cell;
};
GLEFromGL2 gle_from_gl2(const GL2Element& e);

}
