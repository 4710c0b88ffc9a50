#include "vbpb/gl2.hpp"

namespace vbpb {

namespace {

Mat I(std::size_t n) { return Mat::identity(n); }

void need_composable(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::NotComposable, what);
}

}

Mat GL2Element::block() const {
  return blocks(A, J * B, Mat::zero(k(), l()), B);
}

std::string GL2Element::str() const {
  return "(" + d.str() + " | " + A.str() + " | " + J.str() + " | " + B.str() + ")";
}

std::string GL1Element::str() const {
  return "(" + d.str() + " | " + A.str() + " | " + B.str() + ")";
}

bool gl2_member(const Mat& d, const Mat& A, const Mat& J, const Mat& B) {
  std::size_t l = A.rows(), k = B.rows();
  if (!A.square() || !B.square() || d.rows() != k || d.cols() != l || J.rows() != l || J.cols() != k)
    throw Error(ErrorKind::DimensionMismatch, "gl2_member: shapes do not fit (l,k)");
  return invertible(A) && invertible(B) && invertible(I(l) + J * d) && invertible(I(k) + d * J);
}

bool gl2_member(const GL2Element& e) { return gl2_member(e.d, e.A, e.J, e.B); }

void gl2_require_member(const GL2Element& e) {
  if (!gl2_member(e)) throw Error(ErrorKind::InvalidArgument, "not an element of GL(l,k)_2: " + e.str());
}

Mat gl2_t20(const GL2Element& e) { return e.d; }

Mat gl2_s20(const GL2Element& e) {
  return mat_inv((I(e.k()) + e.d * e.J) * e.B) * e.d * e.A;
}

GL2Element gl2_m20(const GL2Element& e1, const GL2Element& e2) {
  need_composable(gl2_s20(e1) == gl2_t20(e2), "gl2_m20: s20(e1) != t20(e2)");
  return {e1.d, e1.A * e2.A, e1.A * e2.J * mat_inv(e1.B) + e1.J, e1.B * e2.B};
}

GL2Element gl2_u20(const Mat& d, std::size_t l) {
  std::size_t k = d.rows();
  return {d, I(l), Mat::zero(l, k), I(k)};
}

GL2Element gl2_i20(const GL2Element& e) {
  Mat Ai = mat_inv(e.A);
  return {gl2_s20(e), Ai, -(Ai * e.J * e.B), mat_inv(e.B)};
}

GL1Element gl2_t21(const GL2Element& e) {
  return {e.d, e.A, (I(e.k()) + e.d * e.J) * e.B};
}

GL1Element gl2_s21(const GL2Element& e) {
  return {e.d, mat_inv(I(e.l()) + e.J * e.d) * e.A, e.B};
}

GL2Element gl2_m21(const GL2Element& e1, const GL2Element& e2) {
  need_composable(gl2_s21(e1) == gl2_t21(e2), "gl2_m21: s21(e1) != t21(e2)");
  return {e1.d, e1.A, e1.J * e1.d * e2.J + e1.J + e2.J, e2.B};
}

GL2Element gl2_u21(const GL1Element& f) {
  return {f.d, f.A, Mat::zero(f.A.rows(), f.B.rows()), f.B};
}

GL2Element gl2_i21(const GL2Element& e) {
  Mat P = mat_inv(I(e.l()) + e.J * e.d);
  return {e.d, P * e.A, -(P * e.J), (I(e.k()) + e.d * e.J) * e.B};
}

Mat gl1_t10(const GL1Element& f) { return f.d; }

Mat gl1_s10(const GL1Element& f) { return mat_inv(f.B) * f.d * f.A; }

GL1Element gl1_compose(const GL1Element& f1, const GL1Element& f2) {
  need_composable(gl1_s10(f1) == gl1_t10(f2), "gl1_compose: s10(f1) != t10(f2)");
  return {f1.d, f1.A * f2.A, f1.B * f2.B};
}

GL1Element gl1_unit(const Mat& d) { return {d, I(d.cols()), I(d.rows())}; }

GL1Element gl1_inverse(const GL1Element& f) { return {gl1_s10(f), mat_inv(f.A), mat_inv(f.B)}; }

GL2Element gl2_from_block(const Mat& d, const Mat& M, std::size_t l) {
  std::size_t k = M.rows() - l;
  if (!M.block(l, 0, k, l).is_zero())
    throw Error(ErrorKind::BlockStructureViolation, "lower-left block is nonzero: " + M.str());
  Mat B = M.block(l, l, k, k);
  return {d, M.block(0, 0, l, l), M.block(0, l, l, k) * mat_inv(B), B};
}

GL2Element gl2_transpose(const GL2Element& e) {
  std::size_t l = e.l(), k = e.k();
  Mat dt = -(exchange(l) * gl2_s20(e).transpose() * exchange(k));
  Mat T = exchange(l + k);
  return gl2_from_block(dt, T * e.block().transpose() * T, k);
}

bool CrossedModule::in_H(const Mat& J) const { return gl2_member(d, I(l) + J * d, J, I(k)); }

bool CrossedModule::in_G(const GL1Element& g) const {
  return g.d == d && invertible(g.A) && invertible(g.B) && gl1_s10(g) == d;
}

GL2Element CrossedModule::element(const Mat& J) const { return {d, I(l) + J * d, J, I(k)}; }

Mat CrossedModule::h_mul(const Mat& J1, const Mat& J2) const {
  return gl2_m20(element(J1), element(J2)).J;
}

Mat CrossedModule::h_inv(const Mat& J) const { return gl2_i20(element(J)).J; }

GL1Element CrossedModule::boundary(const Mat& J) const { return gl2_t21(element(J)); }

Mat CrossedModule::conjugate(const GL1Element& g, const Mat& J) const {
  GL2Element u = gl2_u21(g);
  GL2Element c = gl2_m20(gl2_m20(u, element(J)), gl2_i20(u));
  if (c.B != I(k) || c.A != I(l) + c.J * d)
    throw Error(ErrorKind::InvalidArgument, "conjugate left the isotropy subgroup");
  return c.J;
}

CrossedModule gl2_isotropy_crossed_module(std::size_t l, std::size_t k, const Mat& d) {
  if (d.rows() != k || d.cols() != l) throw Error(ErrorKind::DimensionMismatch, "crossed module: d is not k x l");
  return {d, l, k};
}

bool gle_member(const Mat& d_x, const Mat& d_y, const Mat& A, const Mat& B, const std::optional<GLECell2>& cell) {
  if (!invertible(A) || !invertible(B)) return false;
  if (d_y * A != B * d_x) return false;
  if (!cell) return true;
  const auto& c = *cell;
  if (!invertible(c.A2) || !invertible(c.B2) || d_y * c.A2 != c.B2 * d_x) return false;
  return c.J * d_x == A - c.A2 && d_y * c.J == B - c.B2;
}

GLEFromGL2 gle_from_gl2(const GL2Element& e) {
  GL1Element src = gl2_t21(e), tgt = gl2_s21(e);
  return {gl2_s20(e), e.d, src.A, src.B, {e.J * e.B, tgt.A, tgt.B}};
}

}
