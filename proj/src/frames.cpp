#include "vbpb/frames.hpp"

namespace vbpb {

bool frame_is_sbis(const VBGroupoid& v, Arrow g, const Mat& Phi) {
  const std::size_t n = v.n(), l = v.l;
  if (Phi.rows() != n || Phi.cols() != n) return false;
  if (!invertible(Phi)) return false;
  if (!(v.S[g] * Phi.cols_range(0, l)).is_zero()) return false;
  return invertible(v.T[g] * Phi.cols_range(l, v.k));
}

void frame_require_sbis(const VBGroupoid& v, const SFrame& f) {
  if (f.g < 0 || f.g >= v.base.n_arrows() || !frame_is_sbis(v, f.g, f.Phi))
    throw Error(ErrorKind::InvalidArgument, "not an s-bisection frame: " + f.Phi.str());
}

bool basepair_valid(const VBGroupoid& v, const BasePair& p) {
  return p.x >= 0 && p.x < v.base.n_objects() && p.phi_c.rows() == v.l && p.phi_b.rows() == v.k &&
         invertible(p.phi_c) && invertible(p.phi_b);
}

Mat basepair_moment(const VBGroupoid& v, const BasePair& p) {
  return mat_inv(p.phi_b) * vbg_core(v, p.x).rho * p.phi_c;
}

BasePair frame_bt(const VBGroupoid& v, const SFrame& f) {
  const auto& G = v.base;
  Object x = G.tgt[f.g];
  Mat w = right_translate(v, f.g, G.inv[f.g], f.w_block(v.l));
  return {x, kernel_coords(v, G.unit[x], w), v.T[f.g] * f.v_block(v.l)};
}

Mat frame_dphi(const VBGroupoid& v, const SFrame& f) {
  return basepair_moment(v, frame_bt(v, f));
}

BasePair frame_bs(const VBGroupoid& v, const SFrame& f) {
  const auto& G = v.base;
  const std::size_t l = v.l;
  Object y = G.src[f.g];
  Arrow gi = G.inv[f.g];
  Mat d = frame_dphi(v, f);
  // R_g(i(Phi(-w, d w)))
  Mat X = v.Inv[f.g] * f.Phi * vcat(-Mat::identity(l), d);
  Mat c = right_translate(v, gi, f.g, X);
  return {y, kernel_coords(v, G.unit[y], c), v.S[f.g] * f.v_block(l)};
}

SFrame frame_bm(const VBGroupoid& v, const SFrame& f1, const SFrame& f2) {
  const auto& G = v.base;
  if (!G.composable(f1.g, f2.g) || frame_bs(v, f1) != frame_bt(v, f2))
    throw Error(ErrorKind::NotComposable, "frame_bm: bs(f1) != bt(f2)");
  const std::size_t l = v.l, n = v.n();
  const Mat& m = v.mul(f1.g, f2.g);
  Mat wc = m * vcat(f1.w_block(l), Mat(n, l));
  Mat vc = m * vcat(f1.v_block(l), f2.v_block(l));
  return {G.comp_at(f1.g, f2.g), hcat(wc, vc)};
}

SFrame frame_bu(const VBGroupoid& v, const BasePair& p) {
  Arrow u = v.base.unit[p.x];
  return {u, hcat(kernel_basis(v, u) * p.phi_c, v.U[p.x] * p.phi_b)};
}

SFrame frame_bi(const VBGroupoid& v, const SFrame& f) {
  const std::size_t l = v.l, k = v.k;
  Mat d = frame_dphi(v, f);
  Mat N = blocks(-Mat::identity(l), Mat::zero(l, k), d, Mat::identity(k));
  return {v.base.inv[f.g], v.Inv[f.g] * f.Phi * N};
}

std::pair<FatElement, BasePair> frame_F(const VBGroupoid& v, const SFrame& f) {
  return {FatElement{f.g, image(f.v_block(v.l))}, frame_bs(v, f)};
}

SFrame frame_F_inv(const VBGroupoid& v, const FatElement& fe, const BasePair& p) {
  const auto& G = v.base;
  Arrow g = fe.g;
  if (!fat_is_member(v, g, fe.H))
    throw Error(ErrorKind::FatMembershipFailure, "frame_F_inv: H is not a fat element at " + G.arrows[g]);
  if (p.x != G.src[g]) throw Error(ErrorKind::InvalidArgument, "frame_F_inv: base pair is not at s(g)");
  Object y = G.src[g];
  Arrow gi = G.inv[g], uy = G.unit[y];
  Mat c = kernel_basis(v, uy) * p.phi_c;
  // R_g : ker S_{g^-1} -> ker S_{1_y}, undone in kernel coordinates
  Mat Rinv = mat_inv(vbg_right_translation(v, gi, g));
  Mat back = kernel_basis(v, gi) * Rinv * p.phi_c;
  Mat wc = fat_lift(v, fe, v.T[uy] * c) - v.Inv[gi] * back;
  Mat vc = fat_lift(v, fe, p.phi_b);
  return {g, hcat(wc, vc)};
}

bool frame_is_tbis(const VBGroupoid& v, Arrow g, const Mat& Phi) {
  const std::size_t n = v.n(), l = v.l, k = v.k;
  if (Phi.rows() != n || Phi.cols() != n) return false;
  if (!invertible(Phi)) return false;
  if (!(v.T[g] * Phi.cols_range(k, l)).is_zero()) return false;
  return invertible(v.S[g] * Phi.cols_range(0, k));
}

Mat frame_flip_T(std::size_t l, std::size_t k) { return exchange(l + k); }

TFrame frame_psi(const VBGroupoid& v, const SFrame& f) {
  return {v.base.inv[f.g], v.Inv[f.g] * f.Phi * frame_flip_T(v.l, v.k)};
}

SFrame frame_psi_inv(const VBGroupoid& v, const TFrame& t) {
  return {v.base.inv[t.g], v.Inv[t.g] * t.Phi * frame_flip_T(v.l, v.k)};
}

TFrame frame_dual(const SFrame& f) { return {f.g, mat_inv(f.Phi).transpose()}; }

SFrame tframe_to_op(const TFrame& t) { return {t.g, t.Phi * exchange(t.Phi.cols())}; }

TFrame tframe_from_op(const SFrame& s) { return {s.g, s.Phi * exchange(s.Phi.cols())}; }

bool TFrameGroupoid::is_frame(const TFrame& t) const {
  SFrame s = tframe_to_op(t);
  return frame_is_sbis(op, s.g, s.Phi);
}

BasePair TFrameGroupoid::bs(const TFrame& t) const { return frame_bt(op, tframe_to_op(t)); }

BasePair TFrameGroupoid::bt(const TFrame& t) const { return frame_bs(op, tframe_to_op(t)); }

TFrame TFrameGroupoid::bm(const TFrame& t1, const TFrame& t2) const {
  return tframe_from_op(frame_bm(op, tframe_to_op(t2), tframe_to_op(t1)));
}

TFrame TFrameGroupoid::bu(const BasePair& p) const { return tframe_from_op(frame_bu(op, p)); }

TFrame TFrameGroupoid::bi(const TFrame& t) const { return tframe_from_op(frame_bi(op, tframe_to_op(t))); }

}
