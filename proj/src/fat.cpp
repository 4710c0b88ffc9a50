#include "vbpb/fat.hpp"

namespace vbpb {

bool fat_is_member(const VBGroupoid& v, Arrow g, const Subspace& H) {
  if (H.ambient_dim() != v.n()) throw Error(ErrorKind::DimensionMismatch, "fat_is_member: H is not in the arrow fiber");
  return is_complement(H, kernel(v.S[g])) && is_complement(H, kernel(v.T[g]));
}

FatElement fat_make(const VBGroupoid& v, Arrow g, const Subspace& H) {
  if (!fat_is_member(v, g, H))
    throw Error(ErrorKind::FatMembershipFailure, "H at " + v.base.arrows[g] + " is not transverse to ker S and ker T");
  return {g, H};
}

FatElement fat_compose(const VBGroupoid& v, const FatElement& a, const FatElement& b) {
  const auto& G = v.base;
  if (!G.composable(a.g, b.g)) throw Error(ErrorKind::NotComposable, "fat_compose: " + G.arrows[a.g] + " after " + G.arrows[b.g]);
  const Mat& Ha = a.H.basis();
  const Mat& Hb = b.H.basis();
  Mat pair = kernel(hcat(v.S[a.g] * Ha, -(v.T[b.g] * Hb))).basis();
  Mat img = v.mul(a.g, b.g) * vcat(Ha * pair.rows_range(0, Ha.cols()), Hb * pair.rows_range(Ha.cols(), Hb.cols()));
  return {G.comp_at(a.g, b.g), image(img)};
}

FatElement fat_unit(const VBGroupoid& v, Object x) { return {v.base.unit[x], image(v.U[x])}; }

FatElement fat_inverse(const VBGroupoid& v, const FatElement& a) {
  return {v.base.inv[a.g], image(v.Inv[a.g] * a.H.basis())};
}

Mat fat_lift(const VBGroupoid& v, const FatElement& a, const Mat& e) {
  const Mat& H = a.H.basis();
  return H * solve_unique(v.S[a.g] * H, e);
}

Mat fat_act_base(const VBGroupoid& v, const FatElement& a, const Mat& e) {
  return v.T[a.g] * fat_lift(v, a, e);
}

Mat fat_act_core(const VBGroupoid& v, const FatElement& a, const Mat& c) {
  const auto& G = v.base;
  Object y = G.src[a.g], x = G.tgt[a.g];
  Arrow uy = G.unit[y], gi = G.inv[a.g];
  Mat cv = kernel_basis(v, uy) * c;
  Mat alpha = fat_lift(v, a, v.T[uy] * cv);
  // alpha o c o 0_{g^-1}
  Mat r = right_translate(v, uy, gi, cv);
  Mat out = v.mul(a.g, gi) * vcat(alpha, r);
  return kernel_coords(v, G.unit[x], out);
}

}
