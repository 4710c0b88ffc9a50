#pragma once

#include <utility>

#include "vbpb/fat.hpp"
#include "vbpb/vbgroupoid.hpp"

namespace vbpb {

// Frame of the arrow fiber at g: first l columns span the w-block, last k
// the v-block.
struct SFrame {
  Arrow g = -1;
  Mat Phi;
  Mat w_block(std::size_t l) const { return Phi.cols_range(0, l); }
  Mat v_block(std::size_t l) const { return Phi.cols_range(l, Phi.cols() - l); }
  friend bool operator==(const SFrame&, const SFrame&) = default;
};

// t-bisection frame: first k columns transverse to ker S, last l in ker T.
struct TFrame {
  Arrow g = -1;
  Mat Phi;
  friend bool operator==(const TFrame&, const TFrame&) = default;
};

struct BasePair {
  Object x = -1;
  Mat phi_c;  // l x l, in the canonical core basis at x
  Mat phi_b;  // k x k
  friend bool operator==(const BasePair&, const BasePair&) = default;
};

bool frame_is_sbis(const VBGroupoid& v, Arrow g, const Mat& Phi);
void frame_require_sbis(const VBGroupoid& v, const SFrame& f);
Mat frame_dphi(const VBGroupoid& v, const SFrame& f);
Mat basepair_moment(const VBGroupoid& v, const BasePair& p);
bool basepair_valid(const VBGroupoid& v, const BasePair& p);

BasePair frame_bs(const VBGroupoid& v, const SFrame& f);
BasePair frame_bt(const VBGroupoid& v, const SFrame& f);
SFrame frame_bm(const VBGroupoid& v, const SFrame& f1, const SFrame& f2);
SFrame frame_bu(const VBGroupoid& v, const BasePair& p);
SFrame frame_bi(const VBGroupoid& v, const SFrame& f);

std::pair<FatElement, BasePair> frame_F(const VBGroupoid& v, const SFrame& f);
SFrame frame_F_inv(const VBGroupoid& v, const FatElement& fe, const BasePair& p);

bool frame_is_tbis(const VBGroupoid& v, Arrow g, const Mat& Phi);
Mat frame_flip_T(std::size_t l, std::size_t k);
// Inv_g Phi T, a t-bisection frame at g^-1.
TFrame frame_psi(const VBGroupoid& v, const SFrame& f);
// Inverse of frame_psi.
SFrame frame_psi_inv(const VBGroupoid& v, const TFrame& t);
// Phi^-T, a t-bisection frame of vbg_dual(v) at the same arrow.
TFrame frame_dual(const SFrame& f);

// A t-bisection frame of v is an s-bisection frame of vbg_opposite(v) after
// reversing its columns; the t-frame groupoid is carried over from there.
SFrame tframe_to_op(const TFrame& t);
TFrame tframe_from_op(const SFrame& s);

// Groupoid of t-bisection frames over the same base as v. An arrow at g runs
// from tbs to tbt over s(g) and t(g); base pairs are frames of the left core
// ker T_{1_x} and of E_M. Structure maps come from the s-frame groupoid of
// the opposite VB-groupoid with the product order reversed.
struct TFrameGroupoid {
  VBGroupoid op;
  explicit TFrameGroupoid(const VBGroupoid& v) : op(vbg_opposite(v)) {}
  bool is_frame(const TFrame& t) const;
  BasePair bs(const TFrame& t) const;
  BasePair bt(const TFrame& t) const;
  TFrame bm(const TFrame& t1, const TFrame& t2) const;
  TFrame bu(const BasePair& p) const;
  TFrame bi(const TFrame& t) const;
};

}
