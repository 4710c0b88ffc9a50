#pragma once

#include <functional>

#include "vbpb/report.hpp"
#include "vbpb/sampling.hpp"

namespace vbpb {

SFrame act2(const VBGroupoid& v, const SFrame& f, const GL2Element& e);
BasePair act1(const VBGroupoid& v, const BasePair& p, const GL1Element& f);
GL2Element change_of_coords(const VBGroupoid& v, const SFrame& f1, const SFrame& f2);
GL1Element change_of_coords_base(const VBGroupoid& v, const BasePair& p1, const BasePair& p2);

using Act2Fn = std::function<SFrame(const VBGroupoid&, const SFrame&, const GL2Element&)>;

struct VerifyOptions {
  std::string instance = "instance";
  long trials = 100;
  std::uint64_t seed = 0;
};

// Compatibility of the action with moments and with the groupoid. Then the
// change-of-coordinates identities and freeness, on random data near sp.
Report verify_2action(const VBGroupoid& v, const SampledPB& sp, const VerifyOptions& opt, const Act2Fn& act = act2);
Report principality_check(const VBGroupoid& v, const SampledPB& sp, const VerifyOptions& opt);

// Associated bundle of the frame bundle with the identity representation of
// GL(l,k), written in the gauge of one representative frame per arrow and one
// base pair per object. alpha_g = Phi0_g evaluates classes [phi, x] -> phi(x).
struct AssociatedVB {
  VBGroupoid E;
  std::vector<SFrame> rep_frame;   // per arrow
  std::vector<BasePair> rep_base;  // per object
};

AssociatedVB associated_vb(const VBGroupoid& v, const SampledPB& sp);
// Validates the bundle, checks alpha is a VB-groupoid isomorphism of full
// rank and that evaluation is independent of the representative under
// changes_per_arrow random elements per arrow.
Report certify_associated(const VBGroupoid& v, const AssociatedVB& a, const SampledPB& sp, const VerifyOptions& opt,
                          long changes_per_arrow);
// Frame of the associated bundle induced by a bundle point p at g.
SFrame assoc_frame_of(const VBGroupoid& v, const AssociatedVB& a, const SFrame& p);
Report roundtrip_frames(const VBGroupoid& v, const AssociatedVB& a, const SampledPB& sp, const VerifyOptions& opt);

using Section = std::function<GL2Element(const Mat& d)>;
// d -> u21(d, cI, cI); a 21-unit with s20 = d.
Section section_scalar_unit(std::size_t l, std::size_t k, const Q& c);
// d -> a random element at d, fixed per d through the seed.
Section section_generic(std::size_t l, std::uint64_t seed);

Report section_translation(const VBGroupoid& v, const SampledPB& sp, const Section& b, const VerifyOptions& opt,
                           bool check_morphism);

}
