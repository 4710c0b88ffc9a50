#pragma once

#include "vbpb/vbgroupoid.hpp"

namespace vbpb {

struct FatElement {
  Arrow g = -1;
  Subspace H;  // dim k inside the fiber at g
  friend bool operator==(const FatElement&, const FatElement&) = default;
};

bool fat_is_member(const VBGroupoid& v, Arrow g, const Subspace& H);
FatElement fat_make(const VBGroupoid& v, Arrow g, const Subspace& H);  // throws FatMembershipFailure
FatElement fat_compose(const VBGroupoid& v, const FatElement& a, const FatElement& b);
FatElement fat_unit(const VBGroupoid& v, Object x);
FatElement fat_inverse(const VBGroupoid& v, const FatElement& a);

// (S restricted to H)^-1 applied to vectors of (E_M)_{s(g)}; lands in H.
Mat fat_lift(const VBGroupoid& v, const FatElement& a, const Mat& e);
// e in (E_M)_{s(g)} -> T (S|_H)^-1 e in (E_M)_{t(g)}; columns act independently.
Mat fat_act_base(const VBGroupoid& v, const FatElement& a, const Mat& e);
// c in core coordinates at s(g) -> core coordinates at t(g).
Mat fat_act_core(const VBGroupoid& v, const FatElement& a, const Mat& c);

}
