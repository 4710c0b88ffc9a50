#pragma once

#include <string>
#include <vector>

#include "vbpb/errors.hpp"

namespace vbpb {

using Arrow = int;
using Object = int;

// Finite groupoid with arrows and objects addressed by index. comp(a,b) is
// defined iff src(a) == tgt(b), and then src(ab) = src(b), tgt(ab) = tgt(a).
struct FiniteGroupoid {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::vector<Object> src, tgt;
  std::vector<Arrow> unit;  // per object
  std::vector<Arrow> inv;   // per arrow
  std::vector<Arrow> comp;  // arrows.size()^2 table, -1 where undefined

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_arrows() const { return static_cast<int>(arrows.size()); }
  Arrow comp_at(Arrow a, Arrow b) const { return comp[a * arrows.size() + b]; }
  Arrow& comp_at(Arrow a, Arrow b) { return comp[a * arrows.size() + b]; }
  bool composable(Arrow a, Arrow b) const { return src[a] == tgt[b]; }
  bool is_unit_arrow(Arrow a) const { return unit[src[a]] == a; }

  Arrow arrow_index(const std::string& id) const;
  Object object_index(const std::string& id) const;

  // Composable pairs (a,b) in lexicographic index order.
  std::vector<std::pair<Arrow, Arrow>> composable_pairs() const;

  friend bool operator==(const FiniteGroupoid&, const FiniteGroupoid&) = default;
};

std::vector<std::string> gpd_validate(const FiniteGroupoid& g);
FiniteGroupoid gpd_pair(int n);
FiniteGroupoid gpd_unit(const std::vector<std::string>& points);
Arrow gpd_compose(const FiniteGroupoid& g, Arrow a, Arrow b);
// Same arrows, src/tgt swapped, comp_op(a,b) = comp(b,a).
FiniteGroupoid gpd_opposite(const FiniteGroupoid& g);
bool gpd_is_unit_groupoid(const FiniteGroupoid& g);

}
