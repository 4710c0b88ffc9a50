#include "vbpb/groupoid.hpp"

#include <algorithm>

namespace vbpb {

Arrow FiniteGroupoid::arrow_index(const std::string& id) const {
  auto it = std::find(arrows.begin(), arrows.end(), id);
  if (it == arrows.end()) throw Error(ErrorKind::InvalidArgument, "unknown arrow '" + id + "'");
  return static_cast<Arrow>(it - arrows.begin());
}

Object FiniteGroupoid::object_index(const std::string& id) const {
  auto it = std::find(objects.begin(), objects.end(), id);
  if (it == objects.end()) throw Error(ErrorKind::InvalidArgument, "unknown object '" + id + "'");
  return static_cast<Object>(it - objects.begin());
}

std::vector<std::pair<Arrow, Arrow>> FiniteGroupoid::composable_pairs() const {
  std::vector<std::pair<Arrow, Arrow>> out;
  for (Arrow a = 0; a < n_arrows(); ++a)
    for (Arrow b = 0; b < n_arrows(); ++b)
      if (composable(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::string> gpd_validate(const FiniteGroupoid& g) {
  std::vector<std::string> rep;
  const int na = g.n_arrows(), no = g.n_objects();
  auto shape_ok = g.src.size() == size_t(na) && g.tgt.size() == size_t(na) &&
                  g.inv.size() == size_t(na) && g.unit.size() == size_t(no) &&
                  g.comp.size() == size_t(na) * size_t(na);
  if (!shape_ok) {
    rep.push_back("table sizes do not match object/arrow counts");
    return rep;
  }
  auto arrow_ok = [&](Arrow a) { return a >= 0 && a < na; };
  for (Arrow a = 0; a < na; ++a)
    if (g.src[a] < 0 || g.src[a] >= no || g.tgt[a] < 0 || g.tgt[a] >= no) {
      rep.push_back("arrow " + g.arrows[a] + ": src/tgt out of range");
      return rep;
    }
  for (Object x = 0; x < no; ++x) {
    Arrow u = g.unit[x];
    if (!arrow_ok(u) || g.src[u] != x || g.tgt[u] != x)
      rep.push_back("unit of " + g.objects[x] + " is not a loop at it");
  }
  for (Arrow a = 0; a < na; ++a) {
    if (!arrow_ok(g.inv[a])) {
      rep.push_back("inverse of " + g.arrows[a] + " out of range");
      continue;
    }
    Arrow i = g.inv[a];
    if (g.src[i] != g.tgt[a] || g.tgt[i] != g.src[a])
      rep.push_back("inverse of " + g.arrows[a] + " has wrong endpoints");
    if (g.inv[i] != a) rep.push_back("inv(inv(" + g.arrows[a] + ")) != " + g.arrows[a]);
  }
  if (!rep.empty()) return rep;

  for (Arrow a = 0; a < na; ++a)
    for (Arrow b = 0; b < na; ++b) {
      Arrow c = g.comp_at(a, b);
      if (!g.composable(a, b)) {
        if (c != -1) rep.push_back("comp(" + g.arrows[a] + "," + g.arrows[b] + ") defined on a non-composable pair");
        continue;
      }
      if (!arrow_ok(c)) {
        rep.push_back("comp(" + g.arrows[a] + "," + g.arrows[b] + ") undefined");
        continue;
      }
      if (g.src[c] != g.src[b] || g.tgt[c] != g.tgt[a])
        rep.push_back("comp(" + g.arrows[a] + "," + g.arrows[b] + ") = " + g.arrows[c] + " has wrong endpoints");
    }
  if (!rep.empty()) return rep;

  for (Arrow a = 0; a < na; ++a) {
    if (g.comp_at(g.unit[g.tgt[a]], a) != a || g.comp_at(a, g.unit[g.src[a]]) != a)
      rep.push_back("unit law fails at " + g.arrows[a]);
    if (g.comp_at(a, g.inv[a]) != g.unit[g.tgt[a]] || g.comp_at(g.inv[a], a) != g.unit[g.src[a]])
      rep.push_back("inverse law fails at " + g.arrows[a]);
  }
  for (Arrow a = 0; a < na; ++a)
    for (Arrow b = 0; b < na; ++b) {
      if (!g.composable(a, b)) continue;
      for (Arrow c = 0; c < na; ++c) {
        if (!g.composable(b, c)) continue;
        if (g.comp_at(g.comp_at(a, b), c) != g.comp_at(a, g.comp_at(b, c)))
          rep.push_back("associativity fails at (" + g.arrows[a] + "," + g.arrows[b] + "," + g.arrows[c] + ")");
      }
    }
  return rep;
}

FiniteGroupoid gpd_pair(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "gpd_pair: n must be >= 1");
  FiniteGroupoid g;
  for (int i = 1; i <= n; ++i) g.objects.push_back(std::to_string(i));
  // arrow (a,b) runs from b to a
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      g.arrows.push_back("(" + g.objects[a] + "," + g.objects[b] + ")");
      g.tgt.push_back(a);
      g.src.push_back(b);
    }
  int na = n * n;
  g.inv.resize(na);
  g.unit.resize(n);
  g.comp.assign(size_t(na) * na, -1);
  for (int a = 0; a < n; ++a) {
    g.unit[a] = a * n + a;
    for (int b = 0; b < n; ++b) {
      g.inv[a * n + b] = b * n + a;
      for (int c = 0; c < n; ++c) g.comp_at(a * n + b, b * n + c) = a * n + c;
    }
  }
  return g;
}

FiniteGroupoid gpd_unit(const std::vector<std::string>& points) {
  FiniteGroupoid g;
  g.objects = points;
  g.arrows = points;
  int n = static_cast<int>(points.size());
  g.comp.assign(size_t(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    g.src.push_back(i);
    g.tgt.push_back(i);
    g.unit.push_back(i);
    g.inv.push_back(i);
    g.comp_at(i, i) = i;
  }
  return g;
}

Arrow gpd_compose(const FiniteGroupoid& g, Arrow a, Arrow b) {
  if (a < 0 || b < 0 || a >= g.n_arrows() || b >= g.n_arrows())
    throw Error(ErrorKind::InvalidArgument, "gpd_compose: arrow out of range");
  if (!g.composable(a, b))
    throw Error(ErrorKind::NotComposable, g.arrows[a] + " after " + g.arrows[b]);
  return g.comp_at(a, b);
}

FiniteGroupoid gpd_opposite(const FiniteGroupoid& g) {
  FiniteGroupoid o = g;
  o.src = g.tgt;
  o.tgt = g.src;
  for (Arrow a = 0; a < g.n_arrows(); ++a)
    for (Arrow b = 0; b < g.n_arrows(); ++b) o.comp_at(a, b) = g.comp_at(b, a);
  return o;
}

bool gpd_is_unit_groupoid(const FiniteGroupoid& g) {
  for (Arrow a = 0; a < g.n_arrows(); ++a)
    if (!g.is_unit_arrow(a)) return false;
  return true;
}

}
