#include "vbpb/specio.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace vbpb {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "vbpb-spec/1";

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, "missing field \"" + key + "\"");
  return *it;
}

std::string need_str(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

std::size_t need_dim(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Q parse_entry(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Q(mpz_class(j.dump()));
  if (!j.is_string()) bad(where, "matrix entries must be rational strings");
  try {
    return q_parse(j.get<std::string>());
  } catch (const Error&) {
    bad(where, "bad rational \"" + j.get<std::string>() + "\"");
  }
}

// r x c grid of rows; a 0-row matrix is [] and an r x 0 matrix is r empty rows
Mat parse_mat(const json& j, std::size_t r, std::size_t c, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a matrix (array of rows)");
  if (j.size() != r) bad(where, "expected " + std::to_string(r) + " rows, got " + std::to_string(j.size()));
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const json& row = j[i];
    std::string w = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != c)
      bad(w, "expected a row of " + std::to_string(c) + " entries");
    for (std::size_t jj = 0; jj < c; ++jj) m(i, jj) = parse_entry(row[jj], w + "[" + std::to_string(jj) + "]");
  }
  return m;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(q_str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

FiniteGroupoid parse_groupoid(const json& j, const std::string& where) {
  if (j.is_object() && j.contains("pair")) {
    long long n = need(j, "pair", where).is_number_integer() ? j["pair"].get<long long>() : -1;
    if (n < 1) bad(where + ".pair", "expected a positive integer");
    return gpd_pair(int(n));
  }
  if (j.is_object() && j.contains("unit")) {
    const json& pts = j["unit"];
    if (!pts.is_array() || pts.empty()) bad(where + ".unit", "expected a non-empty list of point names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < pts.size(); ++i) names.push_back(need_str(pts[i], where + ".unit[" + std::to_string(i) + "]"));
    return gpd_unit(names);
  }
  FiniteGroupoid g;
  const json& objs = need(j, "objects", where);
  if (!objs.is_array()) bad(where + ".objects", "expected a list");
  for (std::size_t i = 0; i < objs.size(); ++i) g.objects.push_back(need_str(objs[i], where + ".objects[" + std::to_string(i) + "]"));
  std::map<std::string, int> oi, ai;
  for (std::size_t i = 0; i < g.objects.size(); ++i)
    if (!oi.emplace(g.objects[i], int(i)).second) bad(where + ".objects", "duplicate object \"" + g.objects[i] + "\"");
  auto obj = [&](const json& x, const std::string& w) {
    auto it = oi.find(need_str(x, w));
    if (it == oi.end()) bad(w, "unknown object \"" + x.get<std::string>() + "\"");
    return it->second;
  };
  const json& arrs = need(j, "arrows", where);
  if (!arrs.is_array()) bad(where + ".arrows", "expected a list");
  for (std::size_t i = 0; i < arrs.size(); ++i) {
    std::string w = where + ".arrows[" + std::to_string(i) + "]";
    std::string id = need_str(need(arrs[i], "id", w), w + ".id");
    if (!ai.emplace(id, int(i)).second) bad(w, "duplicate arrow \"" + id + "\"");
    g.arrows.push_back(id);
    g.src.push_back(obj(need(arrs[i], "src", w), w + ".src"));
    g.tgt.push_back(obj(need(arrs[i], "tgt", w), w + ".tgt"));
  }
  auto arr = [&](const json& x, const std::string& w) {
    auto it = ai.find(need_str(x, w));
    if (it == ai.end()) bad(w, "unknown arrow \"" + x.get<std::string>() + "\"");
    return it->second;
  };
  const json& units = need(j, "units", where);
  g.unit.assign(g.objects.size(), -1);
  for (std::size_t x = 0; x < g.objects.size(); ++x)
    g.unit[x] = arr(need(units, g.objects[x], where + ".units"), where + ".units." + g.objects[x]);
  const json& invs = need(j, "inverses", where);
  g.inv.assign(g.arrows.size(), -1);
  for (std::size_t a = 0; a < g.arrows.size(); ++a)
    g.inv[a] = arr(need(invs, g.arrows[a], where + ".inverses"), where + ".inverses." + g.arrows[a]);
  const json& comp = need(j, "composition", where);
  if (!comp.is_array()) bad(where + ".composition", "expected a list of [a, b, ab] triples");
  g.comp.assign(g.arrows.size() * g.arrows.size(), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    std::string w = where + ".composition[" + std::to_string(i) + "]";
    if (!comp[i].is_array() || comp[i].size() != 3) bad(w, "expected [a, b, ab]");
    Arrow a = arr(comp[i][0], w), b = arr(comp[i][1], w), c = arr(comp[i][2], w);
    if (g.comp_at(a, b) != -1) bad(w, "composite given twice");
    g.comp_at(a, b) = c;
  }
  auto rep = gpd_validate(g);
  if (!rep.empty()) {
    std::string all;
    for (std::size_t i = 0; i < rep.size(); ++i) all += (i ? "; " : "") + rep[i];
    throw Error(ErrorKind::ValidationFailure, all);
  }
  return g;
}

json groupoid_json(const FiniteGroupoid& g) {
  json j;
  j["objects"] = g.objects;
  json arrs = json::array();
  for (Arrow a = 0; a < g.n_arrows(); ++a)
    arrs.push_back({{"id", g.arrows[a]}, {"src", g.objects[g.src[a]]}, {"tgt", g.objects[g.tgt[a]]}});
  j["arrows"] = arrs;
  json units = json::object(), invs = json::object();
  for (Object x = 0; x < g.n_objects(); ++x) units[g.objects[x]] = g.arrows[g.unit[x]];
  for (Arrow a = 0; a < g.n_arrows(); ++a) invs[g.arrows[a]] = g.arrows[g.inv[a]];
  j["units"] = units;
  j["inverses"] = invs;
  json comp = json::array();
  for (auto [a, b] : g.composable_pairs()) comp.push_back({g.arrows[a], g.arrows[b], g.arrows[g.comp_at(a, b)]});
  j["composition"] = comp;
  return j;
}

VBGroupoid parse_explicit(const json& gj, const json& vj) {
  VBGroupoid v;
  v.base = parse_groupoid(gj, "groupoid");
  const auto& G = v.base;
  v.l = need_dim(need(vj, "l", "vb"), "vb.l");
  v.k = need_dim(need(vj, "k", "vb"), "vb.k");
  const std::size_t n = v.n(), k = v.k;
  auto per_arrow = [&](const char* key, std::size_t r, std::size_t c, std::vector<Mat>& out) {
    const json& block = need(vj, key, "vb");
    std::string w = std::string("vb.") + key;
    for (Arrow a = 0; a < G.n_arrows(); ++a)
      out.push_back(parse_mat(need(block, G.arrows[a], w), r, c, w + "." + G.arrows[a]));
  };
  per_arrow("S", k, n, v.S);
  per_arrow("T", k, n, v.T);
  per_arrow("Inv", n, n, v.Inv);
  const json& ub = need(vj, "U", "vb");
  for (Object x = 0; x < G.n_objects(); ++x)
    v.U.push_back(parse_mat(need(ub, G.objects[x], "vb.U"), n, k, "vb.U." + G.objects[x]));
  v.Mul.assign(G.arrows.size() * G.arrows.size(), Mat());
  std::vector<bool> seen(v.Mul.size(), false);
  const json& mb = need(vj, "Mul", "vb");
  if (!mb.is_array()) bad("vb.Mul", "expected a list of {g, h, M}");
  for (std::size_t i = 0; i < mb.size(); ++i) {
    std::string w = "vb.Mul[" + std::to_string(i) + "]";
    std::string gs = need_str(need(mb[i], "g", w), w + ".g"), hs = need_str(need(mb[i], "h", w), w + ".h");
    auto find = [&](const std::string& id) {
      for (Arrow a = 0; a < G.n_arrows(); ++a)
        if (G.arrows[a] == id) return a;
      bad(w, "unknown arrow \"" + id + "\"");
    };
    Arrow g = find(gs), h = find(hs);
    if (!G.composable(g, h)) bad(w, "(" + gs + "," + hs + ") is not composable");
    std::size_t idx = std::size_t(g) * G.arrows.size() + h;
    if (seen[idx]) bad(w, "given twice");
    seen[idx] = true;
    v.Mul[idx] = parse_mat(need(mb[i], "M", w), n, 2 * n, w + ".M");
  }
  for (auto [g, h] : G.composable_pairs())
    if (!seen[std::size_t(g) * G.arrows.size() + h]) bad("vb.Mul", "missing entry for (" + G.arrows[g] + "," + G.arrows[h] + ")");
  return v;
}

VBGroupoid parse_construct(const json& c, const std::string& where) {
  std::string kind = need_str(need(c, "kind", where), where + ".kind");
  if (kind == "pullback") {
    return vbg_pullback(parse_groupoid(need(c, "groupoid", where), where + ".groupoid"),
                        need_dim(need(c, "k", where), where + ".k"));
  }
  if (kind == "trivial_core" || kind == "trivial_base") {
    FiniteGroupoid g = parse_groupoid(need(c, "groupoid", where), where + ".groupoid");
    const char* dk = kind == "trivial_core" ? "k" : "l";
    std::size_t r = need_dim(need(c, dk, where), where + "." + dk);
    const json& rj = need(c, "rep", where);
    std::vector<Mat> rep;
    for (Arrow a = 0; a < g.n_arrows(); ++a)
      rep.push_back(parse_mat(need(rj, g.arrows[a], where + ".rep"), r, r, where + ".rep." + g.arrows[a]));
    ArrowRep f = [rep](Arrow a) { return rep[a]; };
    return kind == "trivial_core" ? vbg_trivial_core(g, r, f) : vbg_trivial_base(g, r, f);
  }
  if (kind == "canonical") {
    std::size_t l = need_dim(need(c, "l", where), where + ".l"), k = need_dim(need(c, "k", where), where + ".k");
    const json& s = need(c, "sample", where);
    if (!s.is_array() || s.empty()) bad(where + ".sample", "expected a non-empty list of k x l matrices");
    std::vector<Mat> pts;
    for (std::size_t i = 0; i < s.size(); ++i) pts.push_back(parse_mat(s[i], k, l, where + ".sample[" + std::to_string(i) + "]"));
    return vbg_canonical(l, k, pts);
  }
  if (kind == "dual") {
    const json& of = need(c, "of", where);
    VBGroupoid inner = of.contains("construct") ? parse_construct(of["construct"], where + ".of.construct")
                                                : parse_explicit(need(of, "groupoid", where + ".of"), need(of, "vb", where + ".of"));
    vbg_require_valid(inner);
    return vbg_dual(inner);
  }
  if (kind == "from_anchored") {
    const json& pts = need(c, "points", where);
    if (!pts.is_array() || pts.empty()) bad(where + ".points", "expected a non-empty list");
    Anchored2VB a;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::string w = where + ".points[" + std::to_string(i) + "]";
      a.points.push_back(need_str(need(pts[i], "id", w), w + ".id"));
      std::size_t e1 = need_dim(need(pts[i], "e1", w), w + ".e1"), e0 = need_dim(need(pts[i], "e0", w), w + ".e0");
      a.e1_dim.push_back(e1);
      a.e0_dim.push_back(e0);
      a.delta.push_back(parse_mat(need(pts[i], "delta", w), e0, e1, w + ".delta"));
    }
    return vbg_from_anchored(a);
  }
  bad(where + ".kind", "unknown constructor \"" + kind + "\"");
}

// Anything short enough stays on one line.
void pretty(std::ostream& os, const json& j, int depth) {
  auto pad = [&](int d) { os << std::string(std::size_t(2 * d), ' '); };
  std::string flat = j.dump();
  if (!j.is_structured() || flat.size() + std::size_t(2 * depth) <= 96) {
    os << flat;
    return;
  }
  bool obj = j.is_object();
  os << (obj ? '{' : '[') << '\n';
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    pad(depth + 1);
    if (obj) os << json(it.key()).dump() << ": ";
    pretty(os, *it, depth + 1);
    os << (i + 1 < j.size() ? ",\n" : "\n");
  }
  pad(depth);
  os << (obj ? '}' : ']');
}

std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}

VBGroupoid parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is one past the offending character
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    auto p = what.find("syntax error");
    throw Error(ErrorKind::ParseError, position_of(text, at) + ": " + (p == std::string::npos ? what : what.substr(p)));
  }
  if (!j.is_object()) bad("top level", "expected an object");
  if (j.contains("format") && need_str(j["format"], "format") != kFormat)
    bad("format", "unsupported format \"" + j["format"].get<std::string>() + "\"");
  VBGroupoid v = j.contains("construct") ? parse_construct(j["construct"], "construct")
                                         : parse_explicit(need(j, "groupoid", "top level"), need(j, "vb", "top level"));
  vbg_require_valid(v);
  return v;
}

VBGroupoid load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

std::string spec_to_string(const VBGroupoid& v) {
  const auto& G = v.base;
  json vb;
  vb["l"] = v.l;
  vb["k"] = v.k;
  for (const char* key : {"S", "T", "Inv"}) {
    const auto& src = std::string(key) == "S" ? v.S : std::string(key) == "T" ? v.T : v.Inv;
    json m = json::object();
    for (Arrow a = 0; a < G.n_arrows(); ++a) m[G.arrows[a]] = mat_json(src[a]);
    vb[key] = m;
  }
  json u = json::object();
  for (Object x = 0; x < G.n_objects(); ++x) u[G.objects[x]] = mat_json(v.U[x]);
  vb["U"] = u;
  json mul = json::array();
  for (auto [g, h] : G.composable_pairs())
    mul.push_back({{"g", G.arrows[g]}, {"h", G.arrows[h]}, {"M", mat_json(v.mul(g, h))}});
  vb["Mul"] = mul;
  json top;
  top["format"] = kFormat;
  top["groupoid"] = groupoid_json(G);
  top["vb"] = vb;
  std::ostringstream os;
  pretty(os, top, 0);
  os << '\n';
  return os.str();
}

void save_spec(const VBGroupoid& v, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << spec_to_string(v);
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

}
