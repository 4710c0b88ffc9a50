#include "vbpb/vbgroupoid.hpp"

#include <sstream>

namespace vbpb {

namespace {

std::string pair_name(const FiniteGroupoid& b, Arrow g, Arrow h) {
  return "(" + b.arrows[g] + "," + b.arrows[h] + ")";
}

bool shape(const Mat& m, std::size_t r, std::size_t c) { return m.rows() == r && m.cols() == c; }

VBGroupoid blank(const FiniteGroupoid& base, std::size_t l, std::size_t k) {
  VBGroupoid v;
  v.base = base;
  v.l = l;
  v.k = k;
  v.S.resize(base.arrows.size());
  v.T.resize(base.arrows.size());
  v.Inv.resize(base.arrows.size());
  v.U.resize(base.objects.size());
  v.Mul.resize(base.arrows.size() * base.arrows.size());
  return v;
}

void require_functorial(const FiniteGroupoid& base, std::size_t dim, const std::vector<Mat>& r) {
  for (Arrow g = 0; g < base.n_arrows(); ++g)
    if (!shape(r[g], dim, dim))
      throw Error(ErrorKind::NonFunctorialRep, "rep(" + base.arrows[g] + ") has the wrong shape");
  for (Object x = 0; x < base.n_objects(); ++x)
    if (r[base.unit[x]] != Mat::identity(dim))
      throw Error(ErrorKind::NonFunctorialRep, "rep(" + base.arrows[base.unit[x]] + ") is not the identity");
  for (auto [g, h] : base.composable_pairs())
    if (r[base.comp_at(g, h)] != r[g] * r[h])
      throw Error(ErrorKind::NonFunctorialRep, "rep fails to be multiplicative at " + pair_name(base, g, h));
}

}

Mat kernel_basis(const VBGroupoid& v, Arrow g) { return kernel(v.S[g]).basis(); }

Mat fibered_basis(const VBGroupoid& v, Arrow g, Arrow h) {
  return kernel(hcat(v.S[g], -v.T[h])).basis();
}

Mat kernel_coords(const VBGroupoid& v, Arrow g, const Mat& e) {
  return solve_unique(kernel_basis(v, g), e);
}

Mat right_translate(const VBGroupoid& v, Arrow h, Arrow g, const Mat& e) {
  if (!v.base.composable(h, g))
    throw Error(ErrorKind::NotComposable, "right translation by " + v.base.arrows[g]);
  return v.mul(h, g) * vcat(e, Mat(v.n(), e.cols()));
}

Mat vbg_right_translation(const VBGroupoid& v, Arrow h, Arrow g) {
  Mat img = right_translate(v, h, g, kernel_basis(v, h));
  return kernel_coords(v, v.base.comp_at(h, g), img);
}

Core vbg_core(const VBGroupoid& v, Object x) {
  Arrow u = v.base.unit[x];
  Core c;
  c.C = kernel(v.S[u]);
  c.rho = v.T[u] * c.C.basis();
  return c;
}

std::vector<std::string> vbg_validate(const VBGroupoid& v) {
  std::vector<std::string> rep = gpd_validate(v.base);
  if (!rep.empty()) return rep;
  const auto& G = v.base;
  const std::size_t n = v.n(), k = v.k;
  const int na = G.n_arrows();

  if (v.S.size() != size_t(na) || v.T.size() != size_t(na) || v.Inv.size() != size_t(na) ||
      v.U.size() != size_t(G.n_objects()) || v.Mul.size() != size_t(na) * na) {
    rep.push_back("structure map tables do not match the base groupoid");
    return rep;
  }
  for (Arrow g = 0; g < na; ++g) {
    const auto& id = G.arrows[g];
    if (!shape(v.S[g], k, n)) rep.push_back("S at " + id + " has wrong shape");
    if (!shape(v.T[g], k, n)) rep.push_back("T at " + id + " has wrong shape");
    if (!shape(v.Inv[g], n, n)) rep.push_back("Inv at " + id + " has wrong shape");
  }
  for (Object x = 0; x < G.n_objects(); ++x)
    if (!shape(v.U[x], n, k)) rep.push_back("U at " + G.objects[x] + " has wrong shape");
  for (auto [g, h] : G.composable_pairs())
    if (!shape(v.mul(g, h), n, 2 * n)) rep.push_back("Mul at " + pair_name(G, g, h) + " has wrong shape");
  if (!rep.empty()) return rep;

  for (Arrow g = 0; g < na; ++g) {
    const auto& id = G.arrows[g];
    if (rank(v.S[g]) != k) rep.push_back("S at " + id + " is not surjective");
    if (rank(v.T[g]) != k) rep.push_back("T at " + id + " is not surjective");
    if (!invertible(v.Inv[g])) rep.push_back("Inv at " + id + " is singular");
  }
  if (!rep.empty()) return rep;

  const Mat Ik = Mat::identity(k), In = Mat::identity(n);
  for (Object x = 0; x < G.n_objects(); ++x) {
    Arrow u = G.unit[x];
    if (v.S[u] * v.U[x] != Ik) rep.push_back("S.U != I at " + G.objects[x]);
    if (v.T[u] * v.U[x] != Ik) rep.push_back("T.U != I at " + G.objects[x]);
  }

  for (auto [g, h] : G.composable_pairs()) {
    std::string nm = pair_name(G, g, h);
    Arrow gh = G.comp_at(g, h);
    Mat F = fibered_basis(v, g, h);
    if (F.cols() != 2 * n - k) {
      rep.push_back("fibered subspace at " + nm + " has wrong dimension");
      continue;
    }
    Mat W = v.mul(g, h) * F;
    if (v.S[gh] * W != v.S[h] * F.rows_range(n, n)) rep.push_back("source compatibility fails at " + nm);
    if (v.T[gh] * W != v.T[g] * F.rows_range(0, n)) rep.push_back("target compatibility fails at " + nm);
    if (rank(W) != n) rep.push_back("multiplication at " + nm + " is not onto the fiber");
  }

  for (Arrow g = 0; g < na; ++g) {
    const auto& id = G.arrows[g];
    Object x = G.tgt[g], y = G.src[g];
    Arrow gi = G.inv[g];
    if (v.mul(G.unit[x], g) * vcat(v.U[x] * v.T[g], In) != In) rep.push_back("left unit law fails at " + id);
    if (v.mul(g, G.unit[y]) * vcat(In, v.U[y] * v.S[g]) != In) rep.push_back("right unit law fails at " + id);
    if (v.S[gi] * v.Inv[g] != v.T[g]) rep.push_back("S of inverse != T at " + id);
    if (v.T[gi] * v.Inv[g] != v.S[g]) rep.push_back("T of inverse != S at " + id);
    if (v.mul(g, gi) * vcat(In, v.Inv[g]) != v.U[x] * v.T[g]) rep.push_back("inverse law a.a^-1 fails at " + id);
    if (v.mul(gi, g) * vcat(v.Inv[g], In) != v.U[y] * v.S[g]) rep.push_back("inverse law a^-1.a fails at " + id);
  }

  for (Arrow a = 0; a < na; ++a)
    for (Arrow b = 0; b < na; ++b) {
      if (!G.composable(a, b)) continue;
      for (Arrow c = 0; c < na; ++c) {
        if (!G.composable(b, c)) continue;
        Mat Z = Mat::zero(k, n);
        Mat sys = blocks(hcat(v.S[a], -v.T[b]), Z, hcat(Z, v.S[b]), -v.T[c]);
        Mat F = kernel(sys).basis();
        Mat xa = F.rows_range(0, n), xb = F.rows_range(n, n), xc = F.rows_range(2 * n, n);
        Mat lhs = v.mul(G.comp_at(a, b), c) * vcat(v.mul(a, b) * vcat(xa, xb), xc);
        Mat rhs = v.mul(a, G.comp_at(b, c)) * vcat(xa, v.mul(b, c) * vcat(xb, xc));
        if (lhs != rhs)
          rep.push_back("associativity fails at (" + G.arrows[a] + "," + G.arrows[b] + "," + G.arrows[c] + ")");
      }
    }
  return rep;
}

void vbg_require_valid(const VBGroupoid& v) {
  auto rep = vbg_validate(v);
  if (rep.empty()) return;
  std::ostringstream os;
  for (std::size_t i = 0; i < rep.size(); ++i) os << (i ? "; " : "") << rep[i];
  throw Error(ErrorKind::ValidationFailure, os.str());
}

VBGroupoid vbg_trivial_core(const FiniteGroupoid& base, std::size_t k, const ArrowRep& rep) {
  std::vector<Mat> r;
  for (Arrow g = 0; g < base.n_arrows(); ++g) r.push_back(rep(g));
  require_functorial(base, k, r);
  VBGroupoid v = blank(base, 0, k);
  Mat I = Mat::identity(k);
  for (Arrow g = 0; g < base.n_arrows(); ++g) {
    v.S[g] = I;
    v.T[g] = r[g];
    v.Inv[g] = r[g];
  }
  for (Object x = 0; x < base.n_objects(); ++x) v.U[x] = I;
  for (auto [g, h] : base.composable_pairs()) v.mul(g, h) = hcat(Mat::zero(k, k), I);
  return v;
}

VBGroupoid vbg_trivial_base(const FiniteGroupoid& base, std::size_t l, const ArrowRep& rep) {
  std::vector<Mat> r;
  for (Arrow g = 0; g < base.n_arrows(); ++g) r.push_back(rep(g));
  require_functorial(base, l, r);
  VBGroupoid v = blank(base, l, 0);
  // fiber at g is the core at t(g); (g1,c1)(g2,c2) = (g1g2, c1 + g1.c2)
  for (Arrow g = 0; g < base.n_arrows(); ++g) {
    v.S[g] = Mat(0, l);
    v.T[g] = Mat(0, l);
    v.Inv[g] = -mat_inv(r[g]);
  }
  for (Object x = 0; x < base.n_objects(); ++x) v.U[x] = Mat(l, 0);
  for (auto [g, h] : base.composable_pairs()) v.mul(g, h) = hcat(Mat::identity(l), r[g]);
  return v;
}

VBGroupoid vbg_pullback(const FiniteGroupoid& base, std::size_t k) {
  VBGroupoid v = blank(base, k, k);
  Mat I = Mat::identity(k), Z = Mat::zero(k, k);
  for (Arrow g = 0; g < base.n_arrows(); ++g) {
    v.S[g] = hcat(Z, I);
    v.T[g] = hcat(I, Z);
    v.Inv[g] = blocks(Z, I, I, Z);
  }
  for (Object x = 0; x < base.n_objects(); ++x) v.U[x] = vcat(I, I);
  // (a1,b1)(a2,b2) = (a1,b2) when b1 = a2
  for (auto [g, h] : base.composable_pairs())
    v.mul(g, h) = blocks(hcat(I, Z), hcat(Z, Z), hcat(Z, Z), hcat(Z, I));
  return v;
}

VBGroupoid vbg_canonical(std::size_t l, std::size_t k, const std::vector<Mat>& sample) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (!shape(sample[i], k, l)) throw Error(ErrorKind::DimensionMismatch, "vbg_canonical: sample point is not k x l");
    names.push_back(sample[i].str());
  }
  VBGroupoid v = blank(gpd_unit(names), l, k);
  Mat Il = Mat::identity(l), Ik = Mat::identity(k);
  Mat Zlk = Mat::zero(l, k), Zkl = Mat::zero(k, l);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const Mat& d = sample[i];
    v.S[i] = hcat(Zkl, Ik);
    v.T[i] = hcat(d, Ik);
    v.Inv[i] = blocks(-Il, Zlk, d, Ik);
    v.U[i] = vcat(Zlk, Ik);
    // (w1,v1)(w2,v2) = (w1+w2, v2)
    v.mul(i, i) = blocks(hcat(Il, Zlk), hcat(Il, Zlk), hcat(Zkl, Mat::zero(k, k)), hcat(Zkl, Ik));
  }
  return v;
}

VBGroupoid vbg_dual(const VBGroupoid& v) {
  vbg_require_valid(v);
  const auto& G = v.base;
  const std::size_t n = v.n(), l = v.l, k = v.k;
  VBGroupoid d = blank(G, k, l);
  std::vector<Mat> K(G.n_objects());
  for (Object x = 0; x < G.n_objects(); ++x) K[x] = kernel_basis(v, G.unit[x]);

  for (Arrow g = 0; g < G.n_arrows(); ++g) {
    Object x = G.tgt[g], y = G.src[g];
    Arrow uy = G.unit[y], ux = G.unit[x];
    // s*(xi)(c) = -xi(m(0_g, i(c))), t*(xi)(c) = xi(m(c, 0_g))
    Mat Y = v.mul(g, uy) * vcat(Mat::zero(n, l), v.Inv[uy] * K[y]);
    Mat Z = v.mul(ux, g) * vcat(K[x], Mat::zero(n, l));
    d.S[g] = -Y.transpose();
    d.T[g] = Z.transpose();
    d.Inv[g] = -v.Inv[G.inv[g]].transpose();
  }
  for (Object x = 0; x < G.n_objects(); ++x) {
    Mat P = mat_inv(hcat(K[x], v.U[x]));
    d.U[x] = P.rows_range(0, l).transpose();
  }
  // (xi1 o xi2)(m(a,b)) = xi1(a) + xi2(b) on the fibered subspace; n
  // independent images of m pin the product down.
  for (auto [g, h] : G.composable_pairs()) {
    Mat F = fibered_basis(v, g, h);
    Mat W = v.mul(g, h) * F;
    auto sel = independent_columns(W);
    d.mul(g, h) = solve_unique(W.pick_cols(sel).transpose(), F.pick_cols(sel).transpose());
  }
  return d;
}

VBGroupoid vbg_from_anchored(const Anchored2VB& a) {
  if (a.points.empty()) throw Error(ErrorKind::InvalidArgument, "vbg_from_anchored: no points");
  if (a.e1_dim.size() != a.points.size() || a.e0_dim.size() != a.points.size() || a.delta.size() != a.points.size())
    throw Error(ErrorKind::DimensionMismatch, "vbg_from_anchored: per-point tables disagree in length");
  std::size_t l = a.e1_dim[0], k = a.e0_dim[0];
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (a.e1_dim[i] != l || a.e0_dim[i] != k)
      throw Error(ErrorKind::DimensionMismatch, "vbg_from_anchored: fiber dimensions vary across points");
    if (!shape(a.delta[i], k, l))
      throw Error(ErrorKind::DimensionMismatch, "vbg_from_anchored: anchor at " + a.points[i] + " has wrong shape");
  }
  VBGroupoid v = vbg_canonical(l, k, a.delta);
  v.base = gpd_unit(a.points);
  return v;
}

Anchored2VB vbg_to_anchored(const VBGroupoid& v) {
  if (!gpd_is_unit_groupoid(v.base)) throw Error(ErrorKind::NonUnitBase, "vbg_to_anchored: base has non-unit arrows");
  Anchored2VB a;
  a.points = v.base.objects;
  for (Object x = 0; x < v.base.n_objects(); ++x) {
    a.e1_dim.push_back(v.l);
    a.e0_dim.push_back(v.k);
    a.delta.push_back(vbg_core(v, x).rho);
  }
  return a;
}

VBGroupoid vbg_opposite(const VBGroupoid& v) {
  VBGroupoid o = v;
  o.base = gpd_opposite(v.base);
  o.S = v.T;
  o.T = v.S;
  const std::size_t n = v.n();
  for (auto [a, b] : o.base.composable_pairs()) {
    const Mat& m = v.mul(b, a);
    o.mul(a, b) = hcat(m.cols_range(n, n), m.cols_range(0, n));
  }
  return o;
}

std::vector<std::string> vbg_double_dual_check(const VBGroupoid& v) {
  std::vector<std::string> rep;
  VBGroupoid d = vbg_dual(v);
  VBGroupoid dd = vbg_dual(d);
  const auto& G = v.base;
  std::vector<Mat> N(G.n_objects());
  for (Object x = 0; x < G.n_objects(); ++x) N[x] = kernel_basis(d, G.unit[x]).transpose() * v.U[x];
  if (dd.l != v.l || dd.k != v.k) {
    rep.push_back("double dual has a different rank");
    return rep;
  }
  for (Arrow g = 0; g < G.n_arrows(); ++g) {
    const auto& id = G.arrows[g];
    if (dd.S[g] != N[G.src[g]] * v.S[g]) rep.push_back("double dual S differs at " + id);
    if (dd.T[g] != N[G.tgt[g]] * v.T[g]) rep.push_back("double dual T differs at " + id);
    if (dd.Inv[g] != v.Inv[g]) rep.push_back("double dual Inv differs at " + id);
  }
  for (Object x = 0; x < G.n_objects(); ++x)
    if (dd.U[x] * N[x] != v.U[x]) rep.push_back("double dual U differs at " + G.objects[x]);
  for (auto [g, h] : G.composable_pairs()) {
    Mat F = fibered_basis(v, g, h);
    if (dd.mul(g, h) * F != v.mul(g, h) * F) rep.push_back("double dual Mul differs at " + pair_name(G, g, h));
  }
  return rep;
}

}
