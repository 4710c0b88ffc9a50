#include "vbpb/sampling.hpp"

namespace vbpb {

std::uint64_t Rng::next() {
  std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "Rng::below(0)");
  std::uint64_t lim = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
  std::uint64_t x;
  do x = next(); while (x >= lim);
  return x % n;
}

Rng Rng::fork(std::uint64_t stream) {
  Rng child(next() ^ (stream * 0xd1b54a32d192ed03ULL));
  child.next();
  return child;
}

Q rand_q(Rng& r) {
  long p = static_cast<long>(r.below(9)) - 4;
  long q = static_cast<long>(r.below(3)) + 1;
  Q x{mpz_class(p), mpz_class(q)};
  x.canonicalize();
  return x;
}

Mat rand_mat(Rng& r, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rand_q(r);
  return m;
}

Mat rand_invertible(Rng& r, std::size_t n) {
  for (;;) {
    Mat m = rand_mat(r, n, n);
    if (invertible(m)) return m;
  }
}

GL1Element rand_gl1_at(Rng& r, const Mat& d) {
  return {d, rand_invertible(r, d.cols()), rand_invertible(r, d.rows())};
}

GL2Element rand_gl2_at(Rng& r, const Mat& d, std::size_t l) {
  std::size_t k = d.rows();
  for (;;) {
    GL2Element e{d, rand_invertible(r, l), rand_mat(r, l, k), rand_invertible(r, k)};
    if (gl2_member(e)) return e;
  }
}

GL2Element rand_gl2_with_s21(Rng& r, const GL1Element& f) {
  std::size_t l = f.A.rows(), k = f.B.rows();
  for (;;) {
    Mat J = rand_mat(r, l, k);
    Mat P = Mat::identity(l) + J * f.d;
    if (!invertible(P)) continue;
    GL2Element e{f.d, P * f.A, J, f.B};
    if (gl2_member(e)) return e;
  }
}

GL1Element rand_isotropy(Rng& r, const Mat& d) {
  const std::size_t k = d.rows(), l = d.cols();
  // unknowns: A row-major, then B row-major
  Mat L(k * l, l * l + k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      std::size_t row = i * l + j;
      for (std::size_t m = 0; m < l; ++m) L(row, m * l + j) += d(i, m);
      for (std::size_t m = 0; m < k; ++m) L(row, l * l + i * k + m) -= d(m, j);
    }
  Mat K = kernel(L).basis();
  for (;;) {
    Mat x = K * rand_mat(r, K.cols(), 1);
    Mat A(l, l), B(k, k);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) A(i, j) = x(i * l + j, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) B(i, j) = x(l * l + i * k + j, 0);
    if (invertible(A) && invertible(B)) return {d, A, B};
  }
}

Mat rand_isotropy_J(Rng& r, const Mat& d) {
  for (;;) {
    Mat J = rand_mat(r, d.cols(), d.rows());
    if (invertible(Mat::identity(d.cols()) + J * d)) return J;
  }
}

namespace {

// Standard basis vectors completing ker S_g to the whole fiber.
Mat complement_basis(const VBGroupoid& v, Arrow g) {
  Mat K = kernel_basis(v, g);
  Mat acc = K;
  std::vector<std::size_t> pick;
  for (std::size_t i = 0; i < v.n() && pick.size() < v.k; ++i) {
    Mat trial = hcat(acc, Mat::identity(v.n()).col(i));
    if (rank(trial) == trial.cols()) {
      acc = trial;
      pick.push_back(i);
    }
  }
  return Mat::identity(v.n()).pick_cols(pick);
}

// k columns transverse to ker S_g and ker T_g: complement basis plus a
// random kernel perturbation, rejected until T is invertible on them.
Mat rand_transverse_block(Rng& r, const VBGroupoid& v, Arrow g, std::size_t* rejected = nullptr) {
  Mat K = kernel_basis(v, g);
  Mat C = complement_basis(v, g);
  for (;;) {
    Mat V = C * rand_invertible(r, v.k) + K * rand_mat(r, v.l, v.k);
    if (invertible(v.T[g] * V)) return V;
    if (rejected) ++*rejected;
  }
}

}

Subspace rand_fat_H(Rng& r, const VBGroupoid& v, Arrow g) { return image(rand_transverse_block(r, v, g)); }

BasePair rand_basepair(Rng& r, const VBGroupoid& v, Object x) {
  return {x, rand_invertible(r, v.l), rand_invertible(r, v.k)};
}

SFrame rand_sframe(Rng& r, const VBGroupoid& v, Arrow g, std::size_t* rejected) {
  Mat W = kernel_basis(v, g) * rand_invertible(r, v.l);
  return {g, hcat(W, rand_transverse_block(r, v, g, rejected))};
}

SFrame rand_sframe_with_bs(Rng& r, const VBGroupoid& v, Arrow g, const BasePair& p) {
  return frame_F_inv(v, FatElement{g, rand_fat_H(r, v, g)}, p);
}

std::vector<SFrame> rand_frame_chain(Rng& r, const VBGroupoid& v, const std::vector<Arrow>& arrows) {
  std::vector<SFrame> out(arrows.size());
  if (arrows.empty()) return out;
  out.back() = rand_sframe(r, v, arrows.back());
  for (std::size_t i = arrows.size() - 1; i-- > 0;) {
    if (!v.base.composable(arrows[i], arrows[i + 1]))
      throw Error(ErrorKind::NotComposable, "rand_frame_chain: arrows do not compose");
    out[i] = rand_sframe_with_bs(r, v, arrows[i], frame_bt(v, out[i + 1]));
  }
  return out;
}

std::vector<Arrow> rand_arrow_chain(Rng& r, const FiniteGroupoid& G, std::size_t len) {
  std::vector<Arrow> out;
  if (len == 0) return out;
  out.push_back(static_cast<Arrow>(r.below(G.n_arrows())));
  while (out.size() < len) {
    std::vector<Arrow> cand;
    for (Arrow a = 0; a < G.n_arrows(); ++a)
      if (G.composable(out.back(), a)) cand.push_back(a);
    out.push_back(cand[r.below(cand.size())]);
  }
  return out;
}

SampledPB sample_frames(const VBGroupoid& v, std::uint64_t seed, std::size_t per_arrow, std::size_t per_object) {
  SampledPB sp;
  sp.seed = seed;
  Rng root(seed);
  sp.frames.resize(v.base.n_arrows());
  sp.basepairs.resize(v.base.n_objects());
  if (per_arrow == 0) return sp;
  for (Arrow g = 0; g < v.base.n_arrows(); ++g) {
    Rng r = root.fork(static_cast<std::uint64_t>(g));
    for (std::size_t i = 0; i < per_arrow; ++i) sp.frames[g].push_back(rand_sframe(r, v, g, &sp.rejections));
  }
  for (Object x = 0; x < v.base.n_objects(); ++x) {
    Rng r = root.fork(0x10000ULL + static_cast<std::uint64_t>(x));
    for (std::size_t i = 0; i < per_object; ++i) sp.basepairs[x].push_back(rand_basepair(r, v, x));
  }
  return sp;
}

}
