#pragma once

#include <cstdint>
#include <vector>

#include "vbpb/frames.hpp"
#include "vbpb/gl2.hpp"

namespace vbpb {

// splitmix64; the only randomness source in the library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)
  Rng fork(std::uint64_t stream);        // independent child stream
private:
  std::uint64_t s_;
};

// Entries p/q with |p| <= 4 and 1 <= q <= 3.
Q rand_q(Rng& r);
Mat rand_mat(Rng& r, std::size_t rows, std::size_t cols);
Mat rand_invertible(Rng& r, std::size_t n);

GL1Element rand_gl1_at(Rng& r, const Mat& d);
GL2Element rand_gl2_at(Rng& r, const Mat& d, std::size_t l);
// e with s21(e) = f, drawn by varying J.
GL2Element rand_gl2_with_s21(Rng& r, const GL1Element& f);

// (d, A, B) with B^-1 d A = d, drawn from the solution space of dA = Bd.
GL1Element rand_isotropy(Rng& r, const Mat& d);
// J with I + Jd invertible.
Mat rand_isotropy_J(Rng& r, const Mat& d);
Subspace rand_fat_H(Rng& r, const VBGroupoid& v, Arrow g);
BasePair rand_basepair(Rng& r, const VBGroupoid& v, Object x);
// rejected, when given, counts draws discarded for failing transversality.
SFrame rand_sframe(Rng& r, const VBGroupoid& v, Arrow g, std::size_t* rejected = nullptr);
// Frame at g whose bs equals p (p must sit at s(g)).
SFrame rand_sframe_with_bs(Rng& r, const VBGroupoid& v, Arrow g, const BasePair& p);
// Composable chain f_1,...,f_m over the given composable arrow chain.
std::vector<SFrame> rand_frame_chain(Rng& r, const VBGroupoid& v, const std::vector<Arrow>& arrows);
// A random composable chain of base arrows of the given length.
std::vector<Arrow> rand_arrow_chain(Rng& r, const FiniteGroupoid& G, std::size_t len);

struct SampledPB {
  std::uint64_t seed = 0;
  std::vector<std::vector<SFrame>> frames;        // per arrow
  std::vector<std::vector<BasePair>> basepairs;   // per object
  std::size_t rejections = 0;
};

SampledPB sample_frames(const VBGroupoid& v, std::uint64_t seed, std::size_t per_arrow,
                        std::size_t per_object = 4);

}
