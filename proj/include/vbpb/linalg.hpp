#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "vbpb/errors.hpp"

namespace vbpb {

using Q = mpq_class;

// Dense row-major rational matrix. Zero-sized shapes are legal and common
// (rank (0,k) and (l,0) bundles produce them everywhere).
class Mat {
public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : r_(r), c_(c), e_(r * c) {}
  Mat(std::initializer_list<std::initializer_list<Q>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t r, std::size_t c) { return Mat(r, c); }
  static Mat column(const std::vector<Q>& v);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Q& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const Q& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
  const std::vector<Q>& entries() const { return e_; }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Mat cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, r_, nc); }
  Mat rows_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, c_); }
  Mat col(std::size_t j) const { return cols_range(j, 1); }
  Mat pick_cols(const std::vector<std::size_t>& idx) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  Mat transpose() const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b);
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  friend bool operator<(const Mat& a, const Mat& b);

  std::string str() const;  // [[1,-1/2],[0,3]]

private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Q> e_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Q& s, const Mat& a);

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);
Mat blockdiag(const Mat& a, const Mat& b);
// [[a,b],[c,d]]
Mat blocks(const Mat& a, const Mat& b, const Mat& c, const Mat& d);
// Anti-identity: reverses coordinate order.
Mat exchange(std::size_t n);

std::string q_str(const Q& q);
Q q_parse(const std::string& s);

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_inv(const Mat& a);
bool invertible(const Mat& a);
std::size_t rank(const Mat& a);

// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
Mat rref(const Mat& a, std::vector<std::size_t>* pivots = nullptr);

// Subspace of Q^n held by a canonical basis. Columns are normalised at their
// lowest nonzero coordinate (bottom pivot) and every other column vanishes
// there, so equality of subspaces is equality of basis matrices.
class Subspace {
public:
  Subspace() = default;
  static Subspace span(const Mat& generators);
  static Subspace zero(std::size_t n) { return span(Mat(n, 0)); }
  static Subspace full(std::size_t n) { return span(Mat::identity(n)); }

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Mat& basis() const { return basis_; }
  bool contains(const Mat& vecs) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  Mat basis_;
};

Subspace kernel(const Mat& a);
Subspace image(const Mat& a);
bool is_complement(const Subspace& u, const Subspace& v);
Subspace annihilator(const Subspace& u);
Mat solve_unique(const Mat& a, const Mat& b);

// Indices of a maximal independent set of columns, greedy left to right.
std::vector<std::size_t> independent_columns(const Mat& a);

}
