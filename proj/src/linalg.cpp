#include "vbpb/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace vbpb {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonFunctorialRep: return "NonFunctorialRep";
    case ErrorKind::NonUnitBase: return "NonUnitBase";
    case ErrorKind::ValidationFailure: return "ValidationError";
    case ErrorKind::FatMembershipFailure: return "FatMembershipFailure";
    case ErrorKind::MomentMismatch: return "MomentMismatch";
    case ErrorKind::SameArrowRequired: return "SameArrowRequired";
    case ErrorKind::SameObjectRequired: return "SameObjectRequired";
    case ErrorKind::BlockStructureViolation: return "BlockStructureViolation";
    case ErrorKind::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorKind::NotASection: return "NotASection";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

namespace {

void need(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, what);
}

}

Mat::Mat(std::initializer_list<std::initializer_list<Q>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  e_.reserve(r_ * c_);
  for (auto& row : rows) {
    need(row.size() == c_, "ragged initializer");
    for (auto& q : row) e_.push_back(q);
  }
  for (auto& q : e_) q.canonicalize();
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::column(const std::vector<Q>& v) {
  Mat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  need(r0 + nr <= r_ && c0 + nc <= c_, "block out of range");
  Mat m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

Mat Mat::pick_cols(const std::vector<std::size_t>& idx) const {
  Mat m(r_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    need(idx[j] < c_, "column index out of range");
    for (std::size_t i = 0; i < r_; ++i) m(i, j) = (*this)(i, idx[j]);
  }
  return m;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  need(r0 + b.r_ <= r_ && c0 + b.c_ <= c_, "set_block out of range");
  for (std::size_t i = 0; i < b.r_; ++i)
    for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::transpose() const {
  Mat m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Q& q) { return sgn(q) == 0; });
}

bool operator==(const Mat& a, const Mat& b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
}

bool operator<(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_) return a.r_ < b.r_;
  if (a.c_ != b.c_) return a.c_ < b.c_;
  return std::lexicographical_compare(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
}

std::string q_str(const Q& q) { return q.get_str(10); }

Q q_parse(const std::string& s) {
  Q q;
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  if (t.empty() || q.set_str(t, 10) != 0)
    throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < c_; ++j) {
      if (j) os << ',';
      os << q_str((*this)(i, j));
    }
    os << ']';
  }
  os << ']';
  if (r_ == 0 || c_ == 0) os << '{' << r_ << 'x' << c_ << '}';
  return os.str();
}

Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }

Mat mat_mul(const Mat& a, const Mat& b) {
  need(a.cols() == b.rows(), "mat_mul: a.cols != b.rows");
  Mat m(a.rows(), b.cols());
  Q t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t p = 0; p < a.cols(); ++p) {
      const Q& x = a(i, p);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(p, j)) == 0) continue;
        t = x * b(p, j);
        m(i, j) += t;
      }
    }
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  need(a.rows() == b.rows() && a.cols() == b.cols(), "add: shape mismatch");
  Mat m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j);
  return m;
}

Mat operator-(const Mat& a, const Mat& b) {
  need(a.rows() == b.rows() && a.cols() == b.cols(), "sub: shape mismatch");
  Mat m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) - b(i, j);
  return m;
}

Mat operator-(const Mat& a) {
  Mat m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = -a(i, j);
  return m;
}

Mat operator*(const Q& s, const Mat& a) {
  Mat m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = s * a(i, j);
  return m;
}

Mat hcat(const Mat& a, const Mat& b) {
  need(a.rows() == b.rows(), "hcat: row mismatch");
  Mat m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Mat vcat(const Mat& a, const Mat& b) {
  need(a.cols() == b.cols(), "vcat: column mismatch");
  Mat m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Mat blockdiag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Mat blocks(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  return vcat(hcat(a, b), hcat(c, d));
}

Mat exchange(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

Mat rref(const Mat& a, std::vector<std::size_t>* pivots) {
  Mat m = a;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Q lead = m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) /= lead;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Q f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const Mat& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

bool invertible(const Mat& a) { return a.square() && rank(a) == a.rows(); }

Mat mat_inv(const Mat& a) {
  if (!a.square()) throw Error(ErrorKind::DimensionMismatch, "mat_inv: not square");
  std::size_t n = a.rows();
  std::vector<std::size_t> piv;
  Mat r = rref(hcat(a, Mat::identity(n)), &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1))
    throw Error(ErrorKind::SingularMatrix, "mat_inv: rank deficient");
  return r.block(0, n, n, n);
}

Subspace Subspace::span(const Mat& gens) {
  // Column echelon with bottom pivots is row echelon of the transpose with
  // coordinates read in reverse.
  std::size_t n = gens.rows();
  Mat rev = exchange(n);
  std::vector<std::size_t> piv;
  Mat r = rref((rev * gens).transpose(), &piv);
  Subspace s;
  // columns ordered by increasing pivot row
  s.basis_ = rev * r.rows_range(0, piv.size()).transpose() * exchange(piv.size());
  return s;
}

bool Subspace::contains(const Mat& vecs) const {
  return rank(hcat(basis_, vecs)) == dim();
}

Subspace kernel(const Mat& a) {
  std::vector<std::size_t> piv;
  Mat r = rref(a, &piv);
  std::vector<bool> is_piv(a.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  Mat k(a.cols(), a.cols() - piv.size());
  std::size_t col = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    k(f, col) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], col) = -r(i, f);
    ++col;
  }
  return Subspace::span(k);
}

Subspace image(const Mat& a) { return Subspace::span(a); }

bool is_complement(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "is_complement: ambient mismatch");
  return u.dim() + v.dim() == u.ambient_dim() && rank(hcat(u.basis(), v.basis())) == u.ambient_dim();
}

Subspace annihilator(const Subspace& u) {
  if (u.dim() == 0) return Subspace::full(u.ambient_dim());
  return kernel(u.basis().transpose());
}

Mat solve_unique(const Mat& a, const Mat& b) {
  need(a.rows() == b.rows(), "solve_unique: row mismatch");
  std::size_t n = a.cols();
  std::vector<std::size_t> piv;
  Mat r = rref(hcat(a, b), &piv);
  for (auto p : piv)
    if (p >= n) throw Error(ErrorKind::NoSolution, "solve_unique: inconsistent system");
  if (piv.size() < n) throw Error(ErrorKind::NonUniqueSolution, "solve_unique: nontrivial kernel");
  return r.block(0, n, n, b.cols());
}

std::vector<std::size_t> independent_columns(const Mat& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv;
}

}
