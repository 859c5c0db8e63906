// Exact scalars and dense linear algebra over Q and Q(i).
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crcore {

using Rational = mpq_class;

/// Gaussian rational re + im*i.
struct Gq {
  Rational re, im;

  Gq() = default;
  Gq(int r) : re(r), im(0) {}
  Gq(long r) : re(r), im(0) {}
  Gq(const Rational& r) : re(r), im(0) {}
  Gq(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gq I() { return Gq(0, 1); }

  bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool isReal() const { return sgn(im) == 0; }
  Gq conj() const { return Gq(re, -im); }
  Rational norm2() const { return re * re + im * im; }
  Gq inverse() const;

  Gq& operator+=(const Gq& o) { re += o.re; im += o.im; return *this; }
  Gq& operator-=(const Gq& o) { re -= o.re; im -= o.im; return *this; }
  Gq& operator*=(const Gq& o);
  Gq& operator/=(const Gq& o) { return *this *= o.inverse(); }

  friend Gq operator+(Gq a, const Gq& b) { return a += b; }
  friend Gq operator-(Gq a, const Gq& b) { return a -= b; }
  friend Gq operator*(Gq a, const Gq& b) { return a *= b; }
  friend Gq operator/(Gq a, const Gq& b) { return a /= b; }
  friend Gq operator-(const Gq& a) { return Gq(-a.re, -a.im); }
  friend bool operator==(const Gq& a, const Gq& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gq& a, const Gq& b) { return !(a == b); }
};

/// Canonical a/b.
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

/// "a/b" with no spaces; integers without denominator.
std::string toString(const Rational& q);
/// "a/b", "c/d*i", "a/b+c/d*i"; pure imaginary unit prints as "i".
std::string toString(const Gq& x);
/// Inverse of toString(Gq); also accepts "-i", "3*i", "1/2-i". Throws std::invalid_argument.
Gq parseGq(const std::string& s);
Rational parseRational(const std::string& s);

}  // namespace crcore

namespace Eigen {
template <>
struct NumTraits<crcore::Gq> : GenericNumTraits<crcore::Gq> {
  using Real = crcore::Gq;
  using NonInteger = crcore::Gq;
  using Literal = crcore::Gq;
  using Nested = crcore::Gq;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 32
  };
  static inline Real epsilon() { return crcore::Gq(0); }
  static inline Real dummy_precision() { return crcore::Gq(0); }
  static inline int digits10() { return 0; }
};
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 16
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace crcore {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatQ = Mat<Rational>;
using MatG = Mat<Gq>;
using VecG = Vec<Gq>;

inline bool isZero(const Rational& x) { return sgn(x) == 0; }
inline bool isZero(const Gq& x) { return x.isZero(); }
inline Rational inverseOf(const Rational& x) { return 1 / x; }
inline Gq inverseOf(const Gq& x) { return x.inverse(); }

template <typename S>
Mat<S> zeros(Eigen::Index r, Eigen::Index c) {
  Mat<S> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = S(0);
  return m;
}

template <typename S>
Mat<S> identity(Eigen::Index n) {
  Mat<S> m = zeros<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

/// In-place reduced row echelon form; returns pivot columns. Zero rows are removed.
template <typename S>
std::vector<Eigen::Index> rrefInPlace(Mat<S>& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> piv;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && isZero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    S inv = inverseOf(m(r, c));
    for (Eigen::Index j = c; j < cols; ++j)
      if (!isZero(m(r, j))) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || isZero(m(i, c))) continue;
      S f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!isZero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  m.conservativeResize(r, cols);
  return piv;
}

template <typename S>
Eigen::Index rank(Mat<S> m) {
  return static_cast<Eigen::Index>(rrefInPlace(m).size());
}

/// Basis of {x : A x = 0}, one column per vector.
template <typename S>
Mat<S> kernel(Mat<S> a) {
  const Eigen::Index cols = a.cols();
  auto piv = rrefInPlace(a);
  std::vector<bool> isPiv(cols, false);
  for (auto c : piv) isPiv[c] = true;
  Mat<S> k = zeros<S>(cols, cols - static_cast<Eigen::Index>(piv.size()));
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (isPiv[f]) continue;
    k(f, col) = S(1);
    for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], col) = -a(r, f);
    ++col;
  }
  return k;
}

template <typename S>
struct SolutionSet {
  bool consistent = false;
  Vec<S> particular;
  Mat<S> kernel;  // columns
};

template <typename S>
SolutionSet<S> solveLinear(const Mat<S>& a, const Vec<S>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solveLinear: dimension mismatch");
  const Eigen::Index cols = a.cols();
  Mat<S> aug(a.rows(), cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  auto piv = rrefInPlace(aug);
  SolutionSet<S> out;
  if (!piv.empty() && piv.back() == cols) return out;
  out.consistent = true;
  out.particular = Vec<S>(cols);
  for (Eigen::Index i = 0; i < cols; ++i) out.particular(i) = S(0);
  for (std::size_t r = 0; r < piv.size(); ++r) out.particular(piv[r]) = aug(r, cols);
  out.kernel = kernel<S>(a);
  return out;
}

template <typename S>
S determinant(Mat<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const Eigen::Index n = m.rows();
  S det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && isZero(m(p, c))) ++p;
    if (p == n) return S(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    S inv = inverseOf(m(c, c));
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (isZero(m(i, c))) continue;
      S f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Subspace of S^dim stored as RREF rows (canonical).
template <typename S>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Eigen::Index ambient) : ambient_(ambient), rows_(0, ambient) {}

  /// Span of the rows of gens.
  static Subspace fromRows(const Mat<S>& gens) {
    Subspace s(gens.cols());
    s.rows_ = gens;
    s.pivots_ = rrefInPlace(s.rows_);
    return s;
  }
  static Subspace fromVectors(Eigen::Index ambient, const std::vector<Vec<S>>& vs) {
    Mat<S> m(static_cast<Eigen::Index>(vs.size()), ambient);
    for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
    return fromRows(m);
  }
  static Subspace full(Eigen::Index ambient) { return fromRows(identity<S>(ambient)); }

  Eigen::Index ambient() const { return ambient_; }
  Eigen::Index dim() const { return rows_.rows(); }
  const Mat<S>& basis() const { return rows_; }
  const std::vector<Eigen::Index>& pivots() const { return pivots_; }

  /// v minus its component along the pivot columns; zero iff v lies in the subspace.
  Vec<S> reduce(const Vec<S>& v) const {
    check(v.size());
    Vec<S> r = v;
    for (Eigen::Index i = 0; i < dim(); ++i) {
      const auto c = pivots_[static_cast<std::size_t>(i)];
      if (isZero(r(c))) continue;
      S f = r(c);
      for (Eigen::Index j = c; j < ambient_; ++j)
        if (!isZero(rows_(i, j))) r(j) -= f * rows_(i, j);
    }
    return r;
  }
  bool contains(const Vec<S>& v) const {
    Vec<S> r = reduce(v);
    for (Eigen::Index j = 0; j < ambient_; ++j)
      if (!isZero(r(j))) return false;
    return true;
  }
  Vec<S> vector(Eigen::Index i) const { return rows_.row(i).transpose(); }
  bool contains(const Subspace& o) const {
    check(o.ambient_);
    for (Eigen::Index i = 0; i < o.dim(); ++i)
      if (!contains(Vec<S>(o.rows_.row(i).transpose()))) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    check(o.ambient_);
    Mat<S> m(dim() + o.dim(), ambient_);
    m.topRows(dim()) = rows_;
    m.bottomRows(o.dim()) = o.rows_;
    return fromRows(m);
  }

  Subspace intersect(const Subspace& o) const {
    check(o.ambient_);
    // x = a^T U = b^T V  <=>  [U; -V]^T (a;b) = 0
    Mat<S> m(ambient_, dim() + o.dim());
    m.leftCols(dim()) = rows_.transpose();
    m.rightCols(o.dim()) = -o.rows_.transpose();
    Mat<S> k = kernel<S>(m);
    Mat<S> gens = (rows_.transpose() * k.topRows(dim())).transpose();
    return fromRows(gens);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.rows_ == b.rows_;
  }

  /// Coordinates of v in the RREF basis; nullopt if v is outside.
  std::optional<Vec<S>> coordinates(const Vec<S>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<S> c(dim());
    for (Eigen::Index i = 0; i < dim(); ++i) c(i) = v(pivots_[static_cast<std::size_t>(i)]);
    return c;
  }

 private:
  void check(Eigen::Index a) const {
    if (a != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
  }
  Eigen::Index ambient_ = 0;
  Mat<S> rows_;
  std::vector<Eigen::Index> pivots_;
};

using SubspaceG = Subspace<Gq>;

}  // namespace crcore
