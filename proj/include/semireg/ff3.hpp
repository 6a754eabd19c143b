#pragma once

// Exact linear algebra over the field with three elements.
//
// F3 is a plain value type that plugs into Eigen as a custom scalar, so the
// usual dense containers (F3Matrix, F3Vec) and expression arithmetic work
// unchanged. Eigen's decompositions assume an ordered real field, so the
// elimination-based routines (determinant, kernel, characteristic polynomial,
// spinning) are provided here as free function templates over any field
// scalar that supplies +, -, *, == and inverse().

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "semireg/errors.hpp"

namespace semireg {

class F3 {
 public:
  constexpr F3() = default;
  constexpr F3(int x) : value_(static_cast<std::uint8_t>(((x % 3) + 3) % 3)) {}

  constexpr int value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr F3 operator+(F3 a, F3 b) { return F3(a.value_ + b.value_); }
  friend constexpr F3 operator-(F3 a, F3 b) { return F3(a.value_ + 3 - b.value_); }
  friend constexpr F3 operator*(F3 a, F3 b) { return F3(a.value_ * b.value_); }
  friend constexpr F3 operator/(F3 a, F3 b);
  constexpr F3 operator-() const { return F3(3 - value_); }

  constexpr F3& operator+=(F3 o) { return *this = *this + o; }
  constexpr F3& operator-=(F3 o) { return *this = *this - o; }
  constexpr F3& operator*=(F3 o) { return *this = *this * o; }

  friend constexpr bool operator==(F3 a, F3 b) = default;

 private:
  std::uint8_t value_ = 0;
};

/// Multiplicative inverse; both nonzero elements are involutions.
constexpr F3 inverse(F3 x) {
  if (x.is_zero()) throw ParameterError("F3: inverse of zero");
  return x;
}

constexpr F3 operator/(F3 a, F3 b) { return a * inverse(b); }

inline std::ostream& operator<<(std::ostream& os, F3 x) { return os << x.value(); }

}  // namespace semireg

namespace Eigen {

template <>
struct NumTraits<semireg::F3> : GenericNumTraits<semireg::F3> {
  using Real = semireg::F3;
  using NonInteger = semireg::F3;
  using Literal = semireg::F3;
  using Nested = semireg::F3;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
  static inline int digits10() { return 1; }
  static inline semireg::F3 epsilon() { return semireg::F3(0); }
  static inline semireg::F3 dummy_precision() { return semireg::F3(0); }
  static inline semireg::F3 highest() { return semireg::F3(2); }
  static inline semireg::F3 lowest() { return semireg::F3(0); }
};

}  // namespace Eigen

namespace semireg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using F3Matrix = DenseMatrix<F3>;
using F3Vec = DenseVector<F3>;

/// Univariate polynomial with coefficients stored low degree first. The zero
/// polynomial has no coefficients; otherwise the last coefficient is nonzero.
template <typename Scalar>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(Scalar c) { return Poly({c}); }
  static Poly monomial(int degree, Scalar c = Scalar(1)) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return Poly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Scalar(0);
  }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Scalar> r(std::max(p.coeffs_.size(), q.coeffs_.size()), Scalar(0));
    for (int i = 0; i < static_cast<int>(r.size()); ++i) r[i] = p.coeff(i) + q.coeff(i);
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    std::vector<Scalar> r(std::max(p.coeffs_.size(), q.coeffs_.size()), Scalar(0));
    for (int i = 0; i < static_cast<int>(r.size()); ++i) r[i] = p.coeff(i) - q.coeff(i);
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Scalar> r(p.coeffs_.size() + q.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }
  std::vector<Scalar> coeffs_;
};

using F3Poly = Poly<F3>;

template <typename Scalar>
Poly<Scalar> poly_mul(const Poly<Scalar>& p, const Poly<Scalar>& q) {
  return p * q;
}

/// Human-readable form in the variable T, highest degree first.
std::string to_string(const F3Poly& p);

/// The antisymmetric 2^m x 2^m matrix defining the commutator form of the
/// extraspecial group. Entry (i,j), 1-based: (-1)^(i-j) below the diagonal,
/// -(-1)^(j-i) above, zero on it.
F3Matrix build_J(int m);

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
  if (a.rows() != a.cols()) throw ParameterError(std::string(what) + ": matrix is not square");
}

/// Reduced row echelon form in place; returns pivot columns.
template <typename Scalar>
std::vector<Eigen::Index> row_reduce(DenseMatrix<Scalar>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == Scalar(0)) ++p;
    if (p == a.rows()) continue;
    a.row(p).swap(a.row(row));
    const Scalar s = inverse(a(row, col));
    for (Eigen::Index c = 0; c < a.cols(); ++c) a(row, c) *= s;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == Scalar(0)) continue;
      const Scalar f = a(r, col);
      for (Eigen::Index c = 0; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  require_square(m, "det");
  DenseMatrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  Scalar result(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = col;
    while (p < n && a(p, col) == Scalar(0)) ++p;
    if (p == n) return Scalar(0);
    if (p != col) {
      a.row(p).swap(a.row(col));
      result = -result;
    }
    result *= a(col, col);
    const Scalar s = inverse(a(col, col));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == Scalar(0)) continue;
      const Scalar f = a(r, col) * s;
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return result;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<typename Derived::Scalar> a = m;
  return static_cast<Eigen::Index>(row_reduce(a).size());
}

/// Basis of the right null space {x : M x = 0}.
template <typename Derived>
std::vector<DenseVector<typename Derived::Scalar>> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  require_square(m, "kernel");
  DenseMatrix<Scalar> a = m;
  const auto pivots = row_reduce(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<DenseVector<Scalar>> basis;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    DenseVector<Scalar> v = DenseVector<Scalar>::Constant(n, Scalar(0));
    v(free) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -a(static_cast<Eigen::Index>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Monic characteristic polynomial det(T I - M), via reduction to upper
/// Hessenberg form by similarity transforms.
template <typename Derived>
Poly<typename Derived::Scalar> char_poly(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using P = Poly<Scalar>;
  require_square(m, "char_poly");
  DenseMatrix<Scalar> h = m;
  const Eigen::Index n = h.rows();

  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    Eigen::Index p = k + 1;
    while (p < n && h(p, k) == Scalar(0)) ++p;
    if (p == n) continue;
    if (p != k + 1) {
      h.row(p).swap(h.row(k + 1));
      h.col(p).swap(h.col(k + 1));
    }
    const Scalar s = inverse(h(k + 1, k));
    for (Eigen::Index r = k + 2; r < n; ++r) {
      if (h(r, k) == Scalar(0)) continue;
      const Scalar f = h(r, k) * s;
      for (Eigen::Index c = 0; c < n; ++c) h(r, c) -= f * h(k + 1, c);
      for (Eigen::Index c = 0; c < n; ++c) h(c, k + 1) += f * h(c, r);
    }
  }

  // p[k] is the characteristic polynomial of the leading k x k block.
  std::vector<P> p;
  p.reserve(static_cast<std::size_t>(n) + 1);
  p.push_back(P::constant(Scalar(1)));
  const P t = P::monomial(1);
  for (Eigen::Index k = 1; k <= n; ++k) {
    P next = (t - P::constant(h(k - 1, k - 1))) * p[static_cast<std::size_t>(k - 1)];
    Scalar sub(1);
    for (Eigen::Index i = k - 1; i >= 1; --i) {
      sub *= h(i, i - 1);
      if (sub == Scalar(0)) break;
      next = next - P::constant(h(i - 1, k - 1) * sub) * p[static_cast<std::size_t>(i - 1)];
    }
    p.push_back(std::move(next));
  }
  return p.back();
}

/// Incrementally maintained subspace basis in reduced echelon form.
template <typename Scalar>
class EchelonBasis {
 public:
  explicit EchelonBasis(Eigen::Index dim) : dim_(dim) {}

  Eigen::Index ambient_dimension() const { return dim_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(rows_.size()); }
  const std::vector<DenseVector<Scalar>>& vectors() const { return rows_; }

  DenseVector<Scalar> reduce(DenseVector<Scalar> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar f = v(pivots_[i]);
      if (f != Scalar(0)) v -= rows_[i] * f;
    }
    return v;
  }

  bool contains(const DenseVector<Scalar>& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span; returns false if it was already there.
  bool insert(const DenseVector<Scalar>& v) {
    DenseVector<Scalar> r = reduce(v);
    Eigen::Index piv = 0;
    while (piv < dim_ && r(piv) == Scalar(0)) ++piv;
    if (piv == dim_) return false;
    r *= inverse(r(piv));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar f = rows_[i](piv);
      if (f != Scalar(0)) rows_[i] -= r * f;
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
  }

  static bool is_zero(const DenseVector<Scalar>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != Scalar(0)) return false;
    return true;
  }

 private:
  Eigen::Index dim_;
  std::vector<DenseVector<Scalar>> rows_;
  std::vector<Eigen::Index> pivots_;
};

/// Basis of the smallest subspace containing `seed` and invariant under every
/// matrix in `gens` (acting on column vectors).
template <typename Scalar>
std::vector<DenseVector<Scalar>> spin(const DenseVector<Scalar>& seed,
                                      const std::vector<DenseMatrix<Scalar>>& gens) {
  if (EchelonBasis<Scalar>::is_zero(seed)) throw ParameterError("spin: zero seed");
  for (const auto& g : gens)
    if (g.rows() != seed.size() || g.cols() != seed.size())
      throw ParameterError("spin: generator dimension mismatch");

  EchelonBasis<Scalar> basis(seed.size());
  std::vector<DenseVector<Scalar>> queue{seed};
  while (!queue.empty()) {
    DenseVector<Scalar> v = std::move(queue.back());
    queue.pop_back();
    if (!basis.insert(v)) continue;
    if (basis.dimension() == seed.size()) break;
    for (const auto& g : gens) queue.push_back(g * v);
  }
  return basis.vectors();
}

template <typename Scalar>
Eigen::Index span_dimension(const std::vector<DenseVector<Scalar>>& vs, Eigen::Index dim) {
  EchelonBasis<Scalar> b(dim);
  for (const auto& v : vs) b.insert(v);
  return b.dimension();
}

template <typename Scalar>
bool same_span(const std::vector<DenseVector<Scalar>>& a, const std::vector<DenseVector<Scalar>>& b,
               Eigen::Index dim) {
  EchelonBasis<Scalar> ea(dim), eb(dim);
  for (const auto& v : a) ea.insert(v);
  for (const auto& v : b) eb.insert(v);
  if (ea.dimension() != eb.dimension()) return false;
  for (const auto& v : b)
    if (!ea.contains(v)) return false;
  return true;
}

/// True iff no proper nonzero subspace is invariant under all of `gens`.
/// Spins one representative of every 1-dimensional subspace, so the
/// dimension is capped at 10.
bool is_irreducible(const std::vector<F3Matrix>& gens);

/// Integer power of a square matrix by repeated squaring.
template <typename Scalar>
DenseMatrix<Scalar> matrix_power(const DenseMatrix<Scalar>& a, unsigned long long k) {
  DenseMatrix<Scalar> result = DenseMatrix<Scalar>::Identity(a.rows(), a.cols());
  DenseMatrix<Scalar> base = a;
  while (k > 0) {
    if (k & 1ULL) result = result * base;
    base = base * base;
    k >>= 1ULL;
  }
  return result;
}

}  // namespace semireg
