#pragma once

// Small dense kernels shared by the float and exact backends. Everything here
// is written against ScalarTraits so the same elimination runs on
// std::complex<double> and mpq_class.

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "szego/error.hpp"
#include "szego/types.hpp"

namespace szego::linalg {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(Index n) {
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

  T& operator()(Index i, Index j) { return data_[i * cols_ + j]; }
  const T& operator()(Index i, Index j) const { return data_[i * cols_ + j]; }

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (ScalarTraits<T>::is_zero(a(i, k))) continue;
      for (Index j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <class T>
Matrix<T> adjoint(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(j, i) = ScalarTraits<T>::conj(a(i, j));
  return r;
}

/// Determinant by Gaussian elimination with partial pivoting (largest
/// magnitude for floats, first nonzero for exact scalars).
template <class T>
T determinant(Matrix<T> a) {
  const Index n = a.rows();
  T det(1);
  for (Index c = 0; c < n; ++c) {
    Index piv = c;
    if constexpr (std::is_same_v<T, Rational>) {
      while (piv < n && sgn(a(piv, c)) == 0) ++piv;
      if (piv == n) return T(0);
    } else {
      double best = std::abs(a(c, c));
      for (Index r = c + 1; r < n; ++r)
        if (std::abs(a(r, c)) > best) {
          best = std::abs(a(r, c));
          piv = r;
        }
      if (best == 0.0) return T(0);
    }
    if (piv != c) {
      for (Index j = 0; j < n; ++j) std::swap(a(c, j), a(piv, j));
      det = -det;
    }
    det *= a(c, c);
    for (Index r = c + 1; r < n; ++r) {
      if (ScalarTraits<T>::is_zero(a(r, c))) continue;
      T f = a(r, c) / a(c, c);
      for (Index j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Pivots of the LDL^H factorisation of a Hermitian matrix, without row
/// exchanges. Stops after the first pivot that is not strictly positive, so
/// `pivots.size() < n` (or a nonpositive last pivot) signals indefiniteness.
/// The running products of the pivots are the leading principal minors.
template <class T>
std::vector<RealOf<T>> ldl_pivots(Matrix<T> a) {
  using Real = RealOf<T>;
  const Index n = a.rows();
  std::vector<Real> pivots;
  pivots.reserve(n);
  for (Index c = 0; c < n; ++c) {
    Real p = ScalarTraits<T>::real(a(c, c));
    pivots.push_back(p);
    if (!(p > 0)) break;
    for (Index r = c + 1; r < n; ++r) {
      if (ScalarTraits<T>::is_zero(a(r, c))) continue;
      T f = a(r, c) / a(c, c);
      for (Index j = c + 1; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return pivots;
}

/// Cholesky factor L (lower, positive diagonal) with a = L L^H. Throws
/// NumericalError naming the leading section that failed.
inline Matrix<Complex> cholesky_lower(const Matrix<Complex>& a) {
  const Index n = a.rows();
  Matrix<Complex> l(n, n);
  for (Index j = 0; j < n; ++j) {
    double diag = a(j, j).real();
    for (Index k = 0; k < j; ++k) diag -= std::norm(l(j, k));
    if (!(diag > 0.0) || !std::isfinite(diag))
      throw NumericalError("not strictly positive: leading section of order " +
                               std::to_string(j + 1) + " is not positive definite",
                           0, j);
    const double ljj = std::sqrt(diag);
    l(j, j) = ljj;
    for (Index i = j + 1; i < n; ++i) {
      Complex s = a(i, j);
      for (Index k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return l;
}

/// Inverse of a lower triangular matrix by forward substitution.
template <class T>
Matrix<T> invert_lower(const Matrix<T>& l) {
  const Index n = l.rows();
  Matrix<T> inv(n, n);
  for (Index j = 0; j < n; ++j) {
    if (ScalarTraits<T>::is_zero(l(j, j)))
      throw NumericalError("zero diagonal entry at index " + std::to_string(j), j, j);
    inv(j, j) = T(1) / l(j, j);
    for (Index i = j + 1; i < n; ++i) {
      T s(0);
      for (Index k = j; k < i; ++k) s += l(i, k) * inv(k, j);
      inv(i, j) = -s / l(i, i);
    }
  }
  return inv;
}

}  // namespace szego::linalg
