#pragma once

// Two-parameter orthonormal polynomial families phi_n(X, l), phi_n^#(X, l).

#include <span>
#include <vector>

#include "szego/gamma_field.hpp"
#include "szego/kernel.hpp"

namespace szego {

/// Coefficients a^l_{n,k} of phi_n(X,l) and b^l_{n,k} of phi_n^#(X,l). Degree
/// n is available on levels 0..max_level + max_degree - n, which is exactly
/// what the cross-level recurrence produces.
class PolyTable {
 public:
  PolyTable() = default;
  PolyTable(Index max_degree, Index max_level, bool with_reversed);

  Index max_degree() const { return max_degree_; }
  Index max_level() const { return max_level_; }
  /// Highest level stored for degree n.
  Index levels_for(Index n) const { return max_level_ + max_degree_ - n; }
  bool covers(Index n, Index l) const { return n <= max_degree_ && l <= levels_for(n); }
  bool has_reversed() const { return with_reversed_; }

  std::span<const Complex> phi(Index n, Index l) const { return a_.at(slot(n, l)); }
  std::span<const Complex> phi_sharp(Index n, Index l) const;
  std::span<Complex> phi(Index n, Index l) { return a_.at(slot(n, l)); }
  std::span<Complex> phi_sharp(Index n, Index l);

  Complex a(Index n, Index l, Index k) const { return phi(n, l)[k]; }
  Complex b(Index n, Index l, Index k) const { return phi_sharp(n, l)[k]; }
  /// k^l_n, the (positive) leading coefficient of phi_n(X,l).
  double leading(Index n, Index l) const { return phi(n, l)[n].real(); }

 private:
  Index slot(Index n, Index l) const;

  Index max_degree_ = 0;
  Index max_level_ = 0;
  bool with_reversed_ = false;
  std::vector<Index> offset_;
  std::vector<std::vector<Complex>> a_;
  std::vector<std::vector<Complex>> b_;
};

/// The recurrences
///   phi_0 = phi_0^# = s_ll^{-1/2},
///   phi_n(X,l)   = (X phi_{n-1}(X,l+1) - g_{l,n+l} phi^#_{n-1}(X,l)) / d_{l,n+l},
///   phi^#_n(X,l) = (-conj(g_{l,n+l}) X phi_{n-1}(X,l+1) + phi^#_{n-1}(X,l)) / d_{l,n+l}.
/// Needs g.size() > max_level + max_degree. Levels of one degree are filled
/// in parallel.
PolyTable build_polys(const GammaField& g, Index max_degree, Index max_level);

namespace serial {
PolyTable build_polys(const GammaField& g, Index max_degree, Index max_level);
}

/// Gram-Schmidt table of a kernel: level l holds the orthonormal family of the
/// shifted kernel K^l, degrees 0..size-1-l (max_degree = size-1, max_level = 0).
/// No reversed polynomials. Levels run in parallel.
PolyTable gram_schmidt_polys(const MomentKernel& k);

/// phi_n(., l) of the kernel via Gram-Schmidt on the shifted section of side
/// n+1 (numerically the same object as the bordered-determinant formula).
std::vector<Complex> poly_by_determinant(const MomentKernel& k, Index n, Index l);

/// Literal bordered-determinant form, exact: phi_n(., l) = (sum_k c_k x^k) /
/// sqrt(norm_sq) with c_k the last-row cofactors and norm_sq = D_{l,l+n-1} D_{l,l+n}.
struct BorderedPoly {
  std::vector<Rational> cofactors;
  Rational norm_sq;

  /// Squared value of coefficient k with its sign: sign(c_k) c_k^2 / norm_sq.
  Rational signed_square(Index k) const;
  std::vector<double> to_float() const;
};
BorderedPoly poly_by_determinant(const RationalKernel& k, Index n, Index l);

/// P^{(order)}, coefficient vectors in increasing powers.
template <class T>
std::vector<T> derivative(std::span<const T> p, Index order) {
  if (order >= p.size()) return {};
  std::vector<T> d(p.begin(), p.end());
  for (Index step = 0; step < order; ++step) {
    for (Index k = 1; k < d.size(); ++k) d[k - 1] = d[k] * T(static_cast<long>(k));
    d.pop_back();
  }
  return d;
}

template <class T>
std::vector<T> derivative(const std::vector<T>& p, Index order) {
  return derivative(std::span<const T>(p), order);
}

/// Horner evaluation.
Complex evaluate(std::span<const Complex> p, Complex x);

/// phi^#_n(0,l) = s_ll^{-1/2} prod_{p=1..n} 1/d_{l,p+l}.
double phi_sharp_at_zero(const GammaField& g, Index n, Index l);

/// gamma_{l,n+l} = -s_ll^{1/2} s_{l+1,l+1}^{-1/2} phi_n(0,l)
///                 (k^{l+1}_1 ... k^{l+1}_{n-1}) / (k^l_1 ... k^l_n).
/// Returns the field on indices 0..max_degree (the square part of the table).
GammaField recover_gamma(const PolyTable& t, std::span<const double> diag);

/// Coefficient matrix of level l: row n = coefficients of phi_n(.,l),
/// n = 0..count-1.
linalg::Matrix<Complex> coefficient_matrix(const PolyTable& t, Index level, Index count);

/// max |conj(A) S A^T - I| for the level-l family against the shifted kernel,
/// the orthonormality defect in the kernel's inner product <F_b, F_a> = s_{a,b}.
double orthonormality_defect(const PolyTable& t, const MomentKernel& k, Index level, Index count);

}  // namespace szego
