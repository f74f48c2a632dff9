#pragma once

// The algebra of lower triangular arrays, truncated to a finite section.
// Lower triangularity means products and inverses of M-sections are exact on
// the section: no truncation error is introduced for indices below M.

#include <string>
#include <vector>

#include "szego/error.hpp"
#include "szego/gamma_field.hpp"
#include "szego/kernel.hpp"
#include "szego/linalg.hpp"
#include "szego/ortho_poly.hpp"

namespace szego {

template <class T>
class BasicTriangularArray {
 public:
  BasicTriangularArray() = default;
  explicit BasicTriangularArray(Index size) : size_(size), entries_(size * (size + 1) / 2) {}

  static BasicTriangularArray identity(Index size) {
    BasicTriangularArray a(size);
    for (Index i = 0; i < size; ++i) a.at(i, i) = T(1);
    return a;
  }

  Index size() const { return size_; }

  /// Zero above the diagonal.
  T operator()(Index k, Index j) const {
    check(k, j);
    return k < j ? T(0) : entries_[slot(k, j)];
  }
  /// Writable entry, k >= j only.
  T& at(Index k, Index j) {
    check(k, j);
    if (k < j) throw ValidationError("entries above the diagonal are structurally zero");
    return entries_[slot(k, j)];
  }

  /// Leading window of the given size.
  BasicTriangularArray leading(Index size) const {
    if (size > size_) throw ValidationError("window larger than array");
    BasicTriangularArray w(size);
    for (Index k = 0; k < size; ++k)
      for (Index j = 0; j <= k; ++j) w.at(k, j) = (*this)(k, j);
    return w;
  }

 private:
  void check(Index k, Index j) const {
    if (k >= size_ || j >= size_)
      throw ValidationError("array index (" + std::to_string(k) + "," + std::to_string(j) +
                            ") outside truncation " + std::to_string(size_));
  }
  static Index slot(Index k, Index j) { return k * (k + 1) / 2 + j; }

  Index size_ = 0;
  std::vector<T> entries_;
};

using TriangularArray = BasicTriangularArray<Complex>;
using RationalTriangularArray = BasicTriangularArray<Rational>;

/// (ab)_{k,j} = sum_{j <= l <= k} a_{k,l} b_{l,j}.
template <class T>
BasicTriangularArray<T> multiply(const BasicTriangularArray<T>& a, const BasicTriangularArray<T>& b) {
  if (a.size() != b.size())
    throw ValidationError("size mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  BasicTriangularArray<T> c(a.size());
  for (Index k = 0; k < a.size(); ++k)
    for (Index j = 0; j <= k; ++j) {
      T s(0);
      for (Index l = j; l <= k; ++l) s += a(k, l) * b(l, j);
      c.at(k, j) = s;
    }
  return c;
}

/// Column-by-column forward substitution. Throws NumericalError naming the
/// first zero diagonal entry.
template <class T>
BasicTriangularArray<T> invert(const BasicTriangularArray<T>& a) {
  const Index n = a.size();
  for (Index i = 0; i < n; ++i)
    if (ScalarTraits<T>::is_zero(a(i, i)))
      throw NumericalError("zero diagonal entry at index " + std::to_string(i), i, i);
  BasicTriangularArray<T> inv(n);
  for (Index j = 0; j < n; ++j) {
    inv.at(j, j) = T(1) / a(j, j);
    for (Index k = j + 1; k < n; ++k) {
      T s(0);
      for (Index l = j; l < k; ++l) s += a(k, l) * inv(l, j);
      inv.at(k, j) = -s / a(k, k);
    }
  }
  return inv;
}

/// max |a_{k,j} - b_{k,j}| over k, j < window.
double max_deviation(const TriangularArray& a, const TriangularArray& b, Index window);
/// max |a_{k,j}| over k, j < window.
double max_entry(const TriangularArray& a, Index window);

/// (Phi_n)_{k,j} = a^j_{n,k-j} (or b^j_{n,k-j} when reversed), k, j < size.
TriangularArray embed_phi(const PolyTable& t, Index n, bool reversed, Index size);

struct StabilizationReport {
  Index size = 0;
  Index half = 0;
  Index quarter = 0;
  /// max |Theta_size - Theta_half| over the top-left quarter x quarter block.
  double max_deviation = 0.0;
};

struct SpectralFactor {
  TriangularArray theta;
  StabilizationReport stabilization;
};

/// Lower triangular Theta with positive diagonal and K = Theta^H Theta on the
/// leading size x size section, by Cholesky of the index-reversed section.
SpectralFactor spectral_factor(const MomentKernel& k, Index size);

/// Check of K_Theta <= K on a window: smallest eigenvalue of
/// K - Theta_w^H Theta_w over the top-left window (Theta_w = window of Theta).
double dominance_margin(const MomentKernel& k, const TriangularArray& theta, Index window);

struct ConvergenceRow {
  Index n = 0;
  double phi_sup = 0.0;
  double inv_sharp_dev = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  Index window = 0;
  SzegoClass szego_class = SzegoClass::inconclusive;
  /// Both sups fell below `tol` at n_max.
  bool converged = false;
  double tol = 0.0;
};

/// For each n <= n_max: sup of |Phi_n| and of |(Phi_n^#)^{-1} - Theta| over
/// the top-left window, Theta from spectral_factor at size n_max + window.
/// Rows for different n are computed in parallel and stored in order.
ConvergenceReport convergence_report(const GammaField& g, const MomentKernel& k, Index n_max,
                                     Index window, double tol = 1e-6);

namespace serial {
ConvergenceReport convergence_report(const GammaField& g, const MomentKernel& k, Index n_max,
                                     Index window, double tol = 1e-6);
}

std::string triangular_csv(const TriangularArray& a);
std::string convergence_json(const ConvergenceReport& r);

}  // namespace szego
