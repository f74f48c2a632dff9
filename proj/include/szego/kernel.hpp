#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "szego/error.hpp"
#include "szego/linalg.hpp"
#include "szego/types.hpp"

namespace szego {

/// How kernel indices are interpreted: plain 0..M-1, or ranks of words over
/// an alphabet of `alphabet` letters in graded-lexicographic order.
struct IndexKind {
  enum class Tag { linear, word } tag = Tag::linear;
  unsigned alphabet = 1;

  static IndexKind linear() { return {}; }
  static IndexKind words(unsigned n) { return {Tag::word, n}; }
  bool operator==(const IndexKind&) const = default;
};

/// Hermitian kernel s_{k,j} truncated to 0 <= k, j < size. Only the upper
/// triangle (k <= j) is stored; the lower triangle is its conjugate.
template <class T>
class BasicKernel {
 public:
  using Scalar = T;

  BasicKernel() = default;

  /// `upper(k, j)` is called for every k <= j.
  BasicKernel(Index size, const std::function<T(Index, Index)>& upper,
              IndexKind kind = IndexKind::linear())
      : size_(size), kind_(kind), upper_(size * (size + 1) / 2) {
    for (Index k = 0; k < size; ++k)
      for (Index j = k; j < size; ++j) upper_[slot(k, j)] = upper(k, j);
  }

  Index size() const { return size_; }
  IndexKind index_kind() const { return kind_; }

  T operator()(Index k, Index j) const {
    if (k >= size_ || j >= size_)
      throw ValidationError("kernel index (" + std::to_string(k) + "," + std::to_string(j) +
                            ") outside truncation " + std::to_string(size_));
    return k <= j ? upper_[slot(k, j)] : ScalarTraits<T>::conj(upper_[slot(j, k)]);
  }

  /// Dense section over indices first..last (inclusive).
  linalg::Matrix<T> section(Index first, Index last) const {
    const Index n = last - first + 1;
    linalg::Matrix<T> m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = (*this)(first + i, first + j);
    return m;
  }

  /// The shifted kernel K^l(a, b) = K(a + l, b + l).
  BasicKernel shifted(Index level) const {
    if (level > size_) throw ValidationError("shift beyond truncation");
    return BasicKernel(
        size_ - level, [&](Index k, Index j) { return upper_[slot(k + level, j + level)]; });
  }

  /// Leading section of the given size.
  BasicKernel leading(Index size) const {
    if (size > size_) throw ValidationError("leading section larger than kernel");
    return BasicKernel(size, [&](Index k, Index j) { return upper_[slot(k, j)]; }, kind_);
  }

 private:
  Index slot(Index k, Index j) const { return k * size_ - k * (k + 1) / 2 + j; }

  Index size_ = 0;
  IndexKind kind_;
  std::vector<T> upper_;
};

using MomentKernel = BasicKernel<Complex>;
using RationalKernel = BasicKernel<Rational>;

/// Exact copy of a real float kernel (each double converts exactly).
RationalKernel to_rational(const MomentKernel& k);
MomentKernel to_float(const RationalKernel& k);

struct ValidationReport {
  std::vector<std::string> violations;
  /// Smallest n with D_{0,n} <= 0, and that determinant.
  std::optional<Index> first_nonpositive_section;
  std::optional<double> first_nonpositive_value;

  bool valid() const { return violations.empty(); }
};

ValidationReport validate_kernel(const MomentKernel& k);
ValidationReport validate_kernel(const RationalKernel& k);

/// D_{r,q}: determinant of the section over r..q.
double determinant(const MomentKernel& k, Index r, Index q);
Rational determinant(const RationalKernel& k, Index r, Index q);

/// All D_{r,q}, r <= q < size.
template <class Real>
class BasicDeterminantTable {
 public:
  BasicDeterminantTable() = default;
  explicit BasicDeterminantTable(Index size) : size_(size), values_(size * (size + 1) / 2) {}

  Index size() const { return size_; }
  const Real& operator()(Index r, Index q) const { return values_.at(slot(r, q)); }
  Real& operator()(Index r, Index q) { return values_.at(slot(r, q)); }

 private:
  Index slot(Index r, Index q) const {
    if (r > q || q >= size_) throw ValidationError("determinant index outside table");
    return r * size_ - r * (r + 1) / 2 + q;
  }

  Index size_ = 0;
  std::vector<Real> values_;
};

using DeterminantTable = BasicDeterminantTable<double>;
using RationalDeterminantTable = BasicDeterminantTable<Rational>;

/// Fast path: one LDL sweep per starting row r, rows in parallel. Entries
/// past the first nonpositive pivot of a row are left as computed (their
/// products still equal the minors as long as no pivot is exactly zero).
DeterminantTable determinant_table(const MomentKernel& k);
RationalDeterminantTable determinant_table(const RationalKernel& k);

namespace serial {
/// Reference: an independent elimination for every (r, q).
DeterminantTable determinant_table(const MomentKernel& k);
}  // namespace serial

std::string determinant_table_csv(const DeterminantTable& t);

}  // namespace szego

#include "szego/gamma_field.hpp"

namespace szego {

enum class SzegoClass { szego, degenerate, inconclusive };

std::string to_string(SzegoClass c);

struct SzegoRowReport {
  Index row = 0;
  /// partial[h] = s_kk * prod_{k < n <= k+h} d^2_{k,n}, h = 0..horizon.
  std::vector<double> partial;
  SzegoClass classification = SzegoClass::inconclusive;
};

struct SzegoClassReport {
  std::vector<SzegoRowReport> rows;
  /// degenerate if any row is, szego if all rows are, else inconclusive.
  SzegoClass overall = SzegoClass::inconclusive;
};

/// Finite-horizon check of the Szego condition prod_{n>k} d_{k,n} > 0. Rows
/// k with k + horizon < size are reported. A row is "degenerate" when its
/// product falls to `tol` or halves when the horizon doubles, "szego" when it
/// stays above `tol` and drops by less than `tol` (relative) over the second
/// half of the horizon.
SzegoClassReport szego_class_report(const GammaField& g, Index horizon = 64, double tol = 1e-6);

}  // namespace szego
