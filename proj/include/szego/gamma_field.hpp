#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "szego/error.hpp"
#include "szego/types.hpp"

namespace szego {

/// Diagonal weights s_{k,k} > 0 and parameters gamma_{k,j} (k < j) in the
/// open unit disk, truncated to indices below `size`.
class GammaField {
 public:
  GammaField() = default;
  GammaField(std::vector<double> diag, const std::function<Complex(Index, Index)>& gamma);

  Index size() const { return diag_.size(); }
  double diag(Index k) const { return diag_.at(k); }
  const std::vector<double>& diag() const { return diag_; }
  Complex gamma(Index k, Index j) const { return gamma_[slot(k, j)]; }
  /// sqrt(1 - |gamma|^2), evaluated as sqrt((1-|g|)(1+|g|)).
  double dee(Index k, Index j) const { return dee_[slot(k, j)]; }

  /// Restriction to indices below `size`.
  GammaField leading(Index size) const;

 private:
  Index slot(Index k, Index j) const {
    if (!(k < j) || j >= size())
      throw ValidationError("gamma index (" + std::to_string(k) + "," + std::to_string(j) +
                            ") outside field of size " + std::to_string(size()));
    return k * size() - k * (k + 1) / 2 + (j - k - 1);
  }

  std::vector<double> diag_;
  std::vector<Complex> gamma_;
  std::vector<double> dee_;
};

/// Real parameters with rational gamma *and* rational d, gamma^2 + d^2 = 1
/// (Pythagorean pairs such as 3/5, 4/5), and rational square roots of the
/// diagonal. This is what makes the rotation-product reconstruction exact.
class ExactRotationField {
 public:
  struct Pair {
    Rational gamma;
    Rational dee;
  };

  ExactRotationField() = default;
  ExactRotationField(std::vector<Rational> diag_sqrt, const std::function<Pair(Index, Index)>& param);

  Index size() const { return diag_sqrt_.size(); }
  const Rational& diag_sqrt(Index k) const { return diag_sqrt_.at(k); }
  const Pair& param(Index k, Index j) const;

  GammaField to_float() const;

 private:
  std::vector<Rational> diag_sqrt_;
  std::vector<Pair> params_;
};

/// Result of exact extraction from a real rational kernel: gamma is stored as
/// sign * sqrt(gamma_sq), so every value stays rational.
class SquaredGammaField {
 public:
  struct Entry {
    int sign = 0;
    Rational gamma_sq;
  };

  SquaredGammaField() = default;
  SquaredGammaField(std::vector<Rational> diag, std::vector<Entry> packed);

  Index size() const { return diag_.size(); }
  const Rational& diag(Index k) const { return diag_.at(k); }
  const Entry& entry(Index k, Index j) const;
  Rational dee_sq(Index k, Index j) const { return Rational(1) - entry(k, j).gamma_sq; }

  GammaField to_float() const;

 private:
  std::vector<Rational> diag_;
  std::vector<Entry> packed_;
};

}  // namespace szego
