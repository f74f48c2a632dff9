#include "szego/gamma_field.hpp"

namespace szego {

GammaField::GammaField(std::vector<double> diag, const std::function<Complex(Index, Index)>& gamma)
    : diag_(std::move(diag)) {
  const Index m = diag_.size();
  for (Index k = 0; k < m; ++k)
    if (!(diag_[k] > 0.0) || !std::isfinite(diag_[k]))
      throw ValidationError("diagonal weight s_" + std::to_string(k) + std::to_string(k) +
                            " must be positive");
  gamma_.resize(m * (m - (m > 0)) / 2);
  dee_.resize(gamma_.size());
  for (Index k = 0; k < m; ++k)
    for (Index j = k + 1; j < m; ++j) {
      const Complex g = gamma(k, j);
      const double a = std::abs(g);
      if (!(a < 1.0))
        throw ValidationError("|gamma(" + std::to_string(k) + "," + std::to_string(j) +
                              ")| = " + std::to_string(a) + " is not below 1");
      gamma_[slot(k, j)] = g;
      dee_[slot(k, j)] = std::sqrt((1.0 - a) * (1.0 + a));
    }
}

GammaField GammaField::leading(Index size) const {
  if (size > this->size()) throw ValidationError("leading section larger than field");
  return GammaField(std::vector<double>(diag_.begin(), diag_.begin() + size),
                    [&](Index k, Index j) { return gamma(k, j); });
}

ExactRotationField::ExactRotationField(std::vector<Rational> diag_sqrt,
                                       const std::function<Pair(Index, Index)>& param)
    : diag_sqrt_(std::move(diag_sqrt)) {
  const Index m = diag_sqrt_.size();
  for (Index k = 0; k < m; ++k)
    if (sgn(diag_sqrt_[k]) <= 0) throw ValidationError("diagonal square roots must be positive");
  for (Index k = 0; k < m; ++k)
    for (Index j = k + 1; j < m; ++j) {
      Pair p = param(k, j);
      if (sgn(p.dee) <= 0 || p.gamma * p.gamma + p.dee * p.dee != 1)
        throw ValidationError("exact parameter (" + std::to_string(k) + "," + std::to_string(j) +
                              ") needs d > 0 and gamma^2 + d^2 = 1");
      params_.push_back(std::move(p));
    }
}

const ExactRotationField::Pair& ExactRotationField::param(Index k, Index j) const {
  if (!(k < j) || j >= size()) throw ValidationError("exact parameter index out of range");
  return params_[k * size() - k * (k + 1) / 2 + (j - k - 1)];
}

GammaField ExactRotationField::to_float() const {
  std::vector<double> diag;
  for (const auto& r : diag_sqrt_) diag.push_back(Rational(r * r).get_d());
  return GammaField(diag, [&](Index k, Index j) { return Complex(param(k, j).gamma.get_d()); });
}

SquaredGammaField::SquaredGammaField(std::vector<Rational> diag, std::vector<Entry> packed)
    : diag_(std::move(diag)), packed_(std::move(packed)) {
  const Index m = diag_.size();
  if (packed_.size() != m * (m - (m > 0)) / 2)
    throw ValidationError("squared gamma field has the wrong number of entries");
}

const SquaredGammaField::Entry& SquaredGammaField::entry(Index k, Index j) const {
  if (!(k < j) || j >= size()) throw ValidationError("squared gamma index out of range");
  return packed_[k * size() - k * (k + 1) / 2 + (j - k - 1)];
}

GammaField SquaredGammaField::to_float() const {
  std::vector<double> diag;
  for (const auto& d : diag_) diag.push_back(d.get_d());
  return GammaField(diag, [&](Index k, Index j) {
    const Entry& e = entry(k, j);
    return Complex(e.sign * std::sqrt(e.gamma_sq.get_d()));
  });
}

}  // namespace szego
