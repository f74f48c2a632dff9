#include "szego/classical.hpp"

#include <cmath>
#include <sstream>

#include "szego/schur.hpp"

namespace szego {

GammaField toeplitz_field(const ToeplitzSpec& spec, Index size) {
  if (!(spec.s0 > 0.0)) throw ValidationError("toeplitz s0 must be positive");
  for (Index n = 0; n < spec.verblunsky.size(); ++n)
    if (!(std::abs(spec.verblunsky[n]) < 1.0))
      throw ValidationError("parameter out of disk: alpha_" + std::to_string(n + 1));
  return GammaField(std::vector<double>(size, spec.s0), [&](Index k, Index j) {
    const Index n = j - k;
    return n <= spec.verblunsky.size() ? spec.verblunsky[n - 1] : Complex{};
  });
}

MomentKernel toeplitz_kernel(const ToeplitzSpec& spec, Index size) {
  return reconstruct_moments(toeplitz_field(spec, size), size);
}

namespace {

template <class K>
void require_positive(const K& k) {
  const auto report = validate_kernel(k);
  if (report.valid()) return;
  if (report.first_nonpositive_section)
    throw NumericalError("not strictly positive: " + report.violations.back(), 0,
                         *report.first_nonpositive_section);
  throw NumericalError("not strictly positive: " + report.violations.front());
}

void require_moments(Index have, Index size) {
  if (size == 0) throw ValidationError("hankel size must be positive");
  if (have < 2 * size - 1)
    throw ValidationError("hankel kernel of size " + std::to_string(size) + " needs " +
                          std::to_string(2 * size - 1) + " moments, got " + std::to_string(have));
}

}  // namespace

MomentKernel hankel_kernel(const HankelSpec& spec, Index size) {
  require_moments(spec.moments.size(), size);
  MomentKernel k(size, [&](Index a, Index b) { return Complex(spec.moments[a + b]); });
  require_positive(k);
  return k;
}

RationalKernel hankel_kernel(const std::vector<Rational>& moments, Index size) {
  require_moments(moments.size(), size);
  RationalKernel k(size, [&](Index a, Index b) { return moments[a + b]; });
  require_positive(k);
  return k;
}

MomentKernel hilbert_kernel(Index size) {
  return MomentKernel(size, [](Index k, Index j) { return Complex(1.0 / double(k + j + 1)); });
}

RationalKernel hilbert_kernel_exact(Index size) {
  return RationalKernel(size, [](Index k, Index j) { return Rational(1, k + j + 1); });
}

HilbertParam hilbert_gamma(Index k, Index l) {
  if (l == 0) throw ValidationError("hilbert_gamma needs l >= 1");
  const double den = double(2 * k + l + 1);
  const double mag = std::sqrt(double(2 * k + 1) * double(2 * k + 2 * l + 1)) / den;
  return {l % 2 == 1 ? mag : -mag, double(l) / den};
}

HilbertParamExact hilbert_gamma_exact(Index k, Index l) {
  if (l == 0) throw ValidationError("hilbert_gamma needs l >= 1");
  HilbertParamExact p;
  p.sign = l % 2 == 1 ? 1 : -1;
  const Rational den(2 * k + l + 1);
  p.gamma_sq = Rational((2 * k + 1) * (2 * k + 2 * l + 1)) / (den * den);
  p.dee = Rational(l) / den;
  return p;
}

GammaField hilbert_field(Index size) {
  std::vector<double> diag(size);
  for (Index k = 0; k < size; ++k) diag[k] = 1.0 / double(2 * k + 1);
  return GammaField(diag, [](Index k, Index j) { return Complex(hilbert_gamma(k, j - k).gamma); });
}

std::vector<std::vector<double>> three_term_polys(const std::vector<double>& a,
                                                  const std::vector<double>& b, Index n_max) {
  if (a.size() < n_max || b.size() < n_max)
    throw ValidationError("three-term recurrence needs n_max coefficients a_n and b_n");
  std::vector<std::vector<double>> p{{1.0}};
  for (Index n = 0; n < n_max; ++n) {
    if (b[n] == 0.0) throw NumericalError("zero recurrence coefficient b_" + std::to_string(n));
    std::vector<double> next(n + 2, 0.0);
    for (Index k = 0; k <= n; ++k) {
      next[k + 1] += p[n][k];
      next[k] -= a[n] * p[n][k];
    }
    if (n > 0)
      for (Index k = 0; k < n; ++k) next[k] -= b[n - 1] * p[n - 1][k];
    for (auto& c : next) c /= b[n];
    p.push_back(std::move(next));
  }
  return p;
}

void legendre_recurrence(Index n_max, std::vector<double>& a, std::vector<double>& b) {
  a.assign(n_max, 0.5);
  b.resize(n_max);
  for (Index n = 1; n <= n_max; ++n) {
    const double m = double(n);
    b[n - 1] = m / (2.0 * std::sqrt(4.0 * m * m - 1.0));
  }
}

std::vector<Rational> canonical_moment_vector(Index n_max) {
  std::vector<Rational> p;
  for (Index n = 1; n <= n_max; ++n) {
    if (n % 2 == 1)
      p.emplace_back(1, 2);
    else
      p.emplace_back(n / 2, n + 1);
  }
  return p;
}

}  // namespace szego
