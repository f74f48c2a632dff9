#pragma once

// Seeded generators for property sweeps, demos and benchmarks. Doubles are
// built from the top 53 bits of mt19937_64 so streams are identical across
// standard libraries.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "szego/gamma_field.hpp"
#include "szego/kernel.hpp"

namespace szego {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform in the closed disk of the given radius.
  Complex disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double t = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, t);
  }

 private:
  std::mt19937_64 engine_;
};

/// |gamma| <= radius, diag in [0.5, 2). Real parameters when `complex` is off.
inline GammaField random_field(std::uint64_t seed, Index size, double radius = 0.9,
                               bool complex = true) {
  Rng rng(seed);
  std::vector<double> diag(size);
  for (auto& d : diag) d = rng.uniform(0.5, 2.0);
  return GammaField(diag, [&](Index, Index) {
    return complex ? rng.disk(radius) : Complex(rng.uniform(-radius, radius));
  });
}

/// A^H A + shift I with A uniform complex entries in [-1, 1)^2.
inline MomentKernel random_kernel(std::uint64_t seed, Index size, double shift = 0.1) {
  Rng rng(seed);
  linalg::Matrix<Complex> a(size, size);
  for (Index i = 0; i < size; ++i)
    for (Index j = 0; j < size; ++j) a(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  const auto g = linalg::multiply(linalg::adjoint(a), a);
  return MomentKernel(size, [&](Index k, Index j) {
    Complex v = g(k, j);
    if (k == j) v = Complex(v.real() + shift, 0.0);
    return v;
  });
}

}  // namespace szego
