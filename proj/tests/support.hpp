#pragma once

#include <cmath>
#include <string>

#include "szego/gamma_field.hpp"
#include "szego/kernel.hpp"

namespace szego::testing {

/// gamma_{k,j} = 0.5 * 3^{k-j}, unit diagonal.
inline GammaField decaying_field(Index size) {
  return GammaField(std::vector<double>(size, 1.0),
                    [](Index k, Index j) { return Complex(0.5 * std::pow(3.0, -double(j - k))); });
}

inline double max_gamma_diff(const GammaField& a, const GammaField& b) {
  double worst = 0.0;
  for (Index k = 0; k < a.size(); ++k)
    for (Index j = k + 1; j < a.size(); ++j)
      worst = std::max(worst, std::abs(a.gamma(k, j) - b.gamma(k, j)));
  return worst;
}

inline double max_kernel_diff(const MomentKernel& a, const MomentKernel& b) {
  double worst = 0.0;
  for (Index k = 0; k < a.size(); ++k)
    for (Index j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a(k, j) - b(k, j)));
  return worst;
}

/// S = conj(A)^{-1} A^{-T} from an orthonormal coefficient matrix A, the
/// inverse-Gram route back to the kernel.
inline MomentKernel kernel_from_coefficients(const linalg::Matrix<Complex>& a) {
  const Index n = a.rows();
  linalg::Matrix<Complex> c(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) c(i, j) = std::conj(a(i, j));
  const auto ci = linalg::invert_lower(c);
  // A^{-T} = conj(conj(A)^{-1})^T
  return MomentKernel(n, [&](Index k, Index j) {
    Complex v{};
    for (Index l = 0; l < n; ++l) v += ci(k, l) * std::conj(ci(j, l));
    return v;
  });
}

inline std::string golden_path(const std::string& name) {
  return std::string(SZEGO_GOLDEN_DIR) + "/" + name;
}

}  // namespace szego::testing
