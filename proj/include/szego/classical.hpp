#pragma once

// Classical instances: Toeplitz (unit circle), Hankel (real line) and the
// Hilbert matrix / shifted Legendre family.

#include <vector>

#include "szego/gamma_field.hpp"
#include "szego/kernel.hpp"

namespace szego {

struct ToeplitzSpec {
  double s0 = 1.0;
  /// alpha_n for n = 1, 2, ...; missing entries are zero.
  std::vector<Complex> verblunsky;
};

/// gamma_{k,k+n} = alpha_n, s_kk = s0.
GammaField toeplitz_field(const ToeplitzSpec& spec, Index size);
MomentKernel toeplitz_kernel(const ToeplitzSpec& spec, Index size);

struct HankelSpec {
  /// m_0, m_1, ...; s_{k,j} = m_{k+j}.
  std::vector<double> moments;
};

/// Throws ValidationError if fewer than 2*size-1 moments are given, and
/// NumericalError if a leading section is not positive definite.
MomentKernel hankel_kernel(const HankelSpec& spec, Index size);
RationalKernel hankel_kernel(const std::vector<Rational>& moments, Index size);

MomentKernel hilbert_kernel(Index size);
RationalKernel hilbert_kernel_exact(Index size);

struct HilbertParam {
  double gamma;
  double dee;
};

/// gamma_{k,k+l} = (-1)^{l-1} sqrt((2k+1)(2k+2l+1)) / (2k+l+1),
/// d_{k,k+l} = l / (2k+l+1).
HilbertParam hilbert_gamma(Index k, Index l);

struct HilbertParamExact {
  int sign;
  Rational gamma_sq;
  Rational dee;
};
HilbertParamExact hilbert_gamma_exact(Index k, Index l);

/// Closed-form field, s_kk = 1/(2k+1).
GammaField hilbert_field(Index size);

/// Solves x phi_n = b_n phi_{n+1} + a_n phi_n + b_{n-1} phi_{n-1} upward from
/// phi_{-1} = 0, phi_0 = 1. Needs a.size() >= n_max and b.size() >= n_max.
std::vector<std::vector<double>> three_term_polys(const std::vector<double>& a,
                                                  const std::vector<double>& b, Index n_max);

/// Recurrence coefficients of the shifted Legendre family on [0, 1]:
/// a_n = 1/2, b_{n-1} = n / (2 sqrt(4n^2 - 1)).
void legendre_recurrence(Index n_max, std::vector<double>& a, std::vector<double>& b);

/// p_1..p_{n_max} of the uniform measure on [0,1]: p_{2k-1} = 1/2,
/// p_{2k} = k/(2k+1). Test vector only.
std::vector<Rational> canonical_moment_vector(Index n_max);

}  // namespace szego
