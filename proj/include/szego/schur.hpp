#pragma once

// Kernel <-> parameter transforms and the lattice (transmission-line)
// realisation of the moments.

#include <cstdint>
#include <string>
#include <vector>

#include "szego/gamma_field.hpp"
#include "szego/kernel.hpp"
#include "szego/linalg.hpp"

namespace szego {

/// The 2x2 unitary block [[g, d], [d, -conj(g)]].
linalg::Matrix<Complex> rotation_block(Complex gamma);

/// U_{k,j}: product over pairs (r, c), k <= r < c <= j, in lexicographic
/// order, of identity matrices of side j-k+1 carrying the rotation block of
/// gamma_{r,c} on rows/columns (c-r-1, c-r).
linalg::Matrix<Complex> rotation_product(const GammaField& g, Index k, Index j);
linalg::Matrix<Rational> rotation_product(const ExactRotationField& g, Index k, Index j);

/// s_{k,j} = s_{k,k}^{1/2} [U_{k,j}]_{0,0} s_{j,j}^{1/2}. Rows are computed in
/// parallel; only the first row of U is propagated.
MomentKernel reconstruct_moments(const GammaField& g, Index size);
RationalKernel reconstruct_moments(const ExactRotationField& g, Index size);

/// Parameters of a strictly positive kernel, through the level-shifted
/// orthonormal polynomials and the parameter recovery formula.
GammaField extract_gamma(const MomentKernel& k);
/// Exact variant for real rational kernels (gamma returned squared, with sign).
SquaredGammaField extract_gamma(const RationalKernel& k);

namespace serial {
/// Reference: forms every U_{k,j} in full and reads its corner.
MomentKernel reconstruct_moments(const GammaField& g, Index size);
/// Reference: gamma_{l,l+n} = -phi_n(0,l) sqrt(D_{l,l+n} / D_{l+1,l+n}) with
/// each polynomial and determinant computed on its own.
GammaField extract_gamma(const MomentKernel& k);
}  // namespace serial

struct LatticeFactor {
  enum class Kind { gamma, gamma_bar, dee };
  Kind kind;
  Index row;
  Index col;

  bool operator==(const LatticeFactor&) const = default;
};

/// One additive term of s_{k,j} / (s_kk s_jj)^{1/2}: a signed product of
/// g(a,b), gbar(a,b) and d(a,b) symbols. The minus sign of every -conj(g)
/// entry is folded into `sign`.
struct LatticeTerm {
  int sign = 1;
  std::vector<LatticeFactor> factors;

  /// "+ d(0,1) g(0,2) d(1,2)"
  std::string to_string() const;
  static LatticeTerm parse(const std::string& text);
  Complex evaluate(const GammaField& g) const;

  bool operator==(const LatticeTerm&) const = default;
};

inline constexpr Index kMaxLatticeLength = 8;

/// Every path through the factors of U_{k,j} from corner to corner that
/// avoids the structural zeros of the embedded identities. gamma symbols
/// count as nonzero. Requires j - k <= kMaxLatticeLength.
std::vector<LatticeTerm> lattice_expand(Index k, Index j);

/// (1/(l+1)) * binom(2l, l), exact. Throws past the 64-bit range (l > 35).
std::uint64_t catalan(unsigned l);

}  // namespace szego
