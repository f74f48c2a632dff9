#pragma once

// Words over N letters, non-commutative series, and tree-stationary kernels.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "szego/gamma_field.hpp"
#include "szego/kernel.hpp"
#include "szego/triangular.hpp"

namespace szego {

/// A word i_1 ... i_k over the letters 1..alphabet. Words are totally ordered
/// by length first, then lexicographically (graded-lexicographic order).
class Word {
 public:
  Word() = default;
  explicit Word(unsigned alphabet, std::vector<std::uint8_t> letters = {});

  /// "e" is the empty word; otherwise a digit string such as "121".
  static Word parse(const std::string& text, unsigned alphabet);
  static Word unrank(unsigned alphabet, Index rank);

  unsigned alphabet() const { return alphabet_; }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  Index length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::uint8_t front() const { return letters_.front(); }

  /// Position in graded-lex order: sum_{m<|w|} N^m + lexicographic rank.
  Index rank() const;
  /// Number of words <= this one, rank() + 1.
  Index ell() const { return rank() + 1; }
  Word succ() const;
  /// Throws ValidationError on the empty word.
  Word pred() const;
  /// Drops the first letter.
  Word tail() const;

  bool is_prefix_of(const Word& other) const;
  Word operator+(const Word& other) const;
  std::string to_string() const;

  std::strong_ordering operator<=>(const Word& other) const;
  bool operator==(const Word& other) const = default;

 private:
  unsigned alphabet_ = 1;
  std::vector<std::uint8_t> letters_;
};

/// Number of words of length <= depth: (N^{depth+1} - 1) / (N - 1).
Index word_count(unsigned alphabet, Index depth);
/// Number of words of length exactly m.
Index words_of_length(unsigned alphabet, Index m);

/// Coefficients on words of length <= depth, stored densely by rank.
class NCSeries {
 public:
  NCSeries() = default;
  NCSeries(unsigned alphabet, Index depth);

  static NCSeries constant(unsigned alphabet, Index depth, Complex c);
  /// c * X_w
  static NCSeries monomial(const Word& w, Index depth, Complex c = 1.0);

  unsigned alphabet() const { return alphabet_; }
  Index depth() const { return depth_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex operator[](const Word& w) const;
  Complex& operator[](const Word& w);
  Complex at_rank(Index r) const { return coeffs_.at(r); }

  NCSeries& operator+=(const NCSeries& o);
  NCSeries& operator-=(const NCSeries& o);
  NCSeries& operator*=(Complex c);
  friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
  friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
  friend NCSeries operator*(Complex c, NCSeries a) { return a *= c; }

  /// Same coefficients, truncated or zero-padded to another depth.
  NCSeries with_depth(Index depth) const;

 private:
  void check_compatible(const NCSeries& o) const;

  unsigned alphabet_ = 1;
  Index depth_ = 0;
  std::vector<Complex> coeffs_;
};

/// Concatenation product truncated to |w| <= depth.
NCSeries nc_multiply(const NCSeries& x, const NCSeries& y, Index depth);
/// Geometric-series inverse of x = c (1 - u), up to depth. Throws
/// NumericalError on a zero constant term.
NCSeries nc_invert(const NCSeries& x, Index depth);

/// CSV (word, re, im) with header.
std::string series_csv(const NCSeries& s);

/// Word-ordered lower triangular array T[rank(rb), rank(r)] = c_b: the
/// triangular realisation of a series (column 0 holds the coefficients).
/// It reverses products: embed(x) embed(y) = embed(y x).
TriangularArray embed_series(const NCSeries& s);
/// Column 0 of a word-ordered array read back as a series.
NCSeries column_series(const TriangularArray& a, unsigned alphabet, Index depth);

/// gamma_w for nonempty words w with |w| <= depth; |gamma_w| < 1.
class TreeGammaField {
 public:
  TreeGammaField() = default;
  TreeGammaField(unsigned alphabet, Index depth);

  unsigned alphabet() const { return alphabet_; }
  Index depth() const { return depth_; }
  /// Zero beyond the stored depth.
  Complex gamma(const Word& w) const;
  double dee(const Word& w) const;
  void set(const Word& w, Complex value);

 private:
  unsigned alphabet_ = 1;
  Index depth_ = 0;
  std::vector<Complex> gamma_;
};

/// Real tree field with Pythagorean (gamma, d) pairs, for exact kernels.
class ExactTreeField {
 public:
  ExactTreeField(unsigned alphabet, Index depth);
  unsigned alphabet() const { return alphabet_; }
  Index depth() const { return depth_; }
  const ExactRotationField::Pair& param(const Word& w) const;
  void set(const Word& w, ExactRotationField::Pair p);

 private:
  unsigned alphabet_;
  Index depth_;
  std::vector<ExactRotationField::Pair> params_;
};

/// gamma_{s,t} = gamma_b if t = s b (b nonempty), else 0, on all words of
/// length <= depth; unit diagonal.
GammaField induced_field(const TreeGammaField& g, Index depth);
ExactRotationField induced_field(const ExactTreeField& g, Index depth);

/// Kernel on words of length <= depth, by moment reconstruction of the
/// induced field.
MomentKernel stationary_kernel(const TreeGammaField& g, Index depth);
RationalKernel stationary_kernel(const ExactTreeField& g, Index depth);

struct StationarityDefect {
  /// max |K(ts, ts') - K(s, s')| over triples inside the section.
  double max_shift_deviation = 0.0;
  /// max |K(s, t)| over prefix-incomparable pairs.
  double max_off_support = 0.0;
  /// Number of entries that violate either condition (exact comparison).
  Index violations = 0;
};

StationarityDefect check_stationarity(const MomentKernel& k, unsigned alphabet, Index depth);
StationarityDefect check_stationarity(const RationalKernel& k, unsigned alphabet, Index depth);

struct NCPolys {
  unsigned alphabet = 1;
  Index depth = 0;
  /// Indexed by word rank.
  std::vector<NCSeries> phi;
  std::vector<NCSeries> phi_sharp;
};

/// phi_0 = phi^#_0 = 1 and, for a word k s,
///   phi_{ks}   = (X_k phi_s - g_{ks} phi^#_{ks-1}) / d_{ks},
///   phi^#_{ks} = (-conj(g_{ks}) X_k phi_s + phi^#_{ks-1}) / d_{ks},
/// where ks-1 is the graded-lex predecessor.
NCPolys nc_polys(const TreeGammaField& g, Index depth);

/// max |conj(A) S A^T - I| with A the coefficient rows of phi by rank.
double nc_orthonormality_defect(const NCPolys& p, const MomentKernel& k);

struct NCLimitRow {
  Word tau;
  /// D_{e,tau} / D_{1,tau}
  double ratio = 0.0;
  /// D_{e,tau} / g^{l(tau)}
  double normalized = 0.0;
  /// 1 / prod_{s <= tau} prod_{b : sb > tau} d^2_b, the exact finite-section
  /// value of `normalized`.
  double section_value = 0.0;
  /// max over |w| <= coeff_depth of |(phi^#_tau)^{-1}_w - Theta_w|.
  double series_deviation = 0.0;
  /// max over |w| <= coeff_depth of |(phi_tau)_w|.
  double phi_low_max = 0.0;
};

struct NCLimitReport {
  unsigned alphabet = 1;
  Index depth = 0;
  Index coeff_depth = 0;
  /// prod_{|s| <= depth} d^2_s
  double g = 0.0;
  /// prod_{|s| <= depth} d_s^{2|s|}
  double l = 0.0;
  std::vector<NCLimitRow> rows;
  /// Theta's coefficients, column 0 of the word-ordered spectral factor.
  NCSeries theta;
};

/// Requires prod d_s > tol (otherwise ValidationError "degenerate product").
NCLimitReport nc_limits(const TreeGammaField& g, Index depth, Index coeff_depth = 2,
                        double tol = 1e-12);

}  // namespace szego
