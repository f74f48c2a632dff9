#include "szego/free_semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "szego/io.hpp"
#include "szego/schur.hpp"

namespace szego {

namespace {

Index ipow(Index base, Index e) {
  Index v = 1;
  while (e--) v *= base;
  return v;
}

// Rank of the first word of length m.
Index length_offset(unsigned alphabet, Index m) {
  Index off = 0;
  for (Index i = 0; i < m; ++i) off += ipow(alphabet, i);
  return off;
}

void check_alphabet(unsigned alphabet) {
  if (alphabet < 1 || alphabet > 9)
    throw ValidationError("alphabet size must be in 1..9, got " + std::to_string(alphabet));
}

}  // namespace

Word::Word(unsigned alphabet, std::vector<std::uint8_t> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  check_alphabet(alphabet);
  for (auto c : letters_)
    if (c < 1 || c > alphabet)
      throw ValidationError("letter " + std::to_string(c) + " outside alphabet 1.." +
                            std::to_string(alphabet));
}

Word Word::parse(const std::string& text, unsigned alphabet) {
  if (text == "e") return Word(alphabet);
  if (text.empty()) throw ValidationError("empty word must be written as \"e\"");
  std::vector<std::uint8_t> letters;
  for (char c : text) {
    if (c < '1' || c > '9') throw ValidationError("bad word '" + text + "'");
    letters.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(alphabet, std::move(letters));
}

Word Word::unrank(unsigned alphabet, Index rank) {
  check_alphabet(alphabet);
  Index m = 0;
  while (rank >= ipow(alphabet, m)) {
    rank -= ipow(alphabet, m);
    ++m;
  }
  std::vector<std::uint8_t> letters(m);
  for (Index i = m; i-- > 0;) {
    letters[i] = static_cast<std::uint8_t>(rank % alphabet + 1);
    rank /= alphabet;
  }
  return Word(alphabet, std::move(letters));
}

Index Word::rank() const {
  Index lex = 0;
  for (auto c : letters_) lex = lex * alphabet_ + (c - 1);
  return length_offset(alphabet_, length()) + lex;
}

Word Word::succ() const {
  Word w = *this;
  for (Index i = w.letters_.size(); i-- > 0;) {
    if (w.letters_[i] < alphabet_) {
      ++w.letters_[i];
      return w;
    }
    w.letters_[i] = 1;
  }
  w.letters_.assign(letters_.size() + 1, 1);
  return w;
}

Word Word::pred() const {
  if (empty()) throw ValidationError("the empty word has no predecessor");
  Word w = *this;
  for (Index i = w.letters_.size(); i-- > 0;) {
    if (w.letters_[i] > 1) {
      --w.letters_[i];
      return w;
    }
    w.letters_[i] = static_cast<std::uint8_t>(alphabet_);
  }
  w.letters_.assign(letters_.size() - 1, static_cast<std::uint8_t>(alphabet_));
  return w;
}

Word Word::tail() const {
  if (empty()) throw ValidationError("the empty word has no tail");
  return Word(alphabet_, std::vector<std::uint8_t>(letters_.begin() + 1, letters_.end()));
}

bool Word::is_prefix_of(const Word& other) const {
  return length() <= other.length() &&
         std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

Word Word::operator+(const Word& other) const {
  if (alphabet_ != other.alphabet_) throw ValidationError("words over different alphabets");
  Word w = *this;
  w.letters_.insert(w.letters_.end(), other.letters_.begin(), other.letters_.end());
  return w;
}

std::string Word::to_string() const {
  if (empty()) return "e";
  std::string s;
  for (auto c : letters_) s += static_cast<char>('0' + c);
  return s;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = length() <=> other.length(); c != 0) return c;
  return letters_ <=> other.letters_;
}

Index word_count(unsigned alphabet, Index depth) { return length_offset(alphabet, depth + 1); }

Index words_of_length(unsigned alphabet, Index m) { return ipow(alphabet, m); }

// ---------------------------------------------------------------------------

NCSeries::NCSeries(unsigned alphabet, Index depth)
    : alphabet_(alphabet), depth_(depth), coeffs_(word_count(alphabet, depth)) {
  check_alphabet(alphabet);
}

NCSeries NCSeries::constant(unsigned alphabet, Index depth, Complex c) {
  NCSeries s(alphabet, depth);
  s.coeffs_[0] = c;
  return s;
}

NCSeries NCSeries::monomial(const Word& w, Index depth, Complex c) {
  NCSeries s(w.alphabet(), depth);
  s[w] = c;
  return s;
}

Complex NCSeries::operator[](const Word& w) const {
  if (w.alphabet() != alphabet_) throw ValidationError("word over a different alphabet");
  return w.length() > depth_ ? Complex{} : coeffs_[w.rank()];
}

Complex& NCSeries::operator[](const Word& w) {
  if (w.alphabet() != alphabet_) throw ValidationError("word over a different alphabet");
  if (w.length() > depth_)
    throw ValidationError("word " + w.to_string() + " beyond series depth " +
                          std::to_string(depth_));
  return coeffs_[w.rank()];
}

void NCSeries::check_compatible(const NCSeries& o) const {
  if (alphabet_ != o.alphabet_ || depth_ != o.depth_)
    throw ValidationError("series differ in alphabet or depth");
}

NCSeries& NCSeries::operator+=(const NCSeries& o) {
  check_compatible(o);
  for (Index i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& o) {
  check_compatible(o);
  for (Index i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

NCSeries& NCSeries::operator*=(Complex c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

NCSeries NCSeries::with_depth(Index depth) const {
  NCSeries s(alphabet_, depth);
  const Index n = std::min(s.coeffs_.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, s.coeffs_.begin());
  return s;
}

namespace {

struct Shape {
  Index length;
  Index lex;
};

std::vector<Shape> shapes(unsigned alphabet, Index depth) {
  std::vector<Shape> out;
  for (Index m = 0; m <= depth; ++m)
    for (Index i = 0; i < ipow(alphabet, m); ++i) out.push_back({m, i});
  return out;
}

}  // namespace

NCSeries nc_multiply(const NCSeries& x, const NCSeries& y, Index depth) {
  if (x.alphabet() != y.alphabet()) throw ValidationError("series over different alphabets");
  const unsigned n = x.alphabet();
  NCSeries out(n, depth);
  const auto sx = shapes(n, std::min(x.depth(), depth));
  const auto sy = shapes(n, std::min(y.depth(), depth));
  std::vector<Index> offset(depth + 1), power(depth + 1);
  for (Index m = 0; m <= depth; ++m) {
    offset[m] = length_offset(n, m);
    power[m] = ipow(n, m);
  }
  std::vector<Complex> c(out.coeffs().size());
  for (Index a = 0; a < sx.size(); ++a) {
    const Complex xa = x.at_rank(a);
    if (xa == Complex{}) continue;
    for (Index b = 0; b < sy.size(); ++b) {
      const Index len = sx[a].length + sy[b].length;
      if (len > depth) break;
      c[offset[len] + sx[a].lex * power[sy[b].length] + sy[b].lex] += xa * y.at_rank(b);
    }
  }
  for (Index r = 0; r < c.size(); ++r)
    if (c[r] != Complex{}) out[Word::unrank(n, r)] = c[r];
  return out;
}

NCSeries nc_invert(const NCSeries& x, Index depth) {
  const Complex c = x.at_rank(0);
  if (c == Complex{}) throw NumericalError("series with zero constant term is not invertible");
  // x = c (1 - u), x^{-1} = c^{-1} sum_m u^m
  NCSeries u = x.with_depth(depth);
  u *= -1.0 / c;
  u += NCSeries::constant(x.alphabet(), depth, 1.0);
  NCSeries term = NCSeries::constant(x.alphabet(), depth, 1.0);
  NCSeries sum = term;
  for (Index m = 1; m <= depth; ++m) {
    term = nc_multiply(term, u, depth);
    sum += term;
  }
  sum *= 1.0 / c;
  return sum;
}

std::string series_csv(const NCSeries& s) {
  std::string out = "word,re,im\n";
  for (Index r = 0; r < s.coeffs().size(); ++r) {
    const Complex v = s.at_rank(r);
    out += Word::unrank(s.alphabet(), r).to_string() + "," + io::num(v.real()) + "," +
           io::num(v.imag()) + "\n";
  }
  return out;
}

TriangularArray embed_series(const NCSeries& s) {
  const unsigned n = s.alphabet();
  const Index size = s.coeffs().size();
  TriangularArray t(size);
  for (Index r = 0; r < size; ++r) {
    const Word rho = Word::unrank(n, r);
    for (Index b = 0; b < size; ++b) {
      const Word beta = Word::unrank(n, b);
      if (rho.length() + beta.length() > s.depth()) break;
      t.at((rho + beta).rank(), r) = s.at_rank(b);
    }
  }
  return t;
}

NCSeries column_series(const TriangularArray& a, unsigned alphabet, Index depth) {
  NCSeries s(alphabet, depth);
  if (a.size() < s.coeffs().size()) throw ValidationError("array smaller than the word section");
  for (Index r = 0; r < s.coeffs().size(); ++r) s[Word::unrank(alphabet, r)] = a(r, 0);
  return s;
}

// ---------------------------------------------------------------------------

TreeGammaField::TreeGammaField(unsigned alphabet, Index depth)
    : alphabet_(alphabet), depth_(depth), gamma_(word_count(alphabet, depth)) {
  check_alphabet(alphabet);
}

Complex TreeGammaField::gamma(const Word& w) const {
  if (w.empty()) throw ValidationError("gamma is indexed by nonempty words");
  if (w.alphabet() != alphabet_) throw ValidationError("word over a different alphabet");
  return w.length() > depth_ ? Complex{} : gamma_[w.rank()];
}

double TreeGammaField::dee(const Word& w) const {
  const double a = std::abs(gamma(w));
  return std::sqrt((1.0 - a) * (1.0 + a));
}

void TreeGammaField::set(const Word& w, Complex value) {
  if (w.empty()) throw ValidationError("gamma is indexed by nonempty words");
  if (w.alphabet() != alphabet_) throw ValidationError("word over a different alphabet");
  if (w.length() > depth_)
    throw ValidationError("word " + w.to_string() + " beyond field depth");
  if (!(std::abs(value) < 1.0))
    throw ValidationError("parameter out of disk at word " + w.to_string());
  gamma_[w.rank()] = value;
}

ExactTreeField::ExactTreeField(unsigned alphabet, Index depth)
    : alphabet_(alphabet),
      depth_(depth),
      params_(word_count(alphabet, depth), ExactRotationField::Pair{0, 1}) {
  check_alphabet(alphabet);
}

const ExactRotationField::Pair& ExactTreeField::param(const Word& w) const {
  static const ExactRotationField::Pair zero{0, 1};
  if (w.empty()) throw ValidationError("gamma is indexed by nonempty words");
  return w.length() > depth_ ? zero : params_.at(w.rank());
}

void ExactTreeField::set(const Word& w, ExactRotationField::Pair p) {
  if (w.empty() || w.length() > depth_ || w.alphabet() != alphabet_)
    throw ValidationError("word outside the exact tree field");
  if (p.gamma * p.gamma + p.dee * p.dee != 1 || sgn(p.dee) <= 0)
    throw ValidationError("exact tree parameter needs gamma^2 + d^2 = 1 with d > 0");
  params_.at(w.rank()) = std::move(p);
}

namespace {

std::vector<Word> all_words(unsigned alphabet, Index depth) {
  std::vector<Word> w;
  const Index m = word_count(alphabet, depth);
  w.reserve(m);
  for (Index r = 0; r < m; ++r) w.push_back(Word::unrank(alphabet, r));
  return w;
}

// beta with t = s beta, when s is a proper prefix of t.
std::optional<Word> strip_prefix(const Word& s, const Word& t) {
  if (s.length() >= t.length() || !s.is_prefix_of(t)) return std::nullopt;
  return Word(t.alphabet(),
              std::vector<std::uint8_t>(t.letters().begin() + s.length(), t.letters().end()));
}

}  // namespace

GammaField induced_field(const TreeGammaField& g, Index depth) {
  const auto words = all_words(g.alphabet(), depth);
  return GammaField(std::vector<double>(words.size(), 1.0), [&](Index r, Index c) {
    const auto beta = strip_prefix(words[r], words[c]);
    return beta ? g.gamma(*beta) : Complex{};
  });
}

ExactRotationField induced_field(const ExactTreeField& g, Index depth) {
  const auto words = all_words(g.alphabet(), depth);
  return ExactRotationField(std::vector<Rational>(words.size(), Rational(1)),
                            [&](Index r, Index c) {
                              const auto beta = strip_prefix(words[r], words[c]);
                              return beta ? g.param(*beta) : ExactRotationField::Pair{0, 1};
                            });
}

MomentKernel stationary_kernel(const TreeGammaField& g, Index depth) {
  const auto field = induced_field(g, depth);
  const auto k = reconstruct_moments(field, field.size());
  return MomentKernel(k.size(), [&](Index a, Index b) { return k(a, b); },
                      IndexKind::words(g.alphabet()));
}

RationalKernel stationary_kernel(const ExactTreeField& g, Index depth) {
  const auto field = induced_field(g, depth);
  const auto k = reconstruct_moments(field, field.size());
  return RationalKernel(k.size(), [&](Index a, Index b) { return k(a, b); },
                        IndexKind::words(g.alphabet()));
}

namespace {

template <class K>
StationarityDefect stationarity_impl(const K& k, unsigned alphabet, Index depth) {
  const auto words = all_words(alphabet, depth);
  if (k.size() < words.size()) throw ValidationError("kernel smaller than the word section");
  StationarityDefect out;
  using S = typename K::Scalar;
  auto mag = [](const S& v) -> double {
    if constexpr (std::is_same_v<S, Rational>)
      return std::abs(v.get_d());
    else
      return std::abs(v);
  };
  for (Index a = 0; a < words.size(); ++a)
    for (Index b = 0; b < words.size(); ++b) {
      const auto v = k(a, b);
      if (!words[a].is_prefix_of(words[b]) && !words[b].is_prefix_of(words[a])) {
        out.max_off_support = std::max(out.max_off_support, mag(v));
        if (!ScalarTraits<typename K::Scalar>::is_zero(v)) ++out.violations;
      }
      for (Index t = 1; t < words.size(); ++t) {
        const Index la = words[t].length() + words[a].length();
        const Index lb = words[t].length() + words[b].length();
        if (la > depth || lb > depth) continue;
        const auto w = k((words[t] + words[a]).rank(), (words[t] + words[b]).rank());
        out.max_shift_deviation = std::max(out.max_shift_deviation, mag(S(w - v)));
        if (w != v) ++out.violations;
      }
    }
  return out;
}

}  // namespace

StationarityDefect check_stationarity(const MomentKernel& k, unsigned alphabet, Index depth) {
  return stationarity_impl(k, alphabet, depth);
}

StationarityDefect check_stationarity(const RationalKernel& k, unsigned alphabet, Index depth) {
  return stationarity_impl(k, alphabet, depth);
}

// ---------------------------------------------------------------------------

namespace {

// X_k * s: the coefficient of k a is s_a.
NCSeries left_letter(std::uint8_t letter, const NCSeries& s) {
  const unsigned n = s.alphabet();
  NCSeries out(n, s.depth());
  const Word x(n, {letter});
  for (Index r = 0; r < s.coeffs().size(); ++r) {
    const Word w = Word::unrank(n, r);
    if (w.length() + 1 > s.depth()) break;
    out[x + w] = s.at_rank(r);
  }
  return out;
}

}  // namespace

NCPolys nc_polys(const TreeGammaField& g, Index depth) {
  NCPolys p;
  p.alphabet = g.alphabet();
  p.depth = depth;
  const Index m = word_count(g.alphabet(), depth);
  p.phi.reserve(m);
  p.phi_sharp.reserve(m);
  p.phi.push_back(NCSeries::constant(g.alphabet(), depth, 1.0));
  p.phi_sharp.push_back(p.phi.front());
  for (Index r = 1; r < m; ++r) {
    const Word w = Word::unrank(g.alphabet(), r);
    const Complex gamma = g.gamma(w);
    const double d = g.dee(w);
    const NCSeries shifted = left_letter(w.front(), p.phi[w.tail().rank()]);
    const NCSeries& prev_sharp = p.phi_sharp[r - 1];
    p.phi.push_back((1.0 / d) * (shifted - gamma * prev_sharp));
    p.phi_sharp.push_back((1.0 / d) * (prev_sharp - std::conj(gamma) * shifted));
  }
  return p;
}

double nc_orthonormality_defect(const NCPolys& p, const MomentKernel& k) {
  const Index m = p.phi.size();
  if (k.size() < m) throw ValidationError("kernel smaller than the polynomial family");
  double worst = 0.0;
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) {
      Complex v{};
      for (Index i = 0; i <= a; ++i) {
        const Complex ca = std::conj(p.phi[a].at_rank(i));
        if (ca == Complex{}) continue;
        for (Index j = 0; j <= b; ++j) v += ca * k(i, j) * p.phi[b].at_rank(j);
      }
      if (a == b) v -= 1.0;
      worst = std::max(worst, std::abs(v));
    }
  return worst;
}

NCLimitReport nc_limits(const TreeGammaField& g, Index depth, Index coeff_depth, double tol) {
  if (coeff_depth > depth) throw ValidationError("coefficient depth exceeds depth");
  const unsigned n = g.alphabet();
  const auto words = all_words(n, depth);
  const Index m = words.size();

  NCLimitReport rep;
  rep.alphabet = n;
  rep.depth = depth;
  rep.coeff_depth = coeff_depth;
  double prod_d = 1.0;
  rep.g = 1.0;
  rep.l = 1.0;
  for (Index r = 1; r < m; ++r) {
    const double d = g.dee(words[r]);
    prod_d *= d;
    rep.g *= d * d;
    rep.l *= std::pow(d, 2.0 * double(words[r].length()));
  }
  if (!(prod_d > tol)) throw ValidationError("degenerate product: prod d = " + io::num(prod_d));

  const auto k = stationary_kernel(g, depth);
  const auto full = linalg::ldl_pivots(k.section(0, m - 1));
  const auto tail = linalg::ldl_pivots(k.section(1, m - 1));
  if (full.size() != m || tail.size() != m - 1)
    throw NumericalError("not strictly positive: word section is not positive definite", 0, m - 1);

  rep.theta = column_series(spectral_factor(k, m).theta, n, depth);
  const auto polys = nc_polys(g, depth);
  const Index low = word_count(n, coeff_depth);

  double d_all = full[0], d_tail = 1.0;
  for (Index r = 1; r < m; ++r) {
    d_all *= full[r];
    d_tail *= tail[r - 1];
    NCLimitRow row;
    row.tau = words[r];
    row.ratio = d_all / d_tail;
    row.normalized = d_all / std::pow(rep.g, double(r + 1));
    double cross = 1.0;
    for (Index s = 0; s <= r; ++s)
      for (Index b = 1; b < m; ++b) {
        if (words[s].length() + words[b].length() <= depth &&
            (words[s] + words[b]).rank() <= r)
          continue;
        const double d = g.dee(words[b]);
        cross *= d * d;
      }
    row.section_value = 1.0 / cross;
    const auto inv = nc_invert(polys.phi_sharp[r], depth);
    for (Index w = 0; w < low; ++w) {
      row.series_deviation =
          std::max(row.series_deviation, std::abs(inv.at_rank(w) - rep.theta.at_rank(w)));
      row.phi_low_max = std::max(row.phi_low_max, std::abs(polys.phi[r].at_rank(w)));
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace szego
