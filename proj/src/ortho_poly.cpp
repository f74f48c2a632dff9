#include "szego/ortho_poly.hpp"

#include <cmath>
#include <exception>

namespace szego {

PolyTable::PolyTable(Index max_degree, Index max_level, bool with_reversed)
    : max_degree_(max_degree), max_level_(max_level), with_reversed_(with_reversed) {
  offset_.resize(max_degree + 2);
  offset_[0] = 0;
  for (Index n = 0; n <= max_degree; ++n) offset_[n + 1] = offset_[n] + levels_for(n) + 1;
  a_.resize(offset_.back());
  if (with_reversed) b_.resize(offset_.back());
  for (Index n = 0; n <= max_degree; ++n)
    for (Index l = 0; l <= levels_for(n); ++l) {
      a_[offset_[n] + l].assign(n + 1, Complex{});
      if (with_reversed) b_[offset_[n] + l].assign(n + 1, Complex{});
    }
}

Index PolyTable::slot(Index n, Index l) const {
  if (!covers(n, l))
    throw ValidationError("polynomial (n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                          ") outside table");
  return offset_[n] + l;
}

std::span<const Complex> PolyTable::phi_sharp(Index n, Index l) const {
  if (!with_reversed_) throw ValidationError("table holds no reversed polynomials");
  return b_.at(slot(n, l));
}

std::span<Complex> PolyTable::phi_sharp(Index n, Index l) {
  if (!with_reversed_) throw ValidationError("table holds no reversed polynomials");
  return b_.at(slot(n, l));
}

namespace {

void check_field(const GammaField& g, Index max_degree, Index max_level) {
  if (g.size() <= max_level + max_degree)
    throw ValidationError("field of size " + std::to_string(g.size()) +
                          " is too small for degree " + std::to_string(max_degree) +
                          " on level " + std::to_string(max_level));
}

void seed_degree_zero(PolyTable& t, const GammaField& g) {
  for (Index l = 0; l <= t.levels_for(0); ++l) {
    const double c = 1.0 / std::sqrt(g.diag(l));
    t.phi(0, l)[0] = c;
    t.phi_sharp(0, l)[0] = c;
  }
}

void step(PolyTable& t, const GammaField& g, Index n, Index l) {
  const Complex gamma = g.gamma(l, l + n);
  const double d = g.dee(l, l + n);
  auto up = t.phi(n - 1, l + 1);
  auto sharp = t.phi_sharp(n - 1, l);
  auto a = t.phi(n, l);
  auto b = t.phi_sharp(n, l);
  for (Index k = 0; k <= n; ++k) {
    const Complex shifted = k > 0 ? up[k - 1] : Complex{};
    const Complex rev = k < n ? sharp[k] : Complex{};
    a[k] = (shifted - gamma * rev) / d;
    b[k] = (-std::conj(gamma) * shifted + rev) / d;
  }
}

}  // namespace

PolyTable build_polys(const GammaField& g, Index max_degree, Index max_level) {
  check_field(g, max_degree, max_level);
  PolyTable t(max_degree, max_level, true);
  seed_degree_zero(t, g);
  for (Index n = 1; n <= max_degree; ++n) {
    const long levels = static_cast<long>(t.levels_for(n)) + 1;
#pragma omp parallel for schedule(static) if (levels > 8)
    for (long l = 0; l < levels; ++l) step(t, g, n, static_cast<Index>(l));
  }
  return t;
}

namespace serial {

// Level-major order: every polynomial is produced from its two parents on
// demand, which exercises a different evaluation order than the fast path.
PolyTable build_polys(const GammaField& g, Index max_degree, Index max_level) {
  check_field(g, max_degree, max_level);
  PolyTable t(max_degree, max_level, true);
  seed_degree_zero(t, g);
  std::vector<std::vector<char>> done(max_degree + 1);
  for (Index n = 0; n <= max_degree; ++n) done[n].assign(t.levels_for(n) + 1, n == 0);
  auto fill = [&](auto&& self, Index n, Index l) -> void {
    if (done[n][l]) return;
    self(self, n - 1, l + 1);
    self(self, n - 1, l);
    step(t, g, n, l);
    done[n][l] = 1;
  };
  for (Index l = 0; l <= max_level; ++l)
    for (Index n = 0; n <= max_degree; ++n) fill(fill, n, l);
  for (Index n = 1; n <= max_degree; ++n)
    for (Index l = 0; l <= t.levels_for(n); ++l) fill(fill, n, l);
  return t;
}

}  // namespace serial

namespace {

// Rows of L^{-1} where conj(S) = L L^H, so that conj(A) S A^T = I.
linalg::Matrix<Complex> orthonormal_rows(const MomentKernel& k, Index first, Index last) {
  auto s = k.section(first, last);
  for (Index i = 0; i < s.rows(); ++i)
    for (Index j = 0; j < s.cols(); ++j) s(i, j) = std::conj(s(i, j));
  try {
    return linalg::invert_lower(linalg::cholesky_lower(s));
  } catch (const NumericalError& e) {
    const Index bad = first + e.last().value_or(0);
    throw NumericalError("not strictly positive: section " + std::to_string(first) + ".." +
                             std::to_string(bad) + " is not positive definite",
                         first, bad);
  }
}

}  // namespace

PolyTable gram_schmidt_polys(const MomentKernel& k) {
  if (k.size() == 0) throw ValidationError("empty kernel");
  const Index m = k.size();
  PolyTable t(m - 1, 0, false);
  std::exception_ptr failure;
  Index failed_level = m;
#pragma omp parallel for schedule(dynamic)
  for (long lv = 0; lv < static_cast<long>(m); ++lv) {
    const Index l = static_cast<Index>(lv);
    try {
      const auto a = orthonormal_rows(k, l, m - 1);
      for (Index n = 0; n + l < m; ++n) {
        auto row = t.phi(n, l);
        for (Index c = 0; c <= n; ++c) row[c] = a(n, c);
      }
    } catch (...) {
#pragma omp critical(szego_gs_failure)
      if (l < failed_level) {
        failed_level = l;
        failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return t;
}

std::vector<Complex> poly_by_determinant(const MomentKernel& k, Index n, Index l) {
  if (l + n >= k.size()) throw ValidationError("polynomial needs indices beyond the kernel");
  const auto a = orthonormal_rows(k, l, l + n);
  std::vector<Complex> p(n + 1);
  for (Index c = 0; c <= n; ++c) p[c] = a(n, c);
  return p;
}

Rational BorderedPoly::signed_square(Index k) const {
  const Rational& c = cofactors.at(k);
  Rational v = c * c / norm_sq;
  return sgn(c) < 0 ? Rational(-v) : v;
}

std::vector<double> BorderedPoly::to_float() const {
  const double scale = 1.0 / std::sqrt(norm_sq.get_d());
  std::vector<double> p;
  for (const auto& c : cofactors) p.push_back(c.get_d() * scale);
  return p;
}

BorderedPoly poly_by_determinant(const RationalKernel& k, Index n, Index l) {
  if (l + n >= k.size()) throw ValidationError("polynomial needs indices beyond the kernel");
  BorderedPoly p;
  p.cofactors.resize(n + 1);
  for (Index col = 0; col <= n; ++col) {
    linalg::Matrix<Rational> minor(n, n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0, bb = 0; b <= n; ++b) {
        if (b == col) continue;
        minor(a, bb++) = k(l + a, l + b);
      }
    Rational c = n == 0 ? Rational(1) : linalg::determinant(std::move(minor));
    if ((n + col) % 2 == 1) c = -c;
    p.cofactors[col] = c;
  }
  const Rational outer = determinant(k, l, l + n);
  const Rational inner = n == 0 ? Rational(1) : determinant(k, l, l + n - 1);
  if (sgn(outer) <= 0 || sgn(inner) <= 0)
    throw NumericalError("not strictly positive: section " + std::to_string(l) + ".." +
                             std::to_string(l + n) + " is not positive definite",
                         l, l + n);
  p.norm_sq = outer * inner;
  return p;
}

Complex evaluate(std::span<const Complex> p, Complex x) {
  Complex v{};
  for (Index k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

double phi_sharp_at_zero(const GammaField& g, Index n, Index l) {
  double v = 1.0 / std::sqrt(g.diag(l));
  for (Index p = 1; p <= n; ++p) v /= g.dee(l, l + p);
  return v;
}

GammaField recover_gamma(const PolyTable& t, std::span<const double> diag) {
  const Index m = t.max_degree() + 1;
  if (diag.size() < m) throw ValidationError("diagonal shorter than the table");
  std::vector<double> d(diag.begin(), diag.begin() + m);
  return GammaField(d, [&](Index l, Index j) {
    const Index n = j - l;
    double ratio = std::sqrt(d[l] / d[l + 1]);
    for (Index p = 1; p < n; ++p) ratio *= t.leading(p, l + 1);
    for (Index p = 1; p <= n; ++p) ratio /= t.leading(p, l);
    return -ratio * t.a(n, l, 0);
  });
}

linalg::Matrix<Complex> coefficient_matrix(const PolyTable& t, Index level, Index count) {
  linalg::Matrix<Complex> a(count, count);
  for (Index n = 0; n < count; ++n) {
    const auto row = t.phi(n, level);
    for (Index c = 0; c <= n; ++c) a(n, c) = row[c];
  }
  return a;
}

double orthonormality_defect(const PolyTable& t, const MomentKernel& k, Index level,
                             Index count) {
  if (count == 0) return 0.0;
  const auto a = coefficient_matrix(t, level, count);
  const auto s = k.section(level, level + count - 1);
  double worst = 0.0;
  for (Index p = 0; p < count; ++p)
    for (Index q = 0; q < count; ++q) {
      Complex v{};
      for (Index i = 0; i <= p; ++i)
        for (Index j = 0; j <= q; ++j) v += std::conj(a(p, i)) * s(i, j) * a(q, j);
      if (p == q) v -= 1.0;
      worst = std::max(worst, std::abs(v));
    }
  return worst;
}

}  // namespace szego
