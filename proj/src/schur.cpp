#include "szego/schur.hpp"

#include <cmath>
#include <sstream>

#include "szego/ortho_poly.hpp"

namespace szego {

namespace {

struct FactorPos {
  Index row;  // global pair (row, col)
  Index col;
  Index pos;  // top-left row of the 2x2 block inside U_{k,j}
};

std::vector<FactorPos> factor_positions(Index k, Index j) {
  std::vector<FactorPos> f;
  for (Index r = k; r <= j; ++r)
    for (Index c = r + 1; c <= j; ++c) f.push_back({r, c, c - r - 1});
  return f;
}

template <class T>
void right_apply(linalg::Matrix<T>& u, Index p, const T& g, const T& gbar, const T& d) {
  for (Index i = 0; i < u.rows(); ++i) {
    const T a = u(i, p);
    const T b = u(i, p + 1);
    u(i, p) = a * g + b * d;
    u(i, p + 1) = a * d - b * gbar;
  }
}

// First row of U_{k,j}, propagated factor by factor.
template <class T, class Param>
T corner(Index k, Index j, const Param& param) {
  std::vector<T> v(j - k + 1, T(0));
  v[0] = T(1);
  for (const auto& f : factor_positions(k, j)) {
    const auto [g, gbar, d] = param(f.row, f.col);
    const T a = v[f.pos];
    const T b = v[f.pos + 1];
    v[f.pos] = a * g + b * d;
    v[f.pos + 1] = a * d - b * gbar;
  }
  return v[0];
}

void check_pair(Index k, Index j, Index size) {
  if (!(k < j) || j >= size)
    throw ValidationError("rotation product needs k < j < " + std::to_string(size));
}

}  // namespace

linalg::Matrix<Complex> rotation_block(Complex gamma) {
  const double a = std::abs(gamma);
  if (!(a < 1.0)) throw ValidationError("rotation parameter outside the open unit disk");
  const double d = std::sqrt((1.0 - a) * (1.0 + a));
  linalg::Matrix<Complex> m(2, 2);
  m(0, 0) = gamma;
  m(0, 1) = d;
  m(1, 0) = d;
  m(1, 1) = -std::conj(gamma);
  return m;
}

linalg::Matrix<Complex> rotation_product(const GammaField& g, Index k, Index j) {
  check_pair(k, j, g.size());
  auto u = linalg::Matrix<Complex>::identity(j - k + 1);
  for (const auto& f : factor_positions(k, j)) {
    const Complex gamma = g.gamma(f.row, f.col);
    right_apply<Complex>(u, f.pos, gamma, std::conj(gamma), Complex(g.dee(f.row, f.col)));
  }
  return u;
}

linalg::Matrix<Rational> rotation_product(const ExactRotationField& g, Index k, Index j) {
  check_pair(k, j, g.size());
  auto u = linalg::Matrix<Rational>::identity(j - k + 1);
  for (const auto& f : factor_positions(k, j)) {
    const auto& p = g.param(f.row, f.col);
    right_apply<Rational>(u, f.pos, p.gamma, p.gamma, p.dee);
  }
  return u;
}

MomentKernel reconstruct_moments(const GammaField& g, Index size) {
  if (size > g.size())
    throw ValidationError("missing parameters: field of size " + std::to_string(g.size()) +
                          " cannot reconstruct " + std::to_string(size) + " moments");
  std::vector<std::vector<Complex>> rows(size);
  auto param = [&](Index r, Index c) {
    const Complex gamma = g.gamma(r, c);
    return std::tuple<Complex, Complex, Complex>{gamma, std::conj(gamma), g.dee(r, c)};
  };
#pragma omp parallel for schedule(dynamic)
  for (Index k = 0; k < size; ++k) {
    auto& row = rows[k];
    row.resize(size - k);
    const double sk = std::sqrt(g.diag(k));
    row[0] = g.diag(k);
    for (Index j = k + 1; j < size; ++j)
      row[j - k] = sk * corner<Complex>(k, j, param) * std::sqrt(g.diag(j));
  }
  return MomentKernel(size, [&](Index k, Index j) { return rows[k][j - k]; });
}

RationalKernel reconstruct_moments(const ExactRotationField& g, Index size) {
  if (size > g.size()) throw ValidationError("missing parameters for exact reconstruction");
  auto param = [&](Index r, Index c) {
    const auto& p = g.param(r, c);
    return std::tuple<Rational, Rational, Rational>{p.gamma, p.gamma, p.dee};
  };
  return RationalKernel(size, [&](Index k, Index j) -> Rational {
    if (k == j) return g.diag_sqrt(k) * g.diag_sqrt(k);
    return g.diag_sqrt(k) * corner<Rational>(k, j, param) * g.diag_sqrt(j);
  });
}

GammaField extract_gamma(const MomentKernel& k) {
  const auto report = validate_kernel(k);
  if (!report.valid()) {
    if (report.first_nonpositive_section)
      throw NumericalError("not strictly positive: " + report.violations.back(), 0,
                           *report.first_nonpositive_section);
    throw ValidationError("invalid kernel: " + report.violations.front());
  }
  const PolyTable table = gram_schmidt_polys(k);
  std::vector<double> diag(k.size());
  for (Index i = 0; i < k.size(); ++i) diag[i] = k(i, i).real();
  return recover_gamma(table, diag);
}

SquaredGammaField extract_gamma(const RationalKernel& k) {
  const auto report = validate_kernel(k);
  if (!report.valid()) {
    if (report.first_nonpositive_section)
      throw NumericalError("not strictly positive: " + report.violations.back(), 0,
                           *report.first_nonpositive_section);
    throw ValidationError("invalid kernel: " + report.violations.front());
  }
  const Index m = k.size();
  const auto dets = determinant_table(k);
  std::vector<SquaredGammaField::Entry> packed;
  packed.reserve(m * (m - (m > 0)) / 2);
  for (Index l = 0; l < m; ++l)
    for (Index j = l + 1; j < m; ++j) {
      const Index n = j - l;
      // Cofactor of F_0 in the bordered determinant of phi_n(., l):
      // (-1)^n det[s_{l+a, l+b}], a = 0..n-1, b = 1..n.
      linalg::Matrix<Rational> minor(n, n);
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) minor(a, b) = k(l + a, l + b + 1);
      Rational c0 = linalg::determinant(std::move(minor));
      if (n % 2 == 1) c0 = -c0;
      SquaredGammaField::Entry e;
      e.gamma_sq = c0 * c0 / (dets(l, j - 1) * dets(l + 1, j));
      e.sign = -sgn(c0);
      packed.push_back(std::move(e));
    }
  std::vector<Rational> diag;
  for (Index i = 0; i < m; ++i) diag.push_back(k(i, i));
  return SquaredGammaField(std::move(diag), std::move(packed));
}

namespace serial {

MomentKernel reconstruct_moments(const GammaField& g, Index size) {
  if (size > g.size()) throw ValidationError("missing parameters for reconstruction");
  return MomentKernel(size, [&](Index k, Index j) -> Complex {
    if (k == j) return g.diag(k);
    return std::sqrt(g.diag(k)) * rotation_product(g, k, j)(0, 0) * std::sqrt(g.diag(j));
  });
}

GammaField extract_gamma(const MomentKernel& k) {
  const Index m = k.size();
  std::vector<double> diag(m);
  for (Index i = 0; i < m; ++i) diag[i] = k(i, i).real();
  return GammaField(diag, [&](Index l, Index j) {
    const Index n = j - l;
    const auto phi = poly_by_determinant(k, n, l);
    const double ratio = determinant(k, l, j) / determinant(k, l + 1, j);
    return -phi[0] * std::sqrt(ratio);
  });
}

}  // namespace serial

std::string LatticeTerm::to_string() const {
  std::string s = sign < 0 ? "-" : "+";
  for (const auto& f : factors) {
    s += ' ';
    switch (f.kind) {
      case LatticeFactor::Kind::gamma:
        s += "g";
        break;
      case LatticeFactor::Kind::gamma_bar:
        s += "gbar";
        break;
      case LatticeFactor::Kind::dee:
        s += "d";
        break;
    }
    s += "(" + std::to_string(f.row) + "," + std::to_string(f.col) + ")";
  }
  return s;
}

LatticeTerm LatticeTerm::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  LatticeTerm t;
  if (!(in >> tok) || (tok != "+" && tok != "-"))
    throw ValidationError("lattice term must start with a sign: '" + text + "'");
  t.sign = tok == "-" ? -1 : 1;
  while (in >> tok) {
    const auto open = tok.find('(');
    const auto comma = tok.find(',');
    if (open == std::string::npos || comma == std::string::npos || tok.back() != ')')
      throw ValidationError("bad lattice factor '" + tok + "'");
    const std::string name = tok.substr(0, open);
    LatticeFactor f{};
    if (name == "g")
      f.kind = LatticeFactor::Kind::gamma;
    else if (name == "gbar")
      f.kind = LatticeFactor::Kind::gamma_bar;
    else if (name == "d")
      f.kind = LatticeFactor::Kind::dee;
    else
      throw ValidationError("unknown lattice symbol '" + name + "'");
    f.row = std::stoul(tok.substr(open + 1, comma - open - 1));
    f.col = std::stoul(tok.substr(comma + 1, tok.size() - comma - 2));
    t.factors.push_back(f);
  }
  return t;
}

Complex LatticeTerm::evaluate(const GammaField& g) const {
  Complex v(sign);
  for (const auto& f : factors) {
    switch (f.kind) {
      case LatticeFactor::Kind::gamma:
        v *= g.gamma(f.row, f.col);
        break;
      case LatticeFactor::Kind::gamma_bar:
        v *= std::conj(g.gamma(f.row, f.col));
        break;
      case LatticeFactor::Kind::dee:
        v *= g.dee(f.row, f.col);
        break;
    }
  }
  return v;
}

std::vector<LatticeTerm> lattice_expand(Index k, Index j) {
  if (!(k < j)) throw ValidationError("lattice expansion needs k < j");
  if (j - k > kMaxLatticeLength)
    throw ValidationError("lattice expansion limited to j - k <= " +
                          std::to_string(kMaxLatticeLength));
  const auto factors = factor_positions(k, j);
  const Index side = j - k + 1;
  const Index steps = factors.size();

  // reach[t][i]: starting in row i before factor t, the corner is reachable.
  std::vector<std::vector<char>> reach(steps + 1, std::vector<char>(side, 0));
  reach[steps][0] = 1;
  for (Index t = steps; t-- > 0;) {
    const Index p = factors[t].pos;
    for (Index i = 0; i < side; ++i)
      reach[t][i] = (i == p || i == p + 1) ? (reach[t + 1][p] || reach[t + 1][p + 1])
                                           : reach[t + 1][i];
  }

  std::vector<LatticeTerm> terms;
  LatticeTerm current;
  auto walk = [&](auto&& self, Index t, Index state) -> void {
    if (t == steps) {
      terms.push_back(current);
      return;
    }
    const auto& f = factors[t];
    if (state != f.pos && state != f.pos + 1) {
      self(self, t + 1, state);
      return;
    }
    for (Index next : {f.pos, f.pos + 1}) {
      if (!reach[t + 1][next]) continue;
      LatticeFactor sym{LatticeFactor::Kind::dee, f.row, f.col};
      int flip = 1;
      if (state == f.pos && next == f.pos) {
        sym.kind = LatticeFactor::Kind::gamma;
      } else if (state == f.pos + 1 && next == f.pos + 1) {
        sym.kind = LatticeFactor::Kind::gamma_bar;
        flip = -1;
      }
      current.factors.push_back(sym);
      current.sign *= flip;
      self(self, t + 1, next);
      current.sign *= flip;
      current.factors.pop_back();
    }
  };
  walk(walk, 0, 0);
  return terms;
}

std::uint64_t catalan(unsigned l) {
  if (l > 35) throw ValidationError("catalan(" + std::to_string(l) + ") exceeds 64 bits");
  unsigned __int128 c = 1;
  // C_{n+1} = C_n * 2(2n+1) / (n+2), exact at every step.
  for (unsigned n = 0; n < l; ++n) c = c * 2 * (2 * n + 1) / (n + 2);
  return static_cast<std::uint64_t>(c);
}

}  // namespace szego
