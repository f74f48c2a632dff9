#include "szego/triangular.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include "json.hpp"

#include "szego/io.hpp"

namespace szego {

double max_deviation(const TriangularArray& a, const TriangularArray& b, Index window) {
  if (window > a.size() || window > b.size()) throw ValidationError("window larger than array");
  double worst = 0.0;
  for (Index k = 0; k < window; ++k)
    for (Index j = 0; j <= k; ++j) worst = std::max(worst, std::abs(a(k, j) - b(k, j)));
  return worst;
}

double max_entry(const TriangularArray& a, Index window) {
  if (window > a.size()) throw ValidationError("window larger than array");
  double worst = 0.0;
  for (Index k = 0; k < window; ++k)
    for (Index j = 0; j <= k; ++j) worst = std::max(worst, std::abs(a(k, j)));
  return worst;
}

TriangularArray embed_phi(const PolyTable& t, Index n, bool reversed, Index size) {
  if (size > 0 && !t.covers(n, size - 1))
    throw ValidationError("polynomial table does not cover degree " + std::to_string(n) +
                          " on levels below " + std::to_string(size));
  TriangularArray a(size);
  for (Index j = 0; j < size; ++j) {
    const auto p = reversed ? t.phi_sharp(n, j) : t.phi(n, j);
    for (Index k = j; k < size && k - j <= n; ++k) a.at(k, j) = p[k - j];
  }
  return a;
}

namespace {

// Theta with K = Theta^H Theta: reverse the indices, take the ordinary
// Cholesky factor, reverse back and adjoin.
TriangularArray factor_section(const MomentKernel& k, Index size) {
  linalg::Matrix<Complex> rev(size, size);
  for (Index i = 0; i < size; ++i)
    for (Index j = 0; j < size; ++j) rev(i, j) = k(size - 1 - i, size - 1 - j);
  linalg::Matrix<Complex> l;
  try {
    l = linalg::cholesky_lower(rev);
  } catch (const NumericalError& e) {
    const Index bad = size - 1 - e.last().value_or(0);
    throw NumericalError("not strictly positive: section " + std::to_string(bad) + ".." +
                             std::to_string(size - 1) + " is not positive definite",
                         bad, size - 1);
  }
  // U = P L P is upper triangular; Theta = U^H.
  TriangularArray theta(size);
  for (Index r = 0; r < size; ++r)
    for (Index c = 0; c <= r; ++c)
      theta.at(r, c) = std::conj(l(size - 1 - c, size - 1 - r));
  return theta;
}

}  // namespace

SpectralFactor spectral_factor(const MomentKernel& k, Index size) {
  if (size == 0 || size > k.size())
    throw ValidationError("factor size " + std::to_string(size) + " outside kernel of size " +
                          std::to_string(k.size()));
  SpectralFactor f;
  f.theta = factor_section(k, size);
  f.stabilization.size = size;
  f.stabilization.half = size / 2;
  f.stabilization.quarter = size / 4;
  if (f.stabilization.quarter > 0) {
    const auto half = factor_section(k, f.stabilization.half);
    f.stabilization.max_deviation = max_deviation(f.theta, half, f.stabilization.quarter);
  }
  return f;
}

double dominance_margin(const MomentKernel& k, const TriangularArray& theta, Index window) {
  if (window == 0 || window > theta.size() || window > k.size())
    throw ValidationError("window outside kernel or factor");
  Eigen::MatrixXcd m(window, window);
  for (Index r = 0; r < window; ++r)
    for (Index c = 0; c < window; ++c) {
      Complex v = k(r, c);
      for (Index l = 0; l < window; ++l) v -= std::conj(theta(l, r)) * theta(l, c);
      m(r, c) = v;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

namespace {

void check_convergence_args(const GammaField& g, const MomentKernel& k, Index n_max,
                            Index window) {
  if (window == 0) throw ValidationError("window must be positive");
  if (k.size() < n_max + window)
    throw ValidationError("kernel of size " + std::to_string(k.size()) + " is smaller than n_max + window");
  if (g.size() < n_max + window)
    throw ValidationError("field of size " + std::to_string(g.size()) + " is smaller than n_max + window");
}

ConvergenceRow convergence_row(const PolyTable& t, const TriangularArray& theta, Index n,
                               Index window) {
  ConvergenceRow row;
  row.n = n;
  row.phi_sup = max_entry(embed_phi(t, n, false, window), window);
  const auto inv = invert(embed_phi(t, n, true, window));
  row.inv_sharp_dev = max_deviation(inv, theta, window);
  return row;
}

void finish(ConvergenceReport& r, const GammaField& g, Index window, double tol) {
  r.window = window;
  r.tol = tol;
  const Index horizon = g.size() - window;
  r.szego_class = horizon >= 2 ? szego_class_report(g, horizon).overall : SzegoClass::inconclusive;
  r.converged = !r.rows.empty() && r.rows.back().phi_sup < tol && r.rows.back().inv_sharp_dev < tol;
}

}  // namespace

ConvergenceReport convergence_report(const GammaField& g, const MomentKernel& k, Index n_max,
                                     Index window, double tol) {
  check_convergence_args(g, k, n_max, window);
  const auto t = build_polys(g, n_max, window - 1);
  const auto theta = spectral_factor(k, n_max + window).theta;
  ConvergenceReport r;
  r.rows.resize(n_max + 1);
#pragma omp parallel for schedule(dynamic)
  for (long n = 0; n <= static_cast<long>(n_max); ++n)
    r.rows[n] = convergence_row(t, theta, static_cast<Index>(n), window);
  finish(r, g, window, tol);
  return r;
}

namespace serial {

ConvergenceReport convergence_report(const GammaField& g, const MomentKernel& k, Index n_max,
                                     Index window, double tol) {
  check_convergence_args(g, k, n_max, window);
  const auto t = serial::build_polys(g, n_max, window - 1);
  const auto theta = spectral_factor(k, n_max + window).theta;
  ConvergenceReport r;
  for (Index n = 0; n <= n_max; ++n) r.rows.push_back(convergence_row(t, theta, n, window));
  finish(r, g, window, tol);
  return r;
}

}  // namespace serial

std::string triangular_csv(const TriangularArray& a) {
  std::string out = "k,j,re,im\n";
  for (Index k = 0; k < a.size(); ++k)
    for (Index j = 0; j <= k; ++j) {
      const Complex v = a(k, j);
      out += std::to_string(k) + "," + std::to_string(j) + "," + io::num(v.real()) + "," +
             io::num(v.imag()) + "\n";
    }
  return out;
}

std::string convergence_json(const ConvergenceReport& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n}, {"phi_sup", row.phi_sup}, {"inv_sharp_dev", row.inv_sharp_dev}});
  nlohmann::ordered_json j;
  j["window"] = r.window;
  j["szego_class"] = to_string(r.szego_class);
  j["converged"] = r.converged;
  j["tol"] = r.tol;
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace szego
