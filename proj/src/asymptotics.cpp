#include "szego/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "szego/io.hpp"
#include "szego/ortho_poly.hpp"
#include "szego/schur.hpp"

namespace szego {

void summarize(LimitReport& report, Index window) {
  report.window = std::min(window, report.sequence.size());
  if (report.window == 0) return;
  double lo = INFINITY, hi = -INFINITY, sum = 0.0;
  for (Index i = report.sequence.size() - report.window; i < report.sequence.size(); ++i) {
    const double v = report.sequence[i].second;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    sum += v;
  }
  report.limit_estimate = sum / static_cast<double>(report.window);
  report.residual = hi - lo;
}

namespace {

// s_rr prod_{p=1..n} d^2_{r,r+p}
double dee_partial(const GammaField& g, Index r, Index n) {
  double v = g.diag(r);
  for (Index p = 1; p <= n; ++p) {
    const double d = g.dee(r, r + p);
    v *= d * d;
  }
  return v;
}

}  // namespace

DetRatio det_ratio(const MomentKernel& k, Index r, Index q) {
  if (!(r < q) || q >= k.size()) throw ValidationError("det_ratio needs r < q < size");
  return det_ratio(k, extract_gamma(k.leading(q + 1)), r, q);
}

DetRatio det_ratio(const MomentKernel& k, const GammaField& g, Index r, Index q) {
  if (!(r < q) || q >= k.size() || q >= g.size())
    throw ValidationError("det_ratio needs r < q within both kernel and field");
  DetRatio out;
  const double outer = determinant(k, r, q);
  const double inner = determinant(k, r + 1, q);
  if (!(inner > 0.0) || !(outer > 0.0))
    throw NumericalError("not strictly positive: singular section in det_ratio", r, q);
  out.determinant_ratio = outer / inner;
  const auto t = build_polys(g, q - r, r);
  out.via_phi_sharp = 1.0 / std::norm(t.b(q - r, r, 0));
  out.via_dee = dee_partial(g, r, q - r);
  return out;
}

LimitReport first_limit(const GammaField& g, Index r, Index horizon, Index window) {
  if (horizon == 0 || r + horizon >= g.size())
    throw ValidationError("first_limit horizon exceeds the parameter range");
  LimitReport rep;
  rep.kind = "first";
  rep.r = r;
  double v = g.diag(r);
  for (Index p = 1; p <= horizon; ++p) {
    const double d = g.dee(r, r + p);
    v *= d * d;
    rep.sequence.emplace_back(r + p, v);
  }
  summarize(rep, window);
  const auto cls = szego_class_report(g, horizon);
  rep.degenerate = cls.rows.at(r).classification == SzegoClass::degenerate;
  return rep;
}

StrongLimitReport strong_limit(const GammaField& g, Index n_max, Index horizon, Index window) {
  const Index big_j = horizon == 0 ? n_max + 32 : horizon;
  if (big_j <= n_max || big_j >= g.size())
    throw ValidationError("strong_limit needs n_max < horizon < field size (horizon " +
                          std::to_string(big_j) + ", field size " + std::to_string(g.size()) +
                          ")");
  StrongLimitReport out;
  out.horizon = big_j;

  // log g_l truncated at the horizon
  std::vector<double> log_g(n_max + 1);
  for (Index l = 0; l <= n_max; ++l) log_g[l] = std::log(dee_partial(g, l, big_j - l));

  const auto k = reconstruct_moments(g, n_max + 1);
  const auto pivots = linalg::ldl_pivots(k.section(0, n_max));
  if (pivots.size() != n_max + 1 || !(pivots.back() > 0.0))
    throw NumericalError("not strictly positive: reconstructed section is not positive definite",
                         0, pivots.size() - 1);

  out.determinant_route.kind = "strong_det";
  out.dee_route.kind = "strong_dee";
  double log_det = 0.0, log_gprod = 0.0;
  for (Index n = 0; n <= n_max; ++n) {
    log_det += std::log(pivots[n]);
    log_gprod += log_g[n];
    out.determinant_route.sequence.emplace_back(n, std::exp(log_det - log_gprod));
    double log_cross = 0.0;
    for (Index kk = 0; kk <= n; ++kk)
      for (Index j = n + 1; j <= big_j; ++j) log_cross += 2.0 * std::log(g.dee(kk, j));
    out.dee_route.sequence.emplace_back(n, std::exp(-log_cross));
  }
  summarize(out.determinant_route, window);
  summarize(out.dee_route, window);
  out.inv_l = out.dee_route.sequence.back().second;
  for (Index l = 0; l <= n_max; ++l) {
    const double d = g.dee(l, big_j);
    out.tail_bound = std::max(out.tail_bound, 1.0 - d * d);
  }
  return out;
}

AngleDet angle_det(const MomentKernel& k, Index r, Index l, Index q) {
  if (!(r <= l && l < q) || q >= k.size()) throw ValidationError("angle_det needs r <= l < q < size");
  return angle_det(k, extract_gamma(k.leading(q + 1)), r, l, q);
}

AngleDet angle_det(const MomentKernel& k, const GammaField& g, Index r, Index l, Index q) {
  if (!(r <= l && l < q) || q >= k.size() || q >= g.size())
    throw ValidationError("angle_det needs r <= l < q within both kernel and field");
  AngleDet out;
  const double a = determinant(k, r, q);
  const double b = determinant(k, r, l);
  const double c = determinant(k, l + 1, q);
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    throw NumericalError("not strictly positive: singular section in angle_det", r, q);
  out.via_determinants = a / (b * c);
  double v = 1.0;
  for (Index kk = r; kk <= l; ++kk)
    for (Index j = l + 1; j <= q; ++j) {
      const double d = g.dee(kk, j);
      v *= d * d;
    }
  out.via_dee = v;
  return out;
}

std::string limits_csv(const std::vector<LimitReport>& reports) {
  std::string out = "kind,r,n_or_q,value,estimate,residual\n";
  for (const auto& rep : reports)
    for (const auto& [n, v] : rep.sequence)
      out += rep.kind + "," + std::to_string(rep.r) + "," + std::to_string(n) + "," + io::num(v) +
             "," + io::num(rep.limit_estimate) + "," + io::num(rep.residual) + "\n";
  return out;
}

}  // namespace szego
