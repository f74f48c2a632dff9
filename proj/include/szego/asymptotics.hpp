#pragma once

// Determinant-ratio limit theorems, evaluated numerically.

#include <string>
#include <utility>
#include <vector>

#include "szego/gamma_field.hpp"
#include "szego/kernel.hpp"

namespace szego {

struct LimitReport {
  std::string kind;
  Index r = 0;
  /// (n or q, value)
  std::vector<std::pair<Index, double>> sequence;
  /// Mean of the trailing window.
  double limit_estimate = 0.0;
  /// max - min over the trailing window.
  double residual = 0.0;
  Index window = 0;
  /// Set when the underlying row fails the Szego condition.
  bool degenerate = false;
};

/// Fills limit_estimate/residual from the last `window` sequence values.
void summarize(LimitReport& report, Index window);

struct DetRatio {
  /// D_{r,q} / D_{r+1,q} from the kernel.
  double determinant_ratio = 0.0;
  /// 1 / |phi^#_{q-r}(0,r)|^2 from the recurrence polynomials.
  double via_phi_sharp = 0.0;
  /// s_rr prod_{j=1..q-r} d^2_{r,r+j}
  double via_dee = 0.0;
};

DetRatio det_ratio(const MomentKernel& k, Index r, Index q);
/// Same with the kernel's parameters already extracted.
DetRatio det_ratio(const MomentKernel& k, const GammaField& g, Index r, Index q);

/// q -> s_rr prod_{j=1..q-r} d^2_{r,r+j}, q = r+1..r+horizon. Converges to
/// g_r = |Theta(r,r)|^2 in the Szego class.
LimitReport first_limit(const GammaField& g, Index r, Index horizon, Index window = 5);

struct StrongLimitReport {
  /// n -> D_{0,n} / prod_{l<=n} g_l, D from the reconstructed kernel.
  LimitReport determinant_route;
  /// n -> 1 / prod_{0<=k<=n<j<=J} d^2_{k,j}
  LimitReport dee_route;
  Index horizon = 0;
  /// 1/L with L = prod_{0<=k<=n_max<j<=J} d^2_{k,j}.
  double inv_l = 0.0;
  /// Largest 1 - s_ll prod_{j<=J-l} d^2 / s_ll prod_{j<=J-l-1} d^2 over rows, a
  /// proxy for the truncation of g_l at the horizon.
  double tail_bound = 0.0;
};

/// Needs g.size() > horizon; horizon defaults to n_max + 32.
StrongLimitReport strong_limit(const GammaField& g, Index n_max, Index horizon = 0,
                               Index window = 5);

struct AngleDet {
  /// D_{r,q} / (D_{r,l} D_{l+1,q})
  double via_determinants = 0.0;
  /// prod_{r<=k<=l<j<=q} d^2_{k,j}
  double via_dee = 0.0;
};

AngleDet angle_det(const MomentKernel& k, Index r, Index l, Index q);
AngleDet angle_det(const MomentKernel& k, const GammaField& g, Index r, Index l, Index q);

/// CSV rows (kind, r, n_or_q, value, estimate, residual) with header.
std::string limits_csv(const std::vector<LimitReport>& reports);

}  // namespace szego
