#include "szego/kernel.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace szego {

RationalKernel to_rational(const MomentKernel& k) {
  for (Index i = 0; i < k.size(); ++i)
    for (Index j = i; j < k.size(); ++j)
      if (k(i, j).imag() != 0.0)
        throw ValidationError("exact backend needs a real kernel; entry (" + std::to_string(i) +
                              "," + std::to_string(j) + ") is complex");
  return RationalKernel(k.size(), [&](Index i, Index j) { return Rational(k(i, j).real()); },
                        k.index_kind());
}

MomentKernel to_float(const RationalKernel& k) {
  return MomentKernel(k.size(), [&](Index i, Index j) { return Complex(k(i, j).get_d(), 0.0); },
                      k.index_kind());
}

namespace {

template <class T>
ValidationReport validate_impl(const BasicKernel<T>& k) {
  ValidationReport report;
  for (Index i = 0; i < k.size(); ++i) {
    if constexpr (std::is_same_v<T, Complex>) {
      if (k(i, i).imag() != 0.0)
        report.violations.push_back("Hermitian: diagonal entry " + std::to_string(i) +
                                    " has a nonzero imaginary part");
    }
    if (!(ScalarTraits<T>::real(k(i, i)) > 0))
      report.violations.push_back("diagonal entry " + std::to_string(i) + " is not positive");
  }
  if (k.size() == 0) return report;
  // Leading minors are running products of the LDL pivots.
  const auto pivots = linalg::ldl_pivots(k.section(0, k.size() - 1));
  RealOf<T> minor(1);
  for (Index n = 0; n < pivots.size(); ++n) {
    minor *= pivots[n];
    if (!(pivots[n] > 0)) {
      report.first_nonpositive_section = n;
      if constexpr (std::is_same_v<T, Complex>)
        report.first_nonpositive_value = minor;
      else
        report.first_nonpositive_value = minor.get_d();
      std::ostringstream msg;
      msg << "strict positivity: D_{0," << n << "} = " << *report.first_nonpositive_value
          << " <= 0";
      report.violations.push_back(msg.str());
      break;
    }
  }
  return report;
}

void check_range(Index size, Index r, Index q) {
  if (r > q || q >= size)
    throw ValidationError("determinant section (" + std::to_string(r) + "," + std::to_string(q) +
                          ") outside truncation " + std::to_string(size));
}

template <class T>
BasicDeterminantTable<RealOf<T>> table_by_pivots(const BasicKernel<T>& k) {
  const Index m = k.size();
  BasicDeterminantTable<RealOf<T>> table(m);
#pragma omp parallel for schedule(dynamic) if (m > 16 && std::is_same_v<T, Complex>)
  for (Index r = 0; r < m; ++r) {
    const auto pivots = linalg::ldl_pivots(k.section(r, m - 1));
    RealOf<T> running(1);
    for (Index q = r; q < m; ++q) {
      const Index i = q - r;
      if (i < pivots.size() && pivots[i] > 0) {
        running *= pivots[i];
        table(r, q) = running;
      } else {
        // Past an indefinite step: fall back to direct elimination.
        table(r, q) = ScalarTraits<T>::real(linalg::determinant(k.section(r, q)));
      }
    }
  }
  return table;
}

}  // namespace

ValidationReport validate_kernel(const MomentKernel& k) { return validate_impl(k); }
ValidationReport validate_kernel(const RationalKernel& k) { return validate_impl(k); }

double determinant(const MomentKernel& k, Index r, Index q) {
  check_range(k.size(), r, q);
  return linalg::determinant(k.section(r, q)).real();
}

Rational determinant(const RationalKernel& k, Index r, Index q) {
  check_range(k.size(), r, q);
  return linalg::determinant(k.section(r, q));
}

DeterminantTable determinant_table(const MomentKernel& k) { return table_by_pivots(k); }
RationalDeterminantTable determinant_table(const RationalKernel& k) { return table_by_pivots(k); }

namespace serial {
DeterminantTable determinant_table(const MomentKernel& k) {
  DeterminantTable table(k.size());
  for (Index r = 0; r < k.size(); ++r)
    for (Index q = r; q < k.size(); ++q) table(r, q) = szego::determinant(k, r, q);
  return table;
}
}  // namespace serial

std::string determinant_table_csv(const DeterminantTable& t) {
  std::string out = "r,q,value\n";
  char buf[64];
  for (Index r = 0; r < t.size(); ++r)
    for (Index q = r; q < t.size(); ++q) {
      std::snprintf(buf, sizeof buf, "%.17g", t(r, q));
      out += std::to_string(r) + "," + std::to_string(q) + "," + buf + "\n";
    }
  return out;
}

std::string to_string(SzegoClass c) {
  switch (c) {
    case SzegoClass::szego:
      return "szego";
    case SzegoClass::degenerate:
      return "degenerate";
    case SzegoClass::inconclusive:
      break;
  }
  return "inconclusive";
}

SzegoClassReport szego_class_report(const GammaField& g, Index horizon, double tol) {
  if (horizon == 0 || horizon >= g.size())
    throw ValidationError("horizon " + std::to_string(horizon) +
                          " exceeds the available parameter range (field size " +
                          std::to_string(g.size()) + ")");
  SzegoClassReport report;
  bool all_szego = true;
  bool any_degenerate = false;
  for (Index k = 0; k + horizon < g.size(); ++k) {
    SzegoRowReport row;
    row.row = k;
    row.partial.reserve(horizon + 1);
    double p = g.diag(k);
    row.partial.push_back(p);
    for (Index h = 1; h <= horizon; ++h) {
      const double d = g.dee(k, k + h);
      p *= d * d;
      row.partial.push_back(p);
    }
    const double last = row.partial[horizon];
    const double mid = row.partial[horizon / 2];
    if (last <= tol || last <= 0.5 * mid)
      row.classification = SzegoClass::degenerate;
    else if ((mid - last) / mid < tol)
      row.classification = SzegoClass::szego;
    else
      row.classification = SzegoClass::inconclusive;
    all_szego = all_szego && row.classification == SzegoClass::szego;
    any_degenerate = any_degenerate || row.classification == SzegoClass::degenerate;
    report.rows.push_back(std::move(row));
  }
  report.overall = any_degenerate ? SzegoClass::degenerate
                   : all_szego    ? SzegoClass::szego
                                  : SzegoClass::inconclusive;
  return report;
}

}  // namespace szego
