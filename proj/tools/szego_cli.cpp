// szego: batch front end for the kernel / parameter / polynomial toolkit.
//
// Exit status: 0 ok, 2 invalid input, 3 numerical failure (a singular or
// indefinite section). Errors are reported as one JSON object on stderr.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "szego/asymptotics.hpp"
#include "szego/classical.hpp"
#include "szego/free_semigroup.hpp"
#include "szego/io.hpp"
#include "szego/ortho_poly.hpp"
#include "szego/random.hpp"
#include "szego/schur.hpp"
#include "szego/triangular.hpp"

using namespace szego;
using ordered = nlohmann::ordered_json;

namespace {

struct Common {
  std::string precision = "float64";
  std::optional<double> tol;
  std::string out;
  std::uint64_t seed = 1;

  bool exact() const { return precision == "rational"; }
  double tolerance() const { return tol.value_or(exact() ? 1e-10 : 1e-8); }
};

void emit(const Common& c, const std::string& name, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(c.out);
  io::write_file((std::filesystem::path(c.out) / name).string(), text);
}

void add_common(CLI::App* app, Common& c, bool with_precision = false) {
  if (with_precision)
    app->add_option("--precision", c.precision, "float64 or rational")
        ->check(CLI::IsMember({"float64", "rational"}))
        ->capture_default_str();
  app->add_option("--tol", c.tol, "tolerance (default 1e-8 float64, 1e-10 rational)");
  app->add_option("--out", c.out, "write files into this directory instead of stdout");
  app->add_option("--seed", c.seed, "seed for randomized runs")->capture_default_str();
}

GammaField decaying_field(Index size) {
  return GammaField(std::vector<double>(size, 1.0),
                    [](Index k, Index j) { return Complex(0.5 * std::pow(3.0, -double(j - k))); });
}

// sqrt of a nonnegative rational when it is rational.
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  return Rational(sqrt(num), sqrt(den));
}

ExactTreeField exact_tree_from_json(const std::string& text, Index depth) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("N") || !j.contains("gamma"))
    throw ValidationError("tree JSON needs \"N\" and \"gamma\"");
  const unsigned n = j["N"].get<unsigned>();
  ExactTreeField g(n, depth);
  for (const auto& row : j["gamma"]) {
    if (!row.is_array() || row.size() < 2 || !row[0].is_string())
      throw ValidationError("tree gamma rows must be [\"word\", value, ...]");
    if (row.size() == 3 && (!row[2].is_number() || row[2].get<double>() != 0.0))
      throw ValidationError("rational mode needs real parameters");
    Rational gamma;
    if (row[1].is_string())
      gamma = Rational(row[1].get<std::string>());
    else if (row[1].is_number())
      gamma = Rational(row[1].get<double>());
    else
      throw ValidationError("gamma value must be a number or \"p/q\"");
    gamma.canonicalize();
    const auto dee = rational_sqrt(Rational(1) - gamma * gamma);
    if (!dee)
      throw ValidationError("rational mode needs 1 - gamma^2 to be a rational square (gamma " +
                            gamma.get_str() + ")");
    const Word w = Word::parse(row[0].get<std::string>(), n);
    if (w.empty() || w.length() > depth)
      throw ValidationError("word " + w.to_string() + " outside depth " + std::to_string(depth));
    g.set(w, {gamma, *dee});
  }
  return g;
}

// ---------------------------------------------------------------------------

int run_extract(const Common& c, const std::string& in) {
  const auto k = io::kernel_from_json(io::read_file(in));
  if (c.exact())
    emit(c, "gamma.json", io::gamma_to_json(extract_gamma(to_rational(k))));
  else
    emit(c, "gamma.json", io::gamma_to_json(extract_gamma(k)));
  return 0;
}

int run_reconstruct(const Common& c, const std::string& in, std::optional<Index> size) {
  const auto g = io::gamma_from_json(io::read_file(in));
  emit(c, "kernel.json", io::kernel_to_json(reconstruct_moments(g, size.value_or(g.size()))));
  return 0;
}

int run_polys(const Common& c, const std::string& in, Index degree, Index levels, bool reversed,
              const std::string& format) {
  const auto g = io::gamma_from_json(io::read_file(in));
  const auto t = build_polys(g, degree, levels);
  if (format == "human")
    emit(c, "polys.txt", io::poly_human(t, reversed));
  else
    emit(c, "polys.csv", io::poly_csv(t, reversed));
  return 0;
}

int run_lattice(const Common& c, Index k, Index j) {
  const auto terms = lattice_expand(k, j);
  const auto expected = catalan(static_cast<unsigned>(j - k));
  std::string text = io::lattice_text(terms);
  text += "# terms=" + std::to_string(terms.size()) + " catalan(" + std::to_string(j - k) +
          ")=" + std::to_string(expected) + (terms.size() == expected ? " ok" : " MISMATCH") + "\n";
  emit(c, "lattice.txt", text);
  return terms.size() == expected ? 0 : 3;
}

int run_factor(const Common& c, const std::string& in, std::optional<Index> size,
               std::optional<Index> n_max, Index window) {
  const auto k = io::kernel_from_json(io::read_file(in));
  const Index m = size.value_or(k.size());
  const auto f = spectral_factor(k, m);
  ordered report;
  report["size"] = f.stabilization.size;
  report["half"] = f.stabilization.half;
  report["quarter"] = f.stabilization.quarter;
  report["max_deviation"] = f.stabilization.max_deviation;
  report["dominance_margin"] = dominance_margin(k, f.theta, std::min<Index>(window, m));
  emit(c, "theta.csv", triangular_csv(f.theta));
  if (c.out.empty())
    std::cerr << report.dump() << "\n";
  else
    emit(c, "stabilization.json", report.dump(2) + "\n");
  if (n_max) {
    const auto g = extract_gamma(k);
    const auto conv = convergence_report(g, k, *n_max, window, c.tolerance());
    emit(c, "convergence.json", convergence_json(conv));
  }
  return 0;
}

int run_limits(const Common& c, const std::string& in, const std::string& kind, Index r,
               Index horizon, Index n_max, Index window) {
  const auto g = io::gamma_from_json(io::read_file(in));
  std::vector<LimitReport> reports;
  if (kind == "first" || kind == "all") reports.push_back(first_limit(g, r, horizon, window));
  if (kind == "strong" || kind == "all") {
    const auto s = strong_limit(g, n_max, horizon > n_max ? horizon : 0, window);
    reports.push_back(s.determinant_route);
    reports.push_back(s.dee_route);
  }
  emit(c, "limits.csv", limits_csv(reports));
  return 0;
}

int run_tree(const Common& c, const std::string& in, Index depth, Index coeff_depth) {
  const std::string text = io::read_file(in);
  ordered report;
  if (c.exact()) {
    const auto g = exact_tree_from_json(text, depth);
    const auto k = stationary_kernel(g, depth);
    const auto s = check_stationarity(k, g.alphabet(), depth);
    report["precision"] = "rational";
    report["stationarity_violations"] = s.violations;
    ordered entries = ordered::array();
    for (Index b = 0; b < k.size(); ++b)
      entries.push_back({Word::unrank(g.alphabet(), b).to_string(), k(0, b).get_str()});
    report["first_row"] = entries;
    emit(c, "tree.json", report.dump(2) + "\n");
    return s.violations == 0 ? 0 : 3;
  }
  const auto g = io::tree_from_json(text, depth);
  const auto k = stationary_kernel(g, depth);
  const auto s = check_stationarity(k, g.alphabet(), depth);
  const auto polys = nc_polys(g, depth);
  const auto lim = nc_limits(g, depth, coeff_depth, c.tolerance() * 1e-4);
  report["precision"] = "float64";
  report["N"] = g.alphabet();
  report["depth"] = depth;
  report["max_shift_deviation"] = s.max_shift_deviation;
  report["max_off_support"] = s.max_off_support;
  report["orthonormality_defect"] = nc_orthonormality_defect(polys, k);
  report["g"] = lim.g;
  report["L"] = lim.l;
  ordered rows = ordered::array();
  for (const auto& r : lim.rows)
    rows.push_back({{"tau", r.tau.to_string()},
                    {"ratio", r.ratio},
                    {"normalized", r.normalized},
                    {"section_value", r.section_value},
                    {"series_deviation", r.series_deviation},
                    {"phi_low_max", r.phi_low_max}});
  report["rows"] = rows;
  ordered theta = ordered::array();
  for (Index w = 0; w < lim.theta.coeffs().size(); ++w) {
    const Complex v = lim.theta.at_rank(w);
    theta.push_back({Word::unrank(g.alphabet(), w).to_string(), v.real(), v.imag()});
  }
  report["theta"] = theta;
  emit(c, "tree.json", report.dump(2) + "\n");
  return 0;
}

int demo_hilbert(const Common& c, Index max) {
  if (max < 1) throw ValidationError("--max must be at least 1");
  std::string csv;
  bool ok = true;
  if (c.exact()) {
    const auto g = extract_gamma(hilbert_kernel_exact(max + 1));
    csv = "k,l,sign,gamma_sq,closed_sign,closed_gamma_sq,dee_sq,closed_dee_sq,match\n";
    for (Index k = 0; k < max; ++k)
      for (Index l = 1; k + l <= max; ++l) {
        const auto& e = g.entry(k, k + l);
        const auto h = hilbert_gamma_exact(k, l);
        const Rational closed_dee_sq = h.dee * h.dee;
        const bool match =
            e.sign == h.sign && e.gamma_sq == h.gamma_sq && g.dee_sq(k, k + l) == closed_dee_sq;
        ok = ok && match;
        csv += std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(e.sign) + "," +
               e.gamma_sq.get_str() + "," + std::to_string(h.sign) + "," + h.gamma_sq.get_str() +
               "," + g.dee_sq(k, k + l).get_str() + "," + closed_dee_sq.get_str() + "," +
               (match ? "1" : "0") + "\n";
      }
  } else {
    const auto g = extract_gamma(hilbert_kernel(max + 1));
    csv = "k,l,gamma,closed_gamma,dee,closed_dee,abs_err,match\n";
    for (Index k = 0; k < max; ++k)
      for (Index l = 1; k + l <= max; ++l) {
        const auto h = hilbert_gamma(k, l);
        const double gamma = g.gamma(k, k + l).real();
        const double err = std::abs(gamma - h.gamma);
        const bool match = err <= c.tolerance();
        ok = ok && match;
        csv += std::to_string(k) + "," + std::to_string(l) + "," + io::num(gamma) + "," +
               io::num(h.gamma) + "," + io::num(g.dee(k, k + l)) + "," + io::num(h.dee) + "," +
               io::num(err) + "," + (match ? "1" : "0") + "\n";
      }
  }
  emit(c, "hilbert.csv", csv);
  return ok ? 0 : 3;
}

int demo_legendre(const Common& c, Index degree) {
  std::vector<double> a, b;
  legendre_recurrence(degree, a, b);
  const auto three = three_term_polys(a, b, degree);
  const auto t = build_polys(hilbert_field(degree + 1), degree, 0);
  std::string csv = "n,k,recurrence,three_term,abs_err\n";
  bool ok = true;
  for (Index n = 0; n <= degree; ++n)
    for (Index k = 0; k <= n; ++k) {
      const double x = t.a(n, 0, k).real();
      const double err = std::abs(x - three[n][k]);
      ok = ok && err <= c.tolerance();
      csv += std::to_string(n) + "," + std::to_string(k) + "," + io::num(x) + "," +
             io::num(three[n][k]) + "," + io::num(err) + "\n";
    }
  emit(c, "legendre.csv", csv);
  return ok ? 0 : 3;
}

int demo_toeplitz(const Common& c, double alpha, Index size) {
  ToeplitzSpec spec;
  spec.verblunsky = {alpha};
  const auto k = toeplitz_kernel(spec, size);
  const auto g = extract_gamma(k);
  std::string csv = "k,j,s_re,s_im,gamma_re,gamma_im\n";
  for (Index a = 0; a < size; ++a)
    for (Index b = a + 1; b < size; ++b) {
      const Complex s = k(a, b);
      const Complex gm = g.gamma(a, b);
      csv += std::to_string(a) + "," + std::to_string(b) + "," + io::num(s.real()) + "," +
             io::num(s.imag()) + "," + io::num(gm.real()) + "," + io::num(gm.imag()) + "\n";
    }
  emit(c, "toeplitz.csv", csv);
  return 0;
}

int demo_roundtrip(const Common& c, Index size, Index count) {
  std::string csv = "seed,size,gamma_dev,kernel_dev\n";
  bool ok = true;
  for (Index i = 0; i < count; ++i) {
    const std::uint64_t seed = c.seed + i;
    const auto g = random_field(seed, size);
    const auto k = reconstruct_moments(g, size);
    const auto back = extract_gamma(k);
    const auto k2 = reconstruct_moments(back, size);
    double gdev = 0.0, kdev = 0.0;
    for (Index a = 0; a < size; ++a)
      for (Index b = a; b < size; ++b) {
        if (a < b) gdev = std::max(gdev, std::abs(g.gamma(a, b) - back.gamma(a, b)));
        kdev = std::max(kdev, std::abs(k(a, b) - k2(a, b)));
      }
    ok = ok && gdev <= c.tolerance() && kdev <= c.tolerance();
    csv += std::to_string(seed) + "," + std::to_string(size) + "," + io::num(gdev) + "," +
           io::num(kdev) + "\n";
  }
  emit(c, "roundtrip.csv", csv);
  return ok ? 0 : 3;
}

int demo_decaying(const Common& c, Index size) {
  emit(c, "gamma.json", io::gamma_to_json(decaying_field(size)));
  return 0;
}

void report_error(const char* kind, const std::string& msg, std::optional<Index> first = {},
                  std::optional<Index> last = {}) {
  ordered e;
  e["error"] = kind;
  e["message"] = msg;
  if (first && last) e["section"] = {*first, *last};
  std::cerr << e.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur parameters, orthogonal polynomials and Szego limits for positive kernels"};
  app.require_subcommand(1);
  Common c;
  std::string in;
  std::optional<Index> size, n_max;
  Index degree = 4, levels = 0, k = 0, j = 1, window = 8, r = 0, horizon = 40, depth = 3,
        coeff_depth = 2, count = 100, max = 8;
  double alpha = 0.5;
  bool reversed = false;
  std::string format = "csv", kind = "all";
  int status = 0;

  auto* extract = app.add_subcommand("extract", "kernel JSON -> gamma JSON");
  extract->add_option("input", in, "kernel JSON")->required();
  add_common(extract, c, true);

  auto* reconstruct = app.add_subcommand("reconstruct", "gamma JSON -> kernel JSON");
  reconstruct->add_option("input", in, "gamma JSON")->required();
  reconstruct->add_option("--size", size, "truncation (default: field size)");
  add_common(reconstruct, c);

  auto* polys = app.add_subcommand("polys", "coefficients of phi_n(X, l)");
  polys->add_option("input", in, "gamma JSON")->required();
  polys->add_option("--degree", degree)->capture_default_str();
  polys->add_option("--levels", levels, "highest level")->capture_default_str();
  polys->add_flag("--reversed", reversed, "emit phi^# instead of phi");
  polys->add_option("--format", format)->check(CLI::IsMember({"csv", "human"}))->capture_default_str();
  add_common(polys, c);

  auto* lattice = app.add_subcommand("lattice", "lattice-path terms of s_kj");
  lattice->add_option("--k", k)->capture_default_str();
  lattice->add_option("--j", j)->capture_default_str();
  add_common(lattice, c);

  auto* factor = app.add_subcommand("factor", "spectral factor Theta of a kernel");
  factor->add_option("input", in, "kernel JSON")->required();
  factor->add_option("--size", size, "section size (default: kernel size)");
  factor->add_option("--n-max", n_max, "also emit the convergence report up to this degree");
  factor->add_option("--window", window)->capture_default_str();
  add_common(factor, c);

  auto* limits = app.add_subcommand("limits", "first and strong limit sequences");
  limits->add_option("input", in, "gamma JSON")->required();
  limits->add_option("--kind", kind)->check(CLI::IsMember({"first", "strong", "all"}))->capture_default_str();
  limits->add_option("--r", r)->capture_default_str();
  limits->add_option("--horizon", horizon)->capture_default_str();
  Index nm = 20;
  limits->add_option("--n-max", nm)->capture_default_str();
  limits->add_option("--window", window)->capture_default_str();
  add_common(limits, c);

  auto* tree = app.add_subcommand("tree", "tree-stationary kernel and non-commutative limits");
  tree->add_option("input", in, "tree field JSON")->required();
  tree->add_option("--depth", depth)->capture_default_str();
  tree->add_option("--coeff-depth", coeff_depth)->capture_default_str();
  add_common(tree, c, true);

  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->require_subcommand(1);
  auto* hilbert = demo->add_subcommand("hilbert", "Hilbert matrix parameters vs closed form");
  hilbert->add_option("--max", max)->capture_default_str();
  add_common(hilbert, c, true);
  auto* legendre = demo->add_subcommand("legendre", "shifted Legendre polynomials, two routes");
  legendre->add_option("--degree", degree)->capture_default_str();
  add_common(legendre, c);
  auto* toeplitz = demo->add_subcommand("toeplitz", "Toeplitz kernel from one Verblunsky parameter");
  toeplitz->add_option("--alpha", alpha)->capture_default_str();
  Index tsize = 10;
  toeplitz->add_option("--size", tsize)->capture_default_str();
  add_common(toeplitz, c);
  auto* roundtrip = demo->add_subcommand("roundtrip", "seeded gamma -> K -> gamma sweep");
  Index rsize = 12;
  roundtrip->add_option("--size", rsize)->capture_default_str();
  roundtrip->add_option("--count", count)->capture_default_str();
  add_common(roundtrip, c);
  auto* decaying = demo->add_subcommand("decaying", "gamma JSON of the field 0.5 * 3^(k-j)");
  Index dsize = 64;
  decaying->add_option("--size", dsize)->capture_default_str();
  add_common(decaying, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("validation", e.what());
    return 2;
  }

  try {
    if (*extract) status = run_extract(c, in);
    else if (*reconstruct) status = run_reconstruct(c, in, size);
    else if (*polys) status = run_polys(c, in, degree, levels, reversed, format);
    else if (*lattice) status = run_lattice(c, k, j);
    else if (*factor) status = run_factor(c, in, size, n_max, window);
    else if (*limits) status = run_limits(c, in, kind, r, horizon, nm, window);
    else if (*tree) status = run_tree(c, in, depth, coeff_depth);
    else if (*hilbert) status = demo_hilbert(c, max);
    else if (*legendre) status = demo_legendre(c, degree);
    else if (*toeplitz) status = demo_toeplitz(c, alpha, tsize);
    else if (*roundtrip) status = demo_roundtrip(c, rsize, count);
    else if (*decaying) status = demo_decaying(c, dsize);
  } catch (const NumericalError& e) {
    report_error("numerical", e.what(), e.first(), e.last());
    return 3;
  } catch (const ValidationError& e) {
    report_error("validation", e.what());
    return 2;
  } catch (const std::exception& e) {
    report_error("validation", e.what());
    return 2;
  }
  return status;
}
