#include "doctest.h"
#include "support.hpp"
#include "szego/classical.hpp"
#include "szego/random.hpp"
#include "szego/schur.hpp"
#include "szego/triangular.hpp"

using namespace szego;

namespace {

TriangularArray random_array(std::uint64_t seed, Index n) {
  Rng rng(seed);
  TriangularArray a(n);
  for (Index k = 0; k < n; ++k)
    for (Index j = 0; j <= k; ++j) a.at(k, j) = rng.disk(1.0) + (k == j ? 2.0 : 0.0);
  return a;
}

}  // namespace

TEST_SUITE("triangular_algebra") {
  TEST_CASE("structural zeros and bounds") {
    TriangularArray a(3);
    CHECK(a(0, 2) == Complex{});
    CHECK_THROWS_AS(a.at(0, 2), ValidationError);
    CHECK_THROWS_AS(a(3, 0), ValidationError);
  }

  TEST_CASE("multiplication is associative with the identity as unit") {
    const auto a = random_array(1, 6), b = random_array(2, 6), c = random_array(3, 6);
    const auto i = TriangularArray::identity(6);
    CHECK(max_deviation(multiply(a, i), a, 6) == 0.0);
    CHECK(max_deviation(multiply(multiply(a, b), c), multiply(a, multiply(b, c)), 6) < 1e-13);
    CHECK_THROWS_AS(multiply(a, random_array(4, 5)), ValidationError);
  }

  TEST_CASE("inverse") {
    const auto a = random_array(5, 8);
    CHECK(max_deviation(multiply(a, invert(a)), TriangularArray::identity(8), 8) < 1e-13);
    TriangularArray z = TriangularArray::identity(3);
    z.at(1, 1) = 0.0;
    try {
      invert(z);
      FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
      CHECK(*e.first() == 1);
    }
  }

  TEST_CASE("sections of products are exact") {
    const auto a = random_array(6, 10), b = random_array(7, 10);
    const auto full = multiply(a, b);
    const auto part = multiply(a.leading(4), b.leading(4));
    CHECK(max_deviation(full, part, 4) == 0.0);
  }

  TEST_CASE("exact arrays") {
    RationalTriangularArray a = RationalTriangularArray::identity(3);
    a.at(1, 0) = Rational(1, 2);
    a.at(2, 1) = Rational(2, 3);
    a.at(2, 2) = 3;
    const auto p = multiply(a, invert(a));
    for (Index k = 0; k < 3; ++k)
      for (Index j = 0; j <= k; ++j) CHECK(p(k, j) == Rational(k == j ? 1 : 0));
  }

  TEST_CASE("spectral factor trivial cases") {
    const auto id = spectral_factor(MomentKernel(4, [](Index a, Index b) { return Complex(a == b); }), 4);
    CHECK(max_deviation(id.theta, TriangularArray::identity(4), 4) == 0.0);
    const auto diag = spectral_factor(MomentKernel(3, [](Index a, Index b) { return Complex(a == b ? 4.0 * (a + 1) : 0.0); }), 3);
    CHECK(diag.theta(2, 2).real() == doctest::Approx(std::sqrt(12.0)));
  }

  TEST_CASE("spectral factor reproduces the kernel") {
    const auto k = random_kernel(3, 12);
    const auto f = spectral_factor(k, 12);
    double worst = 0.0;
    for (Index a = 0; a < 12; ++a)
      for (Index b = 0; b < 12; ++b) {
        Complex v{};
        for (Index l = 0; l < 12; ++l) v += std::conj(f.theta(l, a)) * f.theta(l, b);
        worst = std::max(worst, std::abs(v - k(a, b)));
      }
    CHECK(worst < 1e-10);
    for (Index a = 0; a < 12; ++a) CHECK(f.theta(a, a).real() > 0.0);
    CHECK(dominance_margin(k, f.theta, 6) > -1e-10);
  }

  TEST_CASE("diagonal of the factor against the d product") {
    const auto g = testing::decaying_field(48);
    const auto k = reconstruct_moments(g, 48);
    const auto f = spectral_factor(k, 48);
    for (Index r = 0; r < 4; ++r) {
      double p = g.diag(r);
      for (Index j = r + 1; j < 48; ++j) p *= g.dee(r, j) * g.dee(r, j);
      CHECK(f.theta(r, r).real() == doctest::Approx(std::sqrt(p)).epsilon(1e-12));
    }
    CHECK(f.stabilization.max_deviation < 1e-12);
  }

  TEST_CASE("phi sharp inverse diagonal identity") {
    const auto g = testing::decaying_field(30);
    const auto t = build_polys(g, 10, 5);
    for (Index n = 0; n <= 10; ++n) {
      const auto inv = invert(embed_phi(t, n, true, 6));
      for (Index r = 0; r < 6; ++r) {
        double p = std::sqrt(g.diag(r));
        for (Index q = 1; q <= n; ++q) p *= g.dee(r, r + q);
        CHECK(std::abs(inv(r, r).real() - p) < 1e-10);
      }
    }
  }

  TEST_CASE("convergence report with zero field") {
    const GammaField g(std::vector<double>(20, 1.0), [](Index, Index) { return Complex{}; });
    const auto k = reconstruct_moments(g, 20);
    const auto r = convergence_report(g, k, 10, 4);
    for (const auto& row : r.rows) {
      CHECK(row.inv_sharp_dev == 0.0);
      CHECK(row.phi_sup == (row.n < 4 ? 1.0 : 0.0));
    }
  }

  TEST_CASE("parallel and serial convergence reports agree") {
    const auto g = testing::decaying_field(30);
    const auto k = reconstruct_moments(g, 30);
    const auto a = convergence_report(g, k, 20, 6);
    const auto b = serial::convergence_report(g, k, 20, 6);
    REQUIRE(a.rows.size() == b.rows.size());
    for (Index i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].phi_sup == b.rows[i].phi_sup);
      CHECK(a.rows[i].inv_sharp_dev == b.rows[i].inv_sharp_dev);
    }
    CHECK(a.szego_class == SzegoClass::szego);
  }

  TEST_CASE("csv and json") {
    CHECK(triangular_csv(TriangularArray::identity(2)) == "k,j,re,im\n0,0,1,0\n1,0,0,0\n1,1,1,0\n");
    ConvergenceReport r;
    r.rows.push_back({0, 1.0, 0.5});
    CHECK(convergence_json(r).find("\"phi_sup\": 1.0") != std::string::npos);
  }
}
