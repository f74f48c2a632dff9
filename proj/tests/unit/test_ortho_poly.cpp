#include "doctest.h"
#include "support.hpp"
#include "szego/classical.hpp"
#include "szego/ortho_poly.hpp"
#include "szego/random.hpp"
#include "szego/schur.hpp"

using namespace szego;

TEST_SUITE("ortho_poly") {
  TEST_CASE("table coverage") {
    PolyTable t(3, 2, true);
    CHECK(t.levels_for(0) == 5);
    CHECK(t.levels_for(3) == 2);
    CHECK(t.covers(2, 3));
    CHECK_FALSE(t.covers(3, 3));
    CHECK_THROWS_AS(t.phi(3, 3), ValidationError);
    PolyTable plain(2, 0, false);
    CHECK_THROWS_AS(plain.phi_sharp(0, 0), ValidationError);
  }

  TEST_CASE("zero field gives monomials") {
    const GammaField g(std::vector<double>(6, 4.0), [](Index, Index) { return Complex{}; });
    const auto t = build_polys(g, 3, 2);
    CHECK(t.a(3, 1, 3) == Complex(0.5));
    CHECK(t.a(3, 1, 0) == Complex{});
    CHECK(t.b(3, 1, 0) == Complex(0.5));
  }

  TEST_CASE("one step by hand") {
    const GammaField g({1.0, 1.0}, [](Index, Index) { return Complex(0.6); });
    const auto t = build_polys(g, 1, 0);
    // phi_1 = (X - 0.6) / 0.8, phi^#_1 = (1 - 0.6 X) / 0.8
    CHECK(t.a(1, 0, 0).real() == doctest::Approx(-0.75));
    CHECK(t.a(1, 0, 1).real() == doctest::Approx(1.25));
    CHECK(t.b(1, 0, 1).real() == doctest::Approx(-0.75));
  }

  TEST_CASE("recurrence matches Gram-Schmidt on the reconstructed kernel") {
    const auto g = random_field(21, 8);
    const auto k = reconstruct_moments(g, 8);
    const auto rec = build_polys(g, 7, 0);
    const auto gs = gram_schmidt_polys(k);
    for (Index n = 0; n <= 7; ++n)
      for (Index l = 0; l + n < 8; ++l)
        for (Index c = 0; c <= n; ++c) CHECK(std::abs(rec.a(n, l, c) - gs.a(n, l, c)) < 1e-11);
  }

  TEST_CASE("orthonormality against the kernel on every level") {
    const auto g = random_field(4, 10);
    const auto k = reconstruct_moments(g, 10);
    const auto t = build_polys(g, 5, 4);
    for (Index l = 0; l <= 4; ++l) CHECK(orthonormality_defect(t, k, l, 6) < 1e-11);
  }

  TEST_CASE("parallel and serial tables agree exactly") {
    const auto g = random_field(9, 12);
    const auto a = build_polys(g, 6, 5);
    const auto b = serial::build_polys(g, 6, 5);
    for (Index n = 0; n <= 6; ++n)
      for (Index l = 0; l <= a.levels_for(n); ++l)
        for (Index c = 0; c <= n; ++c) {
          CHECK(a.a(n, l, c) == b.a(n, l, c));
          CHECK(a.b(n, l, c) == b.b(n, l, c));
        }
  }

  TEST_CASE("phi sharp at zero is the inverse d product") {
    const auto g = random_field(2, 9);
    const auto t = build_polys(g, 5, 3);
    for (Index l = 0; l <= 3; ++l)
      for (Index n = 0; n <= 5; ++n)
        CHECK(std::abs(t.b(n, l, 0) - phi_sharp_at_zero(g, n, l)) < 1e-12 * phi_sharp_at_zero(g, n, l));
  }

  TEST_CASE("gamma recovery from the polynomial table") {
    const auto g = random_field(13, 9);
    const auto t = build_polys(g, 8, 0);
    CHECK(testing::max_gamma_diff(recover_gamma(t, g.diag()), g) < 1e-12);
  }

  TEST_CASE("bordered determinant form, exact") {
    const auto h = hilbert_kernel_exact(5);
    const auto p = poly_by_determinant(h, 2, 0);
    // phi_2 = sqrt(5)(6x^2 - 6x + 1): squares 5, 180, 180 with signs +, -, +
    CHECK(p.signed_square(0) == Rational(5));
    CHECK(p.signed_square(1) == Rational(-180));
    CHECK(p.signed_square(2) == Rational(180));
    const auto f = p.to_float();
    CHECK(f[1] == doctest::Approx(-6 * std::sqrt(5.0)));
  }

  TEST_CASE("bordered form matches the float Gram-Schmidt route") {
    const auto g = random_field(8, 7, 0.7, false);
    const auto k = reconstruct_moments(g, 7);
    const auto exact = poly_by_determinant(to_rational(k), 4, 2);
    const auto fl = poly_by_determinant(k, 4, 2);
    const auto ef = exact.to_float();
    for (Index c = 0; c <= 4; ++c) CHECK(std::abs(ef[c] - fl[c].real()) < 1e-10);
  }

  TEST_CASE("derivatives and evaluation") {
    const std::vector<Complex> p{1.0, -2.0, 0.0, 4.0};
    const auto d1 = derivative(p, 1);
    REQUIRE(d1.size() == 3);
    CHECK(d1[0] == Complex(-2.0));
    CHECK(d1[2] == Complex(12.0));
    CHECK(derivative(p, 4).empty());
    CHECK(evaluate(p, Complex(2.0)) == Complex(29.0));
  }

  TEST_CASE("insufficient field") {
    const auto g = random_field(1, 5);
    CHECK_THROWS_AS(build_polys(g, 4, 1), ValidationError);
  }
}
