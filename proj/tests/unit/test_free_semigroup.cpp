#include "doctest.h"
#include "szego/free_semigroup.hpp"
#include "szego/random.hpp"
#include "szego/schur.hpp"

using namespace szego;

namespace {

Word w2(const std::string& s) { return Word::parse(s, 2); }

TreeGammaField random_tree(std::uint64_t seed, unsigned n, Index depth, double radius) {
  Rng rng(seed);
  TreeGammaField g(n, depth);
  for (Index r = 1; r < word_count(n, depth); ++r) g.set(Word::unrank(n, r), rng.disk(radius));
  return g;
}

}  // namespace

TEST_SUITE("free_semigroup") {
  TEST_CASE("graded order and ranks") {
    const std::vector<std::string> order{"e", "1", "2", "11", "12", "21", "22", "111"};
    for (Index r = 0; r < order.size(); ++r) {
      CHECK(Word::unrank(2, r).to_string() == order[r]);
      CHECK(w2(order[r]).rank() == r);
    }
    CHECK(w2("21").ell() == 6);
    CHECK(Word::parse("13", 3).rank() == 6);
    CHECK(w2("2").succ() == w2("11"));
    CHECK(w2("11").pred() == w2("2"));
    CHECK_THROWS_AS(w2("e").pred(), ValidationError);
    CHECK(w2("2") < w2("11"));
    CHECK(w2("12") < w2("21"));
    CHECK_THROWS_AS(w2("13"), ValidationError);
  }

  TEST_CASE("succ and rank are consistent bijections") {
    for (unsigned n = 1; n <= 3; ++n) {
      Word w(n);
      for (Index r = 0; r < word_count(n, 4); ++r) {
        CHECK(w.rank() == r);
        CHECK(Word::unrank(n, r) == w);
        const Word s = w.succ();
        CHECK(s.pred() == w);
        w = s;
      }
    }
    CHECK(word_count(2, 3) == 15);
    CHECK(words_of_length(3, 2) == 9);
  }

  TEST_CASE("series products") {
    const auto x1 = NCSeries::monomial(w2("1"), 3);
    const auto x2 = NCSeries::monomial(w2("2"), 3);
    CHECK(nc_multiply(x1, x2, 3)[w2("12")] == Complex(1));
    CHECK(nc_multiply(x1, x2, 3)[w2("21")] == Complex{});
    const auto one = NCSeries::constant(2, 3, 1.0);
    const auto p = nc_multiply(one + x1, one - x1, 3);
    CHECK(p[w2("e")] == Complex(1));
    CHECK(p[w2("1")] == Complex{});
    CHECK(p[w2("11")] == Complex(-1));
    CHECK(nc_multiply(p, one, 3).coeffs() == p.coeffs());
  }

  TEST_CASE("series inverses") {
    const auto one = NCSeries::constant(2, 4, 1.0);
    const auto x1 = NCSeries::monomial(w2("1"), 4);
    const auto inv = nc_invert(one - x1, 4);
    for (const char* w : {"e", "1", "11", "111", "1111"}) CHECK(inv[w2(w)] == Complex(1));
    CHECK(inv[w2("2")] == Complex{});
    const auto y = nc_invert(one + x1 + NCSeries::monomial(w2("2"), 4), 2);
    CHECK(y[w2("1")] == Complex(-1));
    CHECK(y[w2("21")] == Complex(1));
    CHECK(nc_invert(NCSeries::constant(2, 2, 4.0), 2)[w2("e")] == Complex(0.25));
    CHECK_THROWS_AS(nc_invert(x1, 2), NumericalError);

    Rng rng(5);
    NCSeries x(3, 3);
    for (Index r = 0; r < x.coeffs().size(); ++r) x[Word::unrank(3, r)] = rng.disk(1.0) + (r == 0 ? 2.0 : 0.0);
    const auto xi = nc_invert(x, 3);
    const auto l = nc_multiply(x, xi, 3), r = nc_multiply(xi, x, 3);
    for (Index i = 0; i < l.coeffs().size(); ++i) {
      CHECK(std::abs(l.at_rank(i) - (i == 0 ? 1.0 : 0.0)) < 1e-12);
      CHECK(std::abs(r.at_rank(i) - (i == 0 ? 1.0 : 0.0)) < 1e-12);
    }
  }

  TEST_CASE("triangular embedding reverses products and inverses agree") {
    Rng rng(8);
    NCSeries x(2, 3), y(2, 3);
    for (Index r = 0; r < x.coeffs().size(); ++r) {
      x[Word::unrank(2, r)] = rng.disk(1.0) + (r == 0 ? 1.5 : 0.0);
      y[Word::unrank(2, r)] = rng.disk(1.0);
    }
    const auto lhs = multiply(embed_series(x), embed_series(y));
    const auto rhs = embed_series(nc_multiply(y, x, 3));
    CHECK(max_deviation(lhs, rhs, lhs.size()) < 1e-14);
    const auto via_array = column_series(invert(embed_series(x)), 2, 3);
    const auto via_series = nc_invert(x, 3);
    for (Index r = 0; r < via_series.coeffs().size(); ++r)
      CHECK(std::abs(via_array.at_rank(r) - via_series.at_rank(r)) < 1e-13);
  }

  TEST_CASE("zero tree field gives the identity kernel") {
    const auto k = stationary_kernel(TreeGammaField(2, 2), 2);
    for (Index a = 0; a < k.size(); ++a)
      for (Index b = 0; b < k.size(); ++b) CHECK(k(a, b) == Complex(a == b));
  }

  TEST_CASE("single parameter tree kernel by hand") {
    const double a = 0.3;
    TreeGammaField g(2, 3);
    g.set(w2("1"), a);
    const auto k = stationary_kernel(g, 3);
    CHECK(k(0, w2("1").rank()).real() == doctest::Approx(a));
    CHECK(k(w2("2").rank(), w2("21").rank()).real() == doctest::Approx(a));
    CHECK(std::abs(k(0, w2("2").rank())) < 1e-15);
    CHECK(k(0, w2("11").rank()).real() == doctest::Approx(a * a));
  }

  TEST_CASE("induced field follows prefixes") {
    TreeGammaField g(2, 2);
    g.set(w2("2"), 0.5);
    g.set(w2("12"), -0.25);
    const auto f = induced_field(g, 2);
    CHECK(f.gamma(w2("1").rank(), w2("12").rank()) == Complex(0.5));
    CHECK(f.gamma(0, w2("12").rank()) == Complex(-0.25));
    CHECK(f.gamma(w2("2").rank(), w2("12").rank()) == Complex{});
  }

  TEST_CASE("stationarity of random complex tree kernels") {
    const auto g = random_tree(3, 2, 3, 0.6);
    const auto s = check_stationarity(stationary_kernel(g, 3), 2, 3);
    CHECK(s.max_shift_deviation < 1e-12);
    CHECK(s.max_off_support < 1e-12);
  }

  TEST_CASE("exact stationarity") {
    ExactTreeField g(2, 3);
    g.set(w2("1"), {Rational(3, 5), Rational(4, 5)});
    g.set(w2("2"), {Rational(-5, 13), Rational(12, 13)});
    g.set(w2("12"), {Rational(8, 17), Rational(15, 17)});
    g.set(w2("211"), {Rational(-7, 25), Rational(24, 25)});
    const auto k = stationary_kernel(g, 3);
    CHECK(check_stationarity(k, 2, 3).violations == 0);
    CHECK_THROWS_AS(g.set(w2("1"), {Rational(1, 2), Rational(1, 2)}), ValidationError);
  }

  TEST_CASE("nc polynomials") {
    TreeGammaField zero(2, 2);
    const auto p0 = nc_polys(zero, 2);
    for (Index r = 0; r < p0.phi.size(); ++r) {
      CHECK(p0.phi[r].at_rank(r) == Complex(1));
      CHECK(p0.phi_sharp[r][w2("e")] == Complex(1));
    }
    TreeGammaField one(2, 2);
    one.set(w2("1"), 0.6);
    const auto p1 = nc_polys(one, 2);
    CHECK(p1.phi[1][w2("e")].real() == doctest::Approx(-0.75));
    CHECK(p1.phi[1][w2("1")].real() == doctest::Approx(1.25));

    const auto g = random_tree(12, 2, 3, 0.5);
    const auto p = nc_polys(g, 3);
    CHECK(nc_orthonormality_defect(p, stationary_kernel(g, 3)) < 1e-10);
    // support on words up to the index word
    for (Index r = 0; r < p.phi.size(); ++r)
      for (Index c = r + 1; c < p.phi.size(); ++c) CHECK(p.phi[r].at_rank(c) == Complex{});
  }

  TEST_CASE("nc limits, single parameter") {
    TreeGammaField g(2, 3);
    g.set(w2("1"), 0.5);
    const auto rep = nc_limits(g, 3);
    CHECK(rep.g == doctest::Approx(0.75));
    CHECK(rep.l == doctest::Approx(0.75));
    for (const auto& row : rep.rows) {
      CHECK(row.ratio == doctest::Approx(0.75));
      CHECK(row.normalized == doctest::Approx(row.section_value));
    }
  }

  TEST_CASE("nc limits, zero field") {
    const auto rep = nc_limits(TreeGammaField(2, 2), 2);
    CHECK(rep.g == 1.0);
    CHECK(rep.l == 1.0);
    for (const auto& row : rep.rows) {
      CHECK(row.ratio == doctest::Approx(1.0));
      CHECK(row.series_deviation < 1e-15);
    }
    CHECK(rep.theta[w2("e")] == Complex(1));
  }

  TEST_CASE("nc limits reject a degenerate product") {
    TreeGammaField g(2, 1);
    g.set(w2("1"), 0.999999999999);
    CHECK_THROWS_AS(nc_limits(g, 1, 1, 1e-3), ValidationError);
  }

  TEST_CASE("series csv") {
    const auto s = NCSeries::monomial(w2("2"), 1, Complex(0.5, -1));
    CHECK(series_csv(s) == "word,re,im\ne,0,0\n1,0,0\n2,0.5,-1\n");
  }
}
