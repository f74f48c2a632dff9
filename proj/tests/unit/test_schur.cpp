#include <fstream>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "szego/classical.hpp"
#include "szego/random.hpp"
#include "szego/schur.hpp"

using namespace szego;

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) lines.push_back(l);
  return lines;
}

// Binomial route to the Catalan numbers, independent of the recurrence.
std::uint64_t catalan_by_binomial(unsigned l) {
  long double b = 1;
  for (unsigned i = 1; i <= l; ++i) b = b * (l + i) / i;
  return static_cast<std::uint64_t>(std::llround(b / (l + 1)));
}

}  // namespace

TEST_SUITE("schur_transform") {
  TEST_CASE("rotation block is unitary") {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
      const auto b = rotation_block(rng.disk(0.99));
      const auto p = linalg::multiply(b, linalg::adjoint(b));
      CHECK(std::abs(p(0, 0) - 1.0) < 1e-14);
      CHECK(std::abs(p(0, 1)) < 1e-14);
      CHECK(std::abs(p(1, 1) - 1.0) < 1e-14);
    }
    CHECK_THROWS_AS(rotation_block(Complex(1.0)), ValidationError);
  }

  TEST_CASE("s01 and s02 by hand") {
    const GammaField g({1.0, 4.0, 9.0}, [](Index k, Index j) {
      if (k == 0 && j == 1) return Complex(0.3, 0.1);
      if (k == 0 && j == 2) return Complex(-0.2, 0.0);
      return Complex(0.0, 0.4);
    });
    const auto k = reconstruct_moments(g, 3);
    CHECK(std::abs(k(0, 1) - 1.0 * Complex(0.3, 0.1) * 2.0) < 1e-15);
    const Complex s02 = g.gamma(0, 1) * g.gamma(1, 2) + g.dee(0, 1) * g.gamma(0, 2) * g.dee(1, 2);
    CHECK(std::abs(k(0, 2) - s02 * 3.0) < 1e-15);
    CHECK(k(2, 2).real() == 9.0);
  }

  TEST_CASE("zero field reconstructs the diagonal kernel") {
    const GammaField g({2.0, 3.0, 5.0}, [](Index, Index) { return Complex{}; });
    const auto k = reconstruct_moments(g, 3);
    CHECK(k(0, 1) == Complex{});
    CHECK(k(1, 1) == Complex(3.0));
  }

  TEST_CASE("parallel and serial reconstruction agree") {
    const auto g = random_field(11, 10);
    CHECK(testing::max_kernel_diff(reconstruct_moments(g, 10), serial::reconstruct_moments(g, 10)) < 1e-14);
    CHECK_THROWS_AS(reconstruct_moments(g, 11), ValidationError);
  }

  TEST_CASE("extraction inverts reconstruction") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto g = random_field(seed, 9);
      const auto k = reconstruct_moments(g, 9);
      CHECK(testing::max_gamma_diff(extract_gamma(k), g) < 1e-11);
      CHECK(testing::max_gamma_diff(serial::extract_gamma(k), g) < 1e-11);
    }
  }

  TEST_CASE("extraction rejects an indefinite kernel with the offending section") {
    MomentKernel k(3, [](Index a, Index b) { return a == b ? Complex(1) : Complex(a + b == 1 ? 2.0 : 0.0); });
    try {
      extract_gamma(k);
      FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
      REQUIRE(e.last());
      CHECK(*e.last() == 1);
    }
  }

  TEST_CASE("exact round trip through Pythagorean parameters") {
    const std::vector<ExactRotationField::Pair> pairs{{Rational(3, 5), Rational(4, 5)},
                                                      {Rational(-5, 13), Rational(12, 13)},
                                                      {Rational(8, 17), Rational(15, 17)},
                                                      {0, 1}};
    Index next = 0;
    const ExactRotationField g({1, Rational(1, 2), 2, Rational(3, 2), 1},
                               [&](Index, Index) { return pairs[next++ % pairs.size()]; });
    const auto k = reconstruct_moments(g, 5);
    const auto back = extract_gamma(k);
    for (Index a = 0; a < 5; ++a)
      for (Index b = a + 1; b < 5; ++b) {
        const auto& p = g.param(a, b);
        CHECK(back.entry(a, b).gamma_sq == p.gamma * p.gamma);
        CHECK(back.entry(a, b).sign == sgn(p.gamma));
      }
    CHECK(back.diag(1) == Rational(1, 4));
  }

  TEST_CASE("exact rotation product is orthogonal") {
    const ExactRotationField g({1, 1, 1, 1}, [](Index, Index) {
      return ExactRotationField::Pair{Rational(3, 5), Rational(4, 5)};
    });
    const auto u = rotation_product(g, 0, 3);
    const auto p = linalg::multiply(u, linalg::adjoint(u));
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 4; ++j) CHECK(p(i, j) == Rational(i == j ? 1 : 0));
  }

  TEST_CASE("catalan numbers") {
    for (unsigned l = 0; l <= 30; ++l) CHECK(catalan(l) == catalan_by_binomial(l));
    CHECK(catalan(35) == 3116285494907301262ULL);
    CHECK_THROWS_AS(catalan(36), ValidationError);
  }

  TEST_CASE("lattice terms sum to the reconstructed moment") {
    const auto g = random_field(5, 9);
    const auto k = reconstruct_moments(g, 9);
    for (Index a = 0; a < 3; ++a)
      for (Index b = a + 1; b <= a + 6 && b < 9; ++b) {
        Complex sum{};
        const auto terms = lattice_expand(a, b);
        for (const auto& t : terms) sum += t.evaluate(g);
        const Complex s = k(a, b) / std::sqrt(g.diag(a) * g.diag(b));
        CHECK(std::abs(sum - s) < 1e-13);
        CHECK(terms.size() == catalan(unsigned(b - a)));
      }
  }

  TEST_CASE("lattice terms are distinct and respect the pair order") {
    const auto terms = lattice_expand(1, 5);
    std::set<std::string> seen;
    for (const auto& t : terms) {
      CHECK(seen.insert(t.to_string()).second);
      for (Index i = 1; i < t.factors.size(); ++i) {
        const auto& p = t.factors[i - 1];
        const auto& q = t.factors[i];
        CHECK(std::make_pair(p.row, p.col) < std::make_pair(q.row, q.col));
      }
    }
  }

  TEST_CASE("lattice golden files") {
    for (Index j = 1; j <= 3; ++j) {
      const auto golden = read_lines(testing::golden_path("lattice_0_" + std::to_string(j) + ".txt"));
      std::multiset<std::string> expected(golden.begin(), golden.end());
      std::multiset<std::string> got;
      for (const auto& t : lattice_expand(0, j)) got.insert(t.to_string());
      CHECK(got == expected);
    }
  }

  TEST_CASE("lattice term text round trip") {
    for (const auto& t : lattice_expand(0, 4)) CHECK(LatticeTerm::parse(t.to_string()) == t);
    CHECK_THROWS_AS(LatticeTerm::parse("d(0,1)"), ValidationError);
    CHECK_THROWS_AS(LatticeTerm::parse("+ q(0,1)"), ValidationError);
    CHECK_THROWS_AS(lattice_expand(0, kMaxLatticeLength + 1), ValidationError);
  }
}
