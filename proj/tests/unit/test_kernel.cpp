#include "doctest.h"
#include "support.hpp"
#include "szego/classical.hpp"
#include "szego/kernel.hpp"
#include "szego/random.hpp"

using namespace szego;

TEST_SUITE("core_kernel") {
  TEST_CASE("hermitian storage reflects the upper triangle") {
    MomentKernel k(3, [](Index a, Index b) { return Complex(double(a + 1), double(b) - double(a)); });
    CHECK(k(0, 2) == Complex(1, 2));
    CHECK(k(2, 0) == Complex(1, -2));
    CHECK_THROWS_AS(k(3, 0), ValidationError);
  }

  TEST_CASE("shifted and leading sections") {
    const auto k = hilbert_kernel(5);
    const auto s = k.shifted(2);
    CHECK(s.size() == 3);
    CHECK(s(0, 1) == k(2, 3));
    CHECK(k.leading(2).size() == 2);
  }

  TEST_CASE("validation reports the first nonpositive leading minor") {
    // [[1, 1], [1, 1]] is singular: D_{0,1} = 0.
    MomentKernel k(3, [](Index a, Index b) { return a < 2 && b < 2 ? Complex(1) : Complex(a == b); });
    const auto r = validate_kernel(k);
    CHECK_FALSE(r.valid());
    REQUIRE(r.first_nonpositive_section);
    CHECK(*r.first_nonpositive_section == 1);
  }

  TEST_CASE("nonreal diagonal is a Hermitian violation") {
    MomentKernel k(2, [](Index a, Index b) { return a == b ? Complex(1, a == 1 ? 0.5 : 0) : Complex(0); });
    const auto r = validate_kernel(k);
    CHECK_FALSE(r.valid());
    CHECK(r.violations.front().find("Hermitian") != std::string::npos);
  }

  TEST_CASE("hilbert determinants against the Cauchy closed form") {
    // det H_n = c_n^4 / c_{2n}, c_n = prod_{i<n} i!
    auto c = [](Index n) {
      mpz_class v = 1, f = 1;
      for (Index i = 1; i < n; ++i) {
        f *= i;
        v *= f;
      }
      return v;
    };
    const auto h = hilbert_kernel_exact(7);
    for (Index n = 1; n <= 7; ++n) {
      const mpz_class cn = c(n);
      Rational expected(cn * cn * cn * cn, c(2 * n));
      expected.canonicalize();
      CHECK(determinant(h, 0, n - 1) == expected);
    }
  }

  TEST_CASE("determinant table agrees with independent eliminations") {
    const auto k = random_kernel(7, 10);
    const auto fast = determinant_table(k);
    const auto ref = serial::determinant_table(k);
    for (Index r = 0; r < 10; ++r)
      for (Index q = r; q < 10; ++q) CHECK(fast(r, q) == doctest::Approx(ref(r, q)).epsilon(1e-10));
  }

  TEST_CASE("exact determinant table") {
    const auto h = hilbert_kernel_exact(5);
    const auto t = determinant_table(h);
    CHECK(t(0, 1) == Rational(1, 12));
    CHECK(t(1, 1) == Rational(1, 3));
    CHECK(t(2, 4) == determinant(h, 2, 4));
  }

  TEST_CASE("rational conversion is exact and rejects complex entries") {
    const auto h = hilbert_kernel(4);
    const auto q = to_rational(h);
    CHECK(q(1, 2).get_d() == h(1, 2).real());
    MomentKernel z(2, [](Index a, Index b) { return a == b ? Complex(1) : Complex(0, 0.1); });
    CHECK_THROWS_AS(to_rational(z), ValidationError);
  }

  TEST_CASE("szego class report") {
    const auto hil = szego_class_report(hilbert_field(40), 32);
    CHECK(hil.overall == SzegoClass::degenerate);
    // row 0 partials telescope to 1/(h+1)^2
    for (Index h = 0; h <= 32; ++h)
      CHECK(hil.rows[0].partial[h] == doctest::Approx(1.0 / double((h + 1) * (h + 1))));
    const auto dec = szego_class_report(testing::decaying_field(80), 64);
    CHECK(dec.overall == SzegoClass::szego);
    CHECK_THROWS_AS(szego_class_report(hilbert_field(10), 10), ValidationError);
  }

  TEST_CASE("determinant csv has a header") {
    const auto t = determinant_table(hilbert_kernel(2));
    CHECK(determinant_table_csv(t).rfind("r,q,value\n", 0) == 0);
  }
}
