#include "doctest.h"
#include "support.hpp"
#include "szego/classical.hpp"
#include "szego/io.hpp"
#include "szego/random.hpp"

using namespace szego;

TEST_SUITE("io") {
  TEST_CASE("kernel json round trip is exact") {
    const auto k = random_kernel(4, 5);
    const auto back = io::kernel_from_json(io::kernel_to_json(k));
    CHECK(testing::max_kernel_diff(k, back) == 0.0);
  }

  TEST_CASE("gamma json round trip is exact") {
    const auto g = random_field(6, 6);
    const auto back = io::gamma_from_json(io::gamma_to_json(g));
    CHECK(testing::max_gamma_diff(g, back) == 0.0);
    CHECK(back.diag() == g.diag());
  }

  TEST_CASE("kernel schema violations") {
    CHECK_THROWS_AS(io::kernel_from_json("{"), ValidationError);
    CHECK_THROWS_AS(io::kernel_from_json(R"({"size": 2, "entries": [[0,0,1,0],[1,1,1,0]]})"), ValidationError);
    CHECK_THROWS_AS(io::kernel_from_json(R"({"size": 1, "entries": [[0,0,1,0],[0,0,1,0]]})"), ValidationError);
    CHECK_THROWS_AS(io::kernel_from_json(R"({"size": 1, "entries": [[0,1,1,0]]})"), ValidationError);
    CHECK_THROWS_AS(io::kernel_from_json(R"({"entries": []})"), ValidationError);
  }

  TEST_CASE("gamma schema violations") {
    CHECK_THROWS_AS(io::gamma_from_json(R"({"diag": [1, 1], "gamma": []})"), ValidationError);
    CHECK_THROWS_AS(io::gamma_from_json(R"({"diag": [1, 1], "gamma": [[0,1,1.5,0]]})"), ValidationError);
    CHECK_THROWS_AS(io::gamma_from_json(R"({"diag": [1, -1], "gamma": [[0,1,0.5,0]]})"), ValidationError);
  }

  TEST_CASE("exact gamma json") {
    const auto text = io::gamma_to_json(extract_gamma(hilbert_kernel_exact(3)));
    CHECK(text.find("[0,1,1,\"3/4\"]") != std::string::npos);
    CHECK(text.find("[0,2,-1,\"5/9\"]") != std::string::npos);
  }

  TEST_CASE("tree json") {
    const auto g = io::tree_from_json(R"({"N": 2, "gamma": [["1", 0.5, 0], ["21", 0, 0.25]]})", 2);
    CHECK(g.gamma(Word::parse("1", 2)) == Complex(0.5));
    CHECK(g.gamma(Word::parse("21", 2)) == Complex(0, 0.25));
    CHECK(g.gamma(Word::parse("2", 2)) == Complex{});
    CHECK_THROWS_AS(io::tree_from_json(R"({"N": 2, "gamma": [["111", 0.5, 0]]})", 2), ValidationError);
    CHECK_THROWS_AS(io::tree_from_json(R"({"N": 2, "gamma": [["e", 0.5, 0]]})", 2), ValidationError);
    CHECK_THROWS_AS(io::tree_from_json(R"({"N": 2, "gamma": [["1", 0.5, 0], ["1", 0.1, 0]]})", 2), ValidationError);
  }

  TEST_CASE("poly outputs") {
    const GammaField g({4.0, 4.0}, [](Index, Index) { return Complex{}; });
    const auto t = build_polys(g, 1, 0);
    CHECK(io::poly_csv(t, false) == "n,l,k,re,im\n0,0,0,0.5,0\n1,0,0,0,0\n1,0,1,0.5,0\n");
    CHECK(io::poly_human(t, true) == "phi# n=0 l=0: 0.5\nphi# n=1 l=0: 0.5\n");
    const GammaField h({1.0, 1.0}, [](Index, Index) { return Complex(0.6); });
    CHECK(io::poly_human(build_polys(h, 1, 0), false).find("1.25*x - 0.75") != std::string::npos);
  }

  TEST_CASE("number format") {
    CHECK(io::num(0.1) == "0.10000000000000001");
    CHECK(io::num(2.0) == "2");
  }
}
