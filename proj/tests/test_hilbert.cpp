#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cideal/errors.hpp"
#include "cideal/hilbert.hpp"
#include "cideal/verify.hpp"
#include "support.hpp"

using namespace cideal;
using testing::ideal;

TEST_CASE("complete intersection and maximal ideal square") {
  auto I = ideal({"x^2", "y^2"});
  auto fit = e_coefficients(I);
  CHECK(fit.e == std::vector<std::int64_t>{4, 0, 0});
  CHECK(fit.degree == 2);
  for (int n = 0; n < 5; ++n) CHECK(hilbert_samuel_value(I, n) == std::vector<std::int64_t>{4, 12, 24, 40, 60}[n]);
  CHECK(e_coefficients(ideal({"x^2", "x*y", "y^2"})).e == std::vector<std::int64_t>{4, 1, 0});
  CHECK(assoc_graded_value(I, 0) == 4);
  CHECK(assoc_graded_value(I, 3) == 16);
}

TEST_CASE("e-coefficients match the brute-force oracle") {
  std::mt19937 rng(21);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (int trial = 0; trial < 15; ++trial) {
      std::uniform_int_distribution<int> e(1, d == 3 ? 3 : 5);
      std::vector<ExponentVec> gens;
      for (std::size_t j = 0; j < d; ++j) {
        ExponentVec v(d, 0);
        v[j] = e(rng);
        gens.push_back(v);
      }
      for (int k = 0; k < 3; ++k) {
        ExponentVec v(d);
        for (auto& x : v) x = e(rng) - 1;
        gens.push_back(v);
      }
      auto I = normalize(gens, RingContext::standard(d));
      if (I.is_unit()) continue;
      const auto g = testing::to_gens(I);
      CHECK(e_coefficients(I).e == oracle::e_coefficients(g));
      const auto hs = oracle::hilbert_samuel(g, 6);
      for (int n = 0; n <= 6; ++n) CHECK(hilbert_samuel_value(I, n) == hs[n]);
    }
  }
}

TEST_CASE("fitting finds late-starting polynomials") {
  // Agrees with (n+1)^2 only from n = 3 on.
  LengthSequence seq{0, {5, 0, 7, 16, 25, 36, 49, 64, 81}};
  auto fit = fit_integer_polynomial(seq, 2, 2);
  CHECK(fit.degree == 2);
  CHECK(fit.window_start == 3);
  for (int n = 3; n < 9; ++n) CHECK(fit.evaluate(n) == (n + 1) * (n + 1));
}

TEST_CASE("fitting the zero polynomial and constants") {
  auto zero = fit_integer_polynomial({0, {3, 1, 0, 0, 0, 0, 0}}, 2, 2);
  CHECK(zero.degree == -1);
  auto constant = fit_integer_polynomial({0, {3, 2, 2, 2, 2, 2}}, 2, 2);
  CHECK(constant.degree == 0);
  CHECK(constant.evaluate(100) == 2);
}

TEST_CASE("fitting without a stable window") {
  LengthSequence seq{0, {1, 2, 4, 8, 16, 32, 64}};
  CHECK_THROWS_AS(fit_integer_polynomial(seq, 2, 2), NoStableWindow);
}

TEST_CASE("hilbert caps and errors") {
  Limits limits;
  CHECK_THROWS_AS(hilbert_samuel_value(ideal({"x^2", "y^2"}), limits.max_hilbert_n + 1, limits), CapExceeded);
  CHECK_THROWS_AS(e_coefficients(ideal({"x^2", "x*y"})), NotMPrimary);
}

TEST_CASE("binomial polynomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(7, 0) == 1);
}

TEST_CASE("fit cache returns equal fits") {
  FitCache cache;
  auto I = ideal({"x^3", "x*y", "y^3"});
  CHECK(cache.get(I) == e_coefficients(I));
  CHECK(&cache.get(I) == &cache.get(I));
}

TEST_CASE("w-profile of a reduction") {
  auto p = w_profile(ideal({"x^2", "y^2"}), ideal({"x^2", "x*y", "y^2"}), 8);
  for (int n = 0; n <= 8; ++n) CHECK(p.lengths.at(n) == n + 1);
  REQUIRE(p.fit);
  CHECK(p.fitted_degree() == 1);
}
