#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cideal/closures.hpp"
#include "cideal/coeff.hpp"
#include "cideal/errors.hpp"
#include "cideal/verify.hpp"
#include "support.hpp"

using namespace cideal;
using testing::ideal;

TEST_CASE("chain of (x^2, y^2)") {
  auto I = ideal({"x^2", "y^2"});
  for (auto method : {ChainMethod::exhaustive, ChainMethod::atoms}) {
    auto c = coefficient_chain(I, method);
    REQUIRE(c.chain.size() == 3);
    CHECK(to_string(c.chain[0]) == "(x^2, x*y, y^2)");
    CHECK(c.chain[1] == I);
    CHECK(c.chain[2] == I);
    bool level_one = false;
    for (const auto& w : c.maximality_witnesses)
      if (w.level == 1) {
        level_one = true;
        CHECK(w.monomial == ExponentVec{1, 1});
        CHECK(w.mismatch_index == 1);
      }
    CHECK(level_one);
  }
}

TEST_CASE("chain of the maximal ideal is constant") {
  auto m = ideal({"x", "y"});
  auto c = coefficient_chain(m);
  for (const auto& J : c.chain) CHECK(J == m);
  CHECK(c.maximality_witnesses.empty());
}

TEST_CASE("lattice enumerates exactly the intermediate ideals") {
  auto I = ideal({"x^3", "y^3"});
  auto top = integral_closure(I).ideal;
  auto lattice = enumerate_intermediate(I, top);
  CHECK(lattice.gap().size() == 3);  // x^2y, xy^2, x^2y^2
  auto all = lattice.collect();
  // Up-sets of {x^2y, xy^2} plus x^2y^2 forced: 5 ideals.
  CHECK(all.size() == 5);
  for (const auto& J : all) {
    CHECK(is_subset(I, J));
    CHECK(is_subset(J, top));
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) CHECK_FALSE(all[a] == all[b]);
}

TEST_CASE("lattice cap") {
  Limits tight;
  tight.gap_cap = 2;
  auto I = ideal({"x^3", "y^3"});
  CHECK_THROWS_AS(enumerate_intermediate(I, integral_closure(I).ideal, tight), CapExceeded);
}

TEST_CASE("membership in E_i") {
  auto I = ideal({"x^2", "y^2"});
  auto J = ideal({"x^2", "x*y", "y^2"});
  CHECK(is_in_E(J, I, 0));
  CHECK_FALSE(is_in_E(J, I, 1));
  CHECK(is_in_E(I, I, 2));
  CHECK(is_in_E(I, I, 2, EVariant::E_prime));
  CHECK_THROWS_AS(is_in_E(I, J, 0), InclusionViolated);
  CHECK_THROWS_AS(is_in_E(J, I, 3), ValidationError);
  CHECK(members_of_E(I, 0).size() == 2);
  CHECK(members_of_E(I, 1).size() == 1);
}

TEST_CASE("coefficient ideals agree with the subset oracle") {
  for (const auto& I : random_corpus(31, 12, 2, 4)) {
    const auto top = integral_closure(I).ideal;
    if (gap_monomials(I, top).size() > 10) continue;
    for (int i = 0; i <= 2; ++i) {
      auto expected = oracle::coefficient_ideal(testing::to_gens(I), testing::to_gens(top), i);
      CHECK(coefficient_ideal(I, i, ChainMethod::exhaustive) == testing::from_gens(expected, I.ring_ptr()));
      CHECK(coefficient_ideal(I, i, ChainMethod::atoms) == testing::from_gens(expected, I.ring_ptr()));
    }
  }
}

TEST_CASE("chain invariants on a corpus") {
  for (std::size_t d : {2u, 3u}) {
    for (const auto& I : random_corpus(17, d == 2 ? 20 : 4, static_cast<int>(d), d == 2 ? 5 : 3)) {
      auto c = coefficient_chain(I);
      CHECK(c.chain.front() == integral_closure(I).ideal);
      CHECK(c.chain.back() == ratliff_rush(I).ideal);
      for (std::size_t i = 0; i + 1 < c.chain.size(); ++i) CHECK(is_subset(c.chain[i + 1], c.chain[i]));
      for (std::size_t i = 0; i < c.chain.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) CHECK(c.per_ideal_fits[i].e[j] == c.coefficients.e[j]);
    }
  }
}
