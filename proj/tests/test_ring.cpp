#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cideal/errors.hpp"
#include "cideal/ring.hpp"
#include "support.hpp"

using namespace cideal;
using testing::ideal;

namespace {

std::vector<ExponentVec> random_gens(std::mt19937& rng, std::size_t d, int count, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<ExponentVec> out;
  for (int k = 0; k < count; ++k) {
    ExponentVec v(d);
    for (auto& x : v) x = e(rng);
    out.push_back(v);
  }
  return out;
}

MonomialIdeal random_m_primary(std::mt19937& rng, std::size_t d, int max_exp) {
  std::uniform_int_distribution<int> pure(1, max_exp);
  auto gens = random_gens(rng, d, 4, max_exp);
  for (std::size_t j = 0; j < d; ++j) {
    ExponentVec v(d, 0);
    v[j] = pure(rng);
    gens.push_back(v);
  }
  return normalize(gens, RingContext::standard(d));
}

}  // namespace

TEST_CASE("ring context validates names") {
  CHECK_THROWS_AS(RingContext({}), ValidationError);
  CHECK_THROWS_AS(RingContext({"x", "x"}), ValidationError);
  CHECK_THROWS_AS(RingContext({"2x"}), ValidationError);
  RingContext r({"a", "b1", "c_2"});
  CHECK(r.dim() == 3);
  CHECK(r.index_of("b1") == 1u);
  CHECK_FALSE(r.index_of("z"));
  CHECK(RingContext::standard(2)->var_names() == std::vector<std::string>{"x", "y"});
  CHECK(RingContext::standard(4)->var_names().back() == "x4");
}

TEST_CASE("normalize keeps minimal generators only") {
  auto ring = RingContext::standard(2);
  std::vector<ExponentVec> raw{{2, 0}, {3, 1}, {0, 2}, {2, 0}, {1, 1}};
  auto I = normalize(raw, ring);
  CHECK(format_generators(I) == std::vector<std::string>{"x^2", "x*y", "y^2"});
  CHECK(I.num_generators() == 3);
}

TEST_CASE("normalize agrees with pairwise minimization") {
  std::mt19937 rng(7);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int trial = 0; trial < 60; ++trial) {
      auto raw = random_gens(rng, d, 1 + trial % 12, 5);
      auto I = normalize(raw, RingContext::standard(d));
      oracle::Gens plain;
      for (const auto& v : raw) plain.emplace_back(v.begin(), v.end());
      CHECK(testing::to_gens(I) == oracle::minimize(plain));
      std::vector<Exponent> flat;
      for (const auto& v : raw) flat.insert(flat.end(), v.begin(), v.end());
      CHECK(normalize_pairwise(flat, d) == std::vector<Exponent>(I.flat().begin(), I.flat().end()));
    }
  }
}

TEST_CASE("membership matches divisibility") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto I = random_m_primary(rng, 3, 5);
    auto g = testing::to_gens(I);
    oracle::for_box({7, 7, 7}, [&](const oracle::Mono& v) {
      ExponentVec e(v.begin(), v.end());
      CHECK(I.contains(e) == oracle::member(g, v));
    });
  }
}

TEST_CASE("ideal operations") {
  auto I = ideal({"x^2", "y^2"});
  auto J = ideal({"x", "y^3"});
  CHECK(to_string(sum(I, J)) == "(x, y^2)");
  CHECK(to_string(product(I, J)) == "(x^3, x*y^2, y^5)");
  CHECK(to_string(power(I, 2)) == "(x^4, x^2*y^2, y^4)");
  CHECK(to_string(power(I, 0)) == "(1)");
  CHECK(to_string(intersection(I, J)) == "(x^2, x*y^2, y^3)");
  CHECK(to_string(colon(I, ideal({"x"}))) == "(x, y^2)");
  CHECK(to_string(colon(power(I, 2), I)) == "(x^2, y^2)");
  CHECK(is_subset(I, sum(I, J)));
  CHECK_FALSE(is_subset(J, I));
  CHECK(power(I, 3) == product(I, power(I, 2)));
  CHECK_THROWS_AS(sum(I, ideal({"x"}, 3)), DimensionMismatch);
}

TEST_CASE("colon agrees with membership definition") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    auto I = random_m_primary(rng, 2, 5);
    auto J = random_m_primary(rng, 2, 3);
    auto C = colon(I, J);
    oracle::for_box({7, 7}, [&](const oracle::Mono& v) {
      bool in = true;
      for (const auto& g : J.generators()) {
        ExponentVec w{v[0] + g[0], v[1] + g[1]};
        in = in && I.contains(w);
      }
      CHECK(C.contains(ExponentVec(v.begin(), v.end())) == in);
    });
  }
}

TEST_CASE("m-primary detection") {
  CHECK(is_m_primary(ideal({"x^3", "y^2"})));
  CHECK_FALSE(is_m_primary(ideal({"x^3", "x*y"})));
  CHECK_FALSE(is_m_primary(MonomialIdeal::unit(RingContext::standard(2))));
  CHECK(*pure_power_bounds(ideal({"x^3", "x*y", "y^2"})) == ExponentVec{3, 2});
}

TEST_CASE("colength by both methods matches naive count") {
  CHECK(colength(ideal({"x^4", "x^3*y", "x*y^3", "y^4"})) == 11);
  CHECK(colength(ideal({"x^2", "y^2"})) == 4);
  std::mt19937 rng(5);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int trial = 0; trial < 30; ++trial) {
      auto I = random_m_primary(rng, d, 6);
      const auto expected = oracle::colength(testing::to_gens(I));
      CHECK(colength(I, ColengthMethod::box_enumeration) == expected);
      CHECK(colength(I, ColengthMethod::inclusion_exclusion) == expected);
    }
  }
}

TEST_CASE("colength caps") {
  auto I = ideal({"x^2", "y^2"});
  Limits tight;
  tight.max_box_volume = 3;
  CHECK_THROWS_AS(colength(I, ColengthMethod::box_enumeration, tight), CapExceeded);
  tight = Limits{};
  tight.inclusion_exclusion_max_gens = 1;
  CHECK_THROWS_AS(colength(I, ColengthMethod::inclusion_exclusion, tight), CapExceeded);
  CHECK_THROWS_AS(colength(ideal({"x^2", "x*y"})), NotMPrimary);
}

TEST_CASE("gap monomials") {
  auto gap = gap_monomials(ideal({"x^2", "y^2"}), ideal({"x^2", "x*y", "y^2"}));
  REQUIRE(gap.size() == 1);
  CHECK(gap[0] == ExponentVec{1, 1});
  CHECK_THROWS_AS(gap_monomials(ideal({"x", "y^2"}), ideal({"x^2", "y"})), InclusionViolated);
}

TEST_CASE("parser accepts the grammar") {
  auto ring = RingContext::standard(3);
  CHECK(parse_monomial("x^2*y", *ring) == ExponentVec{2, 1, 0});
  CHECK(parse_monomial(" x * x ^ 3 * z ", *ring) == ExponentVec{4, 0, 1});
  CHECK(parse_monomial("1", *ring) == ExponentVec{0, 0, 0});
  CHECK(format_monomial(ExponentVec{0, 0, 0}, *ring) == "1");
  CHECK(format_monomial(ExponentVec{1, 0, 2}, *ring) == "x*z^2");
}

TEST_CASE("parser reports positions") {
  auto ring = RingContext::standard(2);
  auto position_of = [&](const char* text) -> std::size_t {
    try {
      parse_monomial(text, *ring);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(position_of("x^2*w") == 4);
  CHECK(position_of("x^") == 2);
  CHECK(position_of("x^0") == 2);
  CHECK(position_of("x y") == 2);
  CHECK(position_of("") == 0);
  CHECK(position_of("1*x") == 1);
  CHECK_THROWS_AS(parse_ideal({"x", "q"}, ring), ParseError);
}

TEST_CASE("text round trip") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto I = random_m_primary(rng, 3, 4);
    CHECK(parse_ideal(format_generators(I), I.ring_ptr()) == I);
  }
}

TEST_CASE("power ladder keeps references valid") {
  PowerLadder ladder(ideal({"x^2", "x*y", "y^3"}));
  const MonomialIdeal& first = ladder.get(1);
  const MonomialIdeal copy = first;
  for (int n = 2; n <= 12; ++n) ladder.get(n);
  CHECK(first == copy);
  CHECK(ladder.get(4) == power(copy, 4));
}
