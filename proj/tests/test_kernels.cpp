#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cideal/kernels.hpp"

using namespace cideal::kernels;

namespace {

std::vector<const KernelTable*> variants() {
  std::vector<const KernelTable*> out{&scalar()};
  if (avx2()) out.push_back(avx2());
  return out;
}

}  // namespace

TEST_CASE("active kernel is one of the variants") {
  const auto all = variants();
  CHECK(std::find(all.begin(), all.end(), &active()) != all.end());
  MESSAGE("active kernels: " << active().name);
}

TEST_CASE("any_divides variants agree") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> e(0, 6);
  for (std::size_t d = 1; d <= 5; ++d) {
    for (std::size_t count : {1u, 3u, 7u, 8u, 9u, 16u, 31u, 64u}) {
      std::vector<Exponent> flat(d * count);
      for (auto& x : flat) x = e(rng);
      GeneratorTable table(flat, d);
      CHECK(table.size() == count);
      CHECK(table.padded_size() % kLaneWidth == 0);
      for (int probe = 0; probe < 50; ++probe) {
        std::vector<Exponent> v(d);
        for (auto& x : v) x = e(rng);
        for (std::size_t limit = 0; limit <= count; limit += 1 + count / 5) {
          bool expected = false;
          for (std::size_t g = 0; g < limit && !expected; ++g) {
            bool div = true;
            for (std::size_t j = 0; j < d; ++j) div = div && flat[g * d + j] <= v[j];
            expected = div;
          }
          for (const auto* k : variants()) CHECK(k->any_divides(table, limit, v.data()) == expected);
        }
      }
    }
  }
}

TEST_CASE("min_into and sum_clamped variants agree") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> e(0, 1000);
  for (std::size_t n : {0u, 1u, 5u, 8u, 13u, 64u, 257u}) {
    std::vector<Exponent> a(n), b(n);
    for (auto& x : a) x = e(rng);
    for (auto& x : b) x = e(rng);
    if (n > 2) a[1] = kUnbounded;
    std::vector<Exponent> expected(n);
    for (std::size_t i = 0; i < n; ++i) expected[i] = std::min(a[i], b[i]);
    for (const auto* k : variants()) {
      auto dst = a;
      k->min_into(dst.data(), b.data(), n);
      CHECK(dst == expected);
      for (Exponent cap : {0, 1, 500, 2000}) {
        std::int64_t sum = 0;
        for (auto x : a) sum += std::min(x, cap);
        CHECK(k->sum_clamped(a.data(), n, cap) == sum);
      }
    }
  }
}
