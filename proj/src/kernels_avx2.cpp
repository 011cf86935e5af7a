#include <algorithm>

#include "cideal/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define CIDEAL_HAVE_AVX2_TU 1
#include <immintrin.h>
#endif

namespace cideal::kernels {

#if CIDEAL_HAVE_AVX2_TU

namespace {

#define CIDEAL_AVX2 __attribute__((target("avx2")))

CIDEAL_AVX2 bool any_divides_avx2(const GeneratorTable& table, std::size_t limit, const Exponent* v) {
  const std::size_t n = std::min(limit, table.size());
  const std::size_t d = table.dim();
  for (std::size_t g = 0; g < n; g += kLaneWidth) {
    // A lane survives while no coordinate of its generator exceeds v.
    __m256i exceeds = _mm256_setzero_si256();
    for (std::size_t j = 0; j < d; ++j) {
      const __m256i col = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table.column(j) + g));
      exceeds = _mm256_or_si256(exceeds, _mm256_cmpgt_epi32(col, _mm256_set1_epi32(v[j])));
    }
    unsigned mask = ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(exceeds))) & 0xffu;
    // Lanes past `n` are padding or outside the requested prefix.
    if (n - g < kLaneWidth) mask &= (1u << (n - g)) - 1u;
    if (mask != 0) return true;
  }
  return false;
}

CIDEAL_AVX2 void min_into_avx2(Exponent* dst, const Exponent* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLaneWidth <= n; i += kLaneWidth) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_min_epi32(a, b));
  }
  for (; i < n; ++i) dst[i] = dst[i] < src[i] ? dst[i] : src[i];
}

CIDEAL_AVX2 std::int64_t sum_clamped_avx2(const Exponent* values, std::size_t n, Exponent cap) {
  const __m256i capv = _mm256_set1_epi32(cap);
  __m256i acc = _mm256_setzero_si256();  // four 64-bit partial sums
  std::size_t i = 0;
  for (; i + kLaneWidth <= n; i += kLaneWidth) {
    __m256i x = _mm256_min_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + i)), capv);
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_castsi256_si128(x)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepi32_epi64(_mm256_extracti128_si256(x, 1)));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += values[i] < cap ? values[i] : cap;
  return total;
}

#undef CIDEAL_AVX2

}  // namespace

const KernelTable* avx2() {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{"avx2", &any_divides_avx2, &min_into_avx2, &sum_clamped_avx2};
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2() { return nullptr; }

#endif

}  // namespace cideal::kernels
