#pragma once

// Data-parallel inner loops over exponent data.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant compiled with per-function target attributes. `active()` picks
// the widest variant the running CPU supports; the scalar table is always
// available for equivalence testing.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace cideal::kernels {

using Exponent = std::int32_t;

inline constexpr Exponent kUnbounded = std::numeric_limits<Exponent>::max();
inline constexpr std::size_t kLaneWidth = 8;

/// Generators stored column-wise: coordinate j of generator g lives at
/// `column(j)[g]`. Columns are padded to a multiple of kLaneWidth with
/// kUnbounded, so padded lanes never divide anything.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  /// `flat` holds `count` generators of length `dim`, row-major.
  GeneratorTable(std::span<const Exponent> flat, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return count_; }
  std::size_t padded_size() const noexcept { return padded_; }
  const Exponent* column(std::size_t j) const noexcept { return coords_.data() + j * padded_; }

 private:
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  std::size_t padded_ = 0;
  std::vector<Exponent> coords_;
};

struct KernelTable {
  std::string_view name;

  /// True iff some generator among the first `limit` (rounded up to a lane
  /// block) is componentwise <= v. `v` has table.dim() entries.
  bool (*any_divides)(const GeneratorTable& table, std::size_t limit, const Exponent* v);

  /// dst[i] = min(dst[i], src[i]) for i < n.
  void (*min_into)(Exponent* dst, const Exponent* src, std::size_t n);

  /// Sum over i < n of min(values[i], cap). Entries must be >= 0.
  std::int64_t (*sum_clamped)(const Exponent* values, std::size_t n, Exponent cap);
};

const KernelTable& scalar();

/// AVX2 table, or nullptr when the CPU or the build lacks it.
const KernelTable* avx2();

/// Widest supported table; fixed for the lifetime of the process.
const KernelTable& active();

}  // namespace cideal::kernels
