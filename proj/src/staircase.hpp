#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cideal/kernels.hpp"

namespace cideal::detail {

using kernels::Exponent;

/// The boundary of a monomial ideal over the grid of its first d-1
/// coordinates: height(a) is the least last exponent e such that the
/// monomial (a, e) lies in the ideal, or kUnbounded if none does.
///
/// Heights are seeded from generators and closed under the prefix-min
/// recurrence height(a) = min(seed(a), height(a - e_j)); each outer-axis
/// sweep is a row-wise min, which is where the vector kernels run.
class Staircase {
 public:
  /// `extents` has dim-1 entries. Generators whose prefix falls outside the
  /// grid are ignored.
  Staircase(std::span<const Exponent> flat, std::size_t dim, std::vector<std::size_t> extents);

  std::size_t cells() const noexcept { return heights_.size(); }

  /// Minimal generators of the ideal restricted to the grid, row-major and
  /// therefore lexicographically sorted.
  std::vector<Exponent> minimal_generators() const;

  /// Sum of min(height, cap) over the grid.
  std::int64_t sum_clamped(Exponent cap) const;

 private:
  std::size_t dim_;
  std::vector<std::size_t> extents_;
  std::vector<std::size_t> strides_;
  std::vector<Exponent> heights_;
};

/// Product of extents, or nullopt if it exceeds `limit`.
std::optional<std::size_t> grid_cells(std::span<const std::size_t> extents, std::size_t limit);

}  // namespace cideal::detail
