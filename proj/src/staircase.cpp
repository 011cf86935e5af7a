#include "staircase.hpp"

#include <algorithm>

namespace cideal::detail {

std::optional<std::size_t> grid_cells(std::span<const std::size_t> extents, std::size_t limit) {
  std::size_t cells = 1;
  for (std::size_t e : extents) {
    if (e != 0 && cells > limit / e) return std::nullopt;
    cells *= e;
  }
  if (cells > limit) return std::nullopt;
  return cells;
}

Staircase::Staircase(std::span<const Exponent> flat, std::size_t dim, std::vector<std::size_t> extents)
    : dim_(dim), extents_(std::move(extents)) {
  const std::size_t axes = extents_.size();
  strides_.assign(axes, 1);
  for (std::size_t j = axes; j-- > 1;) strides_[j - 1] = strides_[j] * extents_[j];
  std::size_t cells = axes == 0 ? 1 : strides_[0] * extents_[0];
  heights_.assign(cells, kernels::kUnbounded);
  if (cells == 0) return;

  const std::size_t count = flat.size() / dim_;
  for (std::size_t g = 0; g < count; ++g) {
    const Exponent* v = flat.data() + g * dim_;
    std::size_t idx = 0;
    bool inside = true;
    for (std::size_t j = 0; j < axes && inside; ++j) {
      inside = static_cast<std::size_t>(v[j]) < extents_[j];
      idx += static_cast<std::size_t>(v[j]) * strides_[j];
    }
    if (inside) heights_[idx] = std::min(heights_[idx], v[dim_ - 1]);
  }

  const auto& k = kernels::active();
  for (std::size_t j = 0; j < axes; ++j) {
    const std::size_t stride = strides_[j];
    const std::size_t block = stride * extents_[j];
    for (std::size_t base = 0; base < cells; base += block) {
      Exponent* row = heights_.data() + base;
      if (stride == 1) {
        for (std::size_t r = 1; r < extents_[j]; ++r) row[r] = std::min(row[r], row[r - 1]);
      } else {
        for (std::size_t r = 1; r < extents_[j]; ++r) k.min_into(row + r * stride, row + (r - 1) * stride, stride);
      }
    }
  }
}

std::vector<Exponent> Staircase::minimal_generators() const {
  std::vector<Exponent> out;
  const std::size_t axes = extents_.size();
  std::vector<std::size_t> a(axes, 0);
  for (std::size_t idx = 0; idx < heights_.size(); ++idx) {
    const Exponent h = heights_[idx];
    if (h != kernels::kUnbounded) {
      bool corner = true;
      for (std::size_t j = 0; j < axes && corner; ++j)
        if (a[j] > 0) corner = h < heights_[idx - strides_[j]];
      if (corner) {
        for (std::size_t j = 0; j < axes; ++j) out.push_back(static_cast<Exponent>(a[j]));
        out.push_back(h);
      }
    }
    for (std::size_t j = axes; j-- > 0;) {
      if (++a[j] < extents_[j]) break;
      a[j] = 0;
    }
  }
  return out;
}

std::int64_t Staircase::sum_clamped(Exponent cap) const {
  return kernels::active().sum_clamped(heights_.data(), heights_.size(), cap);
}

}  // namespace cideal::detail
