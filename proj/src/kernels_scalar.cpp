#include <algorithm>

#include "cideal/kernels.hpp"

namespace cideal::kernels {

GeneratorTable::GeneratorTable(std::span<const Exponent> flat, std::size_t dim)
    : dim_(dim), count_(dim == 0 ? 0 : flat.size() / dim) {
  padded_ = (count_ + kLaneWidth - 1) / kLaneWidth * kLaneWidth;
  coords_.assign(dim_ * padded_, kUnbounded);
  for (std::size_t g = 0; g < count_; ++g)
    for (std::size_t j = 0; j < dim_; ++j) coords_[j * padded_ + g] = flat[g * dim_ + j];
}

namespace {

bool any_divides_scalar(const GeneratorTable& table, std::size_t limit, const Exponent* v) {
  const std::size_t n = std::min(limit, table.size());
  const std::size_t d = table.dim();
  for (std::size_t g = 0; g < n; ++g) {
    bool divides = true;
    for (std::size_t j = 0; j < d && divides; ++j) divides = table.column(j)[g] <= v[j];
    if (divides) return true;
  }
  return false;
}

void min_into_scalar(Exponent* dst, const Exponent* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = std::min(dst[i], src[i]);
}

std::int64_t sum_clamped_scalar(const Exponent* values, std::size_t n, Exponent cap) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::min(values[i], cap);
  return total;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", &any_divides_scalar, &min_into_scalar, &sum_clamped_scalar};
  return table;
}

}  // namespace cideal::kernels
