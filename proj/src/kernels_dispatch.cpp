#include "cideal/kernels.hpp"

namespace cideal::kernels {

const KernelTable& active() {
  static const KernelTable& chosen = avx2() != nullptr ? *avx2() : scalar();
  return chosen;
}

}  // namespace cideal::kernels
