#include <cstdlib>
#include <string_view>

#include "mapart/simd/exponent_kernels.hpp"

namespace mapart::simd {

const ExponentKernels& active_kernels() {
  static const ExponentKernels& chosen = [] () -> const ExponentKernels& {
    const char* env = std::getenv("MAPART_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const auto* k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace mapart::simd
