#pragma once

// Data-parallel kernels over packed monomial exponent vectors.
//
// Exponents are stored as uint16 lanes. Every buffer handed to these
// kernels has a length that is a multiple of kLaneBlock and zero padding
// past the last variable, so vector implementations never need a tail loop.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace mapart::simd {

using Exponent = std::uint16_t;

inline constexpr std::size_t kLaneBlock = 16;

inline constexpr std::size_t padded_width(std::size_t nvars) {
  return (nvars + kLaneBlock - 1) / kLaneBlock * kLaneBlock;
}

struct ExponentKernels {
  std::string_view name;
  /// a[i] <= b[i] for all i.
  bool (*divides)(const Exponent* a, const Exponent* b, std::size_t n);
  /// out = max(a, b).
  void (*lcm)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
  /// out = a + b; returns false on lane overflow (out is then unspecified).
  bool (*add)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
  /// out = a - b; requires b | a.
  void (*sub)(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n);
  /// No variable occurs in both a and b.
  bool (*disjoint)(const Exponent* a, const Exponent* b, std::size_t n);
  /// Sum of all lanes.
  std::uint32_t (*total_degree)(const Exponent* a, std::size_t n);
};

const ExponentKernels& scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const ExponentKernels* avx2_kernels();

/// Kernel set used by the library. AVX2 when supported, unless the
/// environment variable MAPART_SIMD is set to "scalar".
const ExponentKernels& active_kernels();

}  // namespace mapart::simd
