#include "mapart/simd/exponent_kernels.hpp"

namespace mapart::simd {

namespace {

bool divides(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void lcm(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool add(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t s = std::uint32_t{a[i]} + b[i];
    ok &= s <= 0xFFFFU;
    out[i] = static_cast<Exponent>(s);
  }
  return ok;
}

void sub(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Exponent>(a[i] - b[i]);
}

bool disjoint(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::uint32_t total_degree(const Exponent* a, std::size_t n) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

}  // namespace

const ExponentKernels& scalar_kernels() {
  static const ExponentKernels k{"scalar", divides, lcm, add, sub, disjoint, total_degree};
  return k;
}

}  // namespace mapart::simd
