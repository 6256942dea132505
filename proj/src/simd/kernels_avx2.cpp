#include "mapart/simd/exponent_kernels.hpp"

#if defined(MAPART_HAVE_AVX2)

#include <immintrin.h>

namespace mapart::simd {

namespace {

inline __m256i load(const Exponent* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Exponent* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

bool divides(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kLaneBlock) {
    const __m256i va = load(a + i);
    const __m256i vb = load(b + i);
    // a <= b  <=>  max(a, b) == b
    const __m256i eq = _mm256_cmpeq_epi16(_mm256_max_epu16(va, vb), vb);
    if (_mm256_movemask_epi8(eq) != -1) return false;
  }
  return true;
}

void lcm(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kLaneBlock) store(out + i, _mm256_max_epu16(load(a + i), load(b + i)));
}

bool add(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  __m256i overflow = _mm256_setzero_si256();
  for (std::size_t i = 0; i < n; i += kLaneBlock) {
    const __m256i va = load(a + i);
    const __m256i vb = load(b + i);
    const __m256i wrapped = _mm256_add_epi16(va, vb);
    const __m256i saturated = _mm256_adds_epu16(va, vb);
    overflow = _mm256_or_si256(overflow, _mm256_xor_si256(wrapped, saturated));
    store(out + i, wrapped);
  }
  return _mm256_testz_si256(overflow, overflow) != 0;
}

void sub(const Exponent* a, const Exponent* b, Exponent* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += kLaneBlock) store(out + i, _mm256_sub_epi16(load(a + i), load(b + i)));
}

bool disjoint(const Exponent* a, const Exponent* b, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t i = 0; i < n; i += kLaneBlock) {
    const __m256i nza = _mm256_cmpeq_epi16(load(a + i), zero);
    const __m256i nzb = _mm256_cmpeq_epi16(load(b + i), zero);
    // lane is shared when neither is zero
    if (_mm256_movemask_epi8(_mm256_or_si256(nza, nzb)) != -1) return false;
  }
  return true;
}

std::uint32_t total_degree(const Exponent* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  const __m256i ones = _mm256_set1_epi16(1);
  for (std::size_t i = 0; i < n; i += kLaneBlock) {
    // widen pairs of u16 to i32; exponents < 2^15 in practice, but madd is
    // signed so split hi bit explicitly
    const __m256i v = load(a + i);
    const __m256i lo = _mm256_and_si256(v, _mm256_set1_epi16(0x7FFF));
    const __m256i hi = _mm256_srli_epi16(v, 15);
    acc = _mm256_add_epi32(acc, _mm256_madd_epi16(lo, ones));
    acc = _mm256_add_epi32(acc, _mm256_slli_epi32(_mm256_madd_epi16(hi, ones), 15));
  }
  const __m128i s = _mm_add_epi32(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
  const __m128i s2 = _mm_add_epi32(s, _mm_shuffle_epi32(s, 0x4E));
  const __m128i s3 = _mm_add_epi32(s2, _mm_shuffle_epi32(s2, 0xB1));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s3));
}

}  // namespace

const ExponentKernels* avx2_kernels() {
  static const ExponentKernels k{"avx2", divides, lcm, add, sub, disjoint, total_degree};
  static const bool supported = __builtin_cpu_supports("avx2") != 0;
  return supported ? &k : nullptr;
}

}  // namespace mapart::simd

#else

namespace mapart::simd {
const ExponentKernels* avx2_kernels() { return nullptr; }
}  // namespace mapart::simd

#endif
