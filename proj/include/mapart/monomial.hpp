#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "mapart/simd/exponent_kernels.hpp"

namespace mapart {

/// Exponent vector x^a over a fixed number of variables. Storage is padded
/// to whole SIMD lane blocks; padding lanes are always zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t size() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return lanes_[i]; }
  void set(std::size_t i, unsigned e);

  std::uint32_t total_degree() const;
  bool is_one() const;

  std::span<const simd::Exponent> lanes() const { return {lanes_.data(), lanes_.size()}; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.lanes_ == b.lanes_;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires divides(b, a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

 private:
  using Storage = boost::container::small_vector<simd::Exponent, simd::kLaneBlock>;
  std::size_t nvars_ = 0;
  Storage lanes_;
};

/// a | b
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
/// gcd(a, b) == 1
bool coprime(const Monomial& a, const Monomial& b);

}  // namespace mapart
