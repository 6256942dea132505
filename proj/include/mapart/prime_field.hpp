#pragma once

#include <cstdint>
#include <optional>

namespace mapart {

/// Element of Z/pZ for a prime p < 2^63.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return p_; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator/(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement pow(std::uint64_t e) const;
  PrimeFieldElement inverse() const;

  bool operator==(const PrimeFieldElement& o) const = default;

 private:
  struct Raw {};
  PrimeFieldElement(Raw, std::uint64_t v, std::uint64_t p) : value_(v), p_(p) {}
  void check_same(const PrimeFieldElement& o) const;

  std::uint64_t value_;
  std::uint64_t p_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m);

}  // namespace mapart
