#include "mapart/prime_field.hpp"

#include "mapart/error.hpp"

namespace mapart {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1U;
  }
  return result;
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 r0 = m, r1 = a % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) return std::nullopt;
  if (t0 < 0) t0 += m;
  return static_cast<std::uint64_t>(t0);
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint64_t modulus) : p_(modulus) {
  if (modulus < 2 || modulus >> 63U) throw Error("prime modulus out of range");
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t v = value % m;
  if (v < 0) v += m;
  value_ = static_cast<std::uint64_t>(v);
}

void PrimeFieldElement::check_same(const PrimeFieldElement& o) const {
  if (o.p_ != p_) throw Error("prime field elements with different moduli");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  check_same(o);
  std::uint64_t s = value_ + o.value_;
  if (s >= p_) s -= p_;
  return {Raw{}, s, p_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  check_same(o);
  return {Raw{}, value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_, p_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  check_same(o);
  return {Raw{}, mul_mod(value_, o.value_, p_), p_};
}

PrimeFieldElement PrimeFieldElement::operator/(const PrimeFieldElement& o) const {
  return *this * o.inverse();
}

PrimeFieldElement PrimeFieldElement::operator-() const {
  return {Raw{}, value_ == 0 ? 0 : p_ - value_, p_};
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const {
  return {Raw{}, pow_mod(value_, e, p_), p_};
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  const auto inv = inverse_mod(value_, p_);
  if (!inv) throw Error("division by zero in prime field");
  return {Raw{}, *inv, p_};
}

}  // namespace mapart
