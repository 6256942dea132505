#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mapart/rational.hpp"

namespace mapart {

struct PrimePower {
  BigInt prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

/// Deterministic Miller-Rabin; exact for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

/// Primality for arbitrary n. Falls back to GMP's probabilistic test
/// beyond 64 bits.
bool is_prime(const BigInt& n);

/// Prime factorization of n >= 1, sorted by prime. Trial division up to
/// 10^6, then Pollard-Brent rho on the cofactor.
std::vector<PrimePower> factor_integer(const BigInt& n);

}  // namespace mapart
