#pragma once

#include <optional>
#include <vector>

#include "mapart/polynomial.hpp"

namespace mapart {

/// Primitive integer content and positive leading coefficient under the
/// polynomial's own order. Zero stays zero.
Polynomial normalize_factor(const Polynomial& p);

/// Greatest common divisor over Q, normalized with normalize_factor.
/// gcd(a, 0) = normalize_factor(a); gcd of nonzero constants is 1.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// q with q * b == a, or nullopt.
std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b);

/// q with q * b == a; throws NotDivisible otherwise.
Polynomial divexact(const Polynomial& a, const Polynomial& b);

struct SquareFreeFactor {
  Polynomial factor;
  unsigned multiplicity;
};

struct SquareFreeDecomposition {
  Rational constant;
  std::vector<SquareFreeFactor> factors;
};

/// p = constant * prod factor^multiplicity with pairwise coprime, square-free,
/// normalized factors. Sorted by multiplicity, highest first.
SquareFreeDecomposition square_free_split(const Polynomial& p);

}  // namespace mapart
