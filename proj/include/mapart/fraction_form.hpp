#pragma once

#include <utility>
#include <vector>

#include "mapart/expr.hpp"
#include "mapart/polynomial.hpp"

namespace mapart {

/// numerator / prod atom^power. Atoms are normalized, non-constant and
/// distinct; they need not be coprime.
struct Fraction {
  Polynomial numerator;
  std::vector<std::pair<Polynomial, unsigned>> denominator;

  static Fraction polynomial(Polynomial p);
  Polynomial denominator_product() const;
};

Fraction operator+(const Fraction& a, const Fraction& b);
Fraction operator*(const Fraction& a, const Fraction& b);
Fraction negate(const Fraction& a);
/// Throws Error("zero denominator") when b is zero.
Fraction divide(const Fraction& a, const Fraction& b);

/// Evaluates an expression over table into one fraction.
Fraction to_fraction(const ExprPtr& e, const VarTablePtr& table);

/// Top-level additive terms of an expression, each as its own fraction.
std::vector<Fraction> to_fraction_terms(const ExprPtr& e, const VarTablePtr& table);

/// Polynomial from an expression without division; throws otherwise.
Polynomial to_polynomial(const ExprPtr& e, const VarTablePtr& table);

}  // namespace mapart
