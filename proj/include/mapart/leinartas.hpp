#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapart/apart.hpp"

namespace mapart {

/// True iff the factors have a common zero over the algebraic closure.
bool have_common_zero(const std::vector<Polynomial>& factors);

/// h with sum h_i * d_i^alpha_i == 1, or nullopt when a common zero exists.
std::optional<std::vector<Polynomial>> nullstellensatz_cofactors(
    const std::vector<std::pair<Polynomial, unsigned>>& factors_with_powers);

struct Annihilator {
  /// Polynomial in fresh variables, one per factor, in factor order.
  Polynomial polynomial;
  std::vector<Polynomial> factors;
};

/// Least-degree x-free element of an elimination basis of <y_i - d_i>, or
/// nullopt when the factors are algebraically independent.
std::optional<Annihilator> annihilator(const std::vector<Polynomial>& factors);

bool is_algebraically_independent(const std::vector<Polynomial>& factors);

/// Substitutes the factors into an annihilator polynomial.
Polynomial substitute_factors(const Annihilator& a);

using LeinartasTerm = ApartTerm;

struct LeinartasDecomposition {
  std::vector<Polynomial> factors;
  std::vector<LeinartasTerm> terms;
};

LeinartasDecomposition leinartas_decompose(const RationalFunction& r);

struct LeinartasTermReport {
  bool common_zero = true;
  bool independent = true;
  bool numerator_reduced = true;
  bool ok() const { return common_zero && independent && numerator_reduced; }
};

struct LeinartasReport {
  std::vector<LeinartasTermReport> terms;
  bool ok() const;
};

LeinartasReport verify_leinartas_form(const std::vector<LeinartasTerm>& terms, const std::vector<Polynomial>& factors);

/// One factor of an iterated term: var^var_power / factor^power; factor is
/// empty for polynomial parts.
struct IteratedPart {
  std::size_t var;
  unsigned var_power = 0;
  std::optional<Polynomial> factor;
  unsigned power = 0;
};

struct IteratedTerm {
  Rational coefficient;
  /// Outermost variable first.
  std::vector<IteratedPart> parts;
};

struct IteratedResult {
  std::vector<IteratedTerm> terms;
  /// Output factors that do not divide the input denominator.
  std::vector<Polynomial> spurious;
  Polynomial input_denominator;

  std::string to_string() const;
};

/// Classical partial fractions in one variable at a time. Factors appear in
/// reverse order of their first occurrence in the input.
IteratedResult iterated_univariate_apart(const Fraction& r, const std::vector<std::string>& variable_order);

}  // namespace mapart
