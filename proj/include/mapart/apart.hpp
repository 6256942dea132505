#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapart/denominator_set.hpp"
#include "mapart/expr.hpp"
#include "mapart/fraction_form.hpp"
#include "mapart/groebner.hpp"
#include "mapart/order_spec.hpp"

namespace mapart {

/// numerator / prod factors[i].first^factors[i].second with coprime
/// numerator and denominator; any rational constant lives in the numerator.
struct RationalFunction {
  Polynomial numerator;
  std::vector<std::pair<Polynomial, unsigned>> factors;
  Rational constant{1};

  Polynomial denominator() const;
};

/// Expression in the q-symbols and x-variables together with the meaning of
/// each q-symbol.
struct AbbreviatedExpression {
  Polynomial body;
  DenominatorSet dens;
  VarTablePtr ring;

  /// "{body, {q1->1/(x-y), ...}}"
  std::string to_string() const;
};

/// Cancels common factors and splits the denominator into pairwise coprime
/// square-free factors (plus the given known factors, which stay atomic).
RationalFunction normalize_and_factor(const Fraction& f, const std::vector<Polynomial>& known = {});
RationalFunction normalize_and_factor(const ExprPtr& e, const VarTablePtr& xtable,
                                      const std::vector<Polynomial>& known = {});

/// Replaces each denominator factor by its symbol, term by term. Factors of
/// known keep their symbols; in strict mode an unknown factor is an error.
AbbreviatedExpression abbreviate_denominators(const ExprPtr& e, const VarTablePtr& xtable,
                                              const std::optional<DenominatorSet>& known = std::nullopt,
                                              bool strict = false);

/// Groebner basis of <q_i d_i - 1> under the block order of spec.
GroebnerBasis apart_basis(const DenominatorSet& dens, const OrderSpec& spec);

/// Unique normal form of the body. jobs > 1 reduces chunks of terms
/// concurrently against the shared basis.
AbbreviatedExpression apart_reduce(const AbbreviatedExpression& expr, const GroebnerBasis& basis,
                                   std::size_t jobs = 1);

/// Multiplies the q powers into the numerator one symbol at a time, smallest
/// symbol under the basis order first, reducing after every step. With a
/// partition size the working polynomial is reduced in chunks of at most
/// that many terms before a final pass.
Polynomial apart_reduce_iterated(const Polynomial& numerator,
                                 const std::vector<std::pair<std::string, unsigned>>& qpowers,
                                 const GroebnerBasis& basis, std::optional<std::size_t> partition_size = std::nullopt);

struct ApartOptions {
  std::optional<OrderSpec> order;
  std::vector<std::string> promote;
  /// Pure lex among the q-symbols instead of the block order.
  bool lex_q = false;
  std::size_t jobs = 1;
  bool iterated = false;
  std::optional<std::size_t> partition_size;
};

/// One summand numerator / prod d_i^e_i of a decomposition.
struct ApartTerm {
  Polynomial numerator;
  std::vector<std::pair<std::size_t, unsigned>> factors;
};

struct ApartResult {
  AbbreviatedExpression input;
  AbbreviatedExpression reduced;
  OrderSpec spec;
  GroebnerBasis basis;
  std::vector<ApartTerm> terms;

  /// "-1/(2*(x-y)*y) + 3/(2*y*(x+y))"
  std::string to_string() const;
};

/// Full pipeline: normalize, abbreviate, order, basis, reduce, restore.
ApartResult multivariate_apart(const ExprPtr& e, const VarTablePtr& xtable, const ApartOptions& options = {},
                               const std::optional<DenominatorSet>& known = std::nullopt);

/// Splits a reduced body into summands grouped by q-monomial, ascending
/// under the body's order.
std::vector<ApartTerm> restore_terms(const Polynomial& body, const DenominatorSet& dens);

std::string format_apart_term(const ApartTerm& t, const DenominatorSet& dens);
std::string format_apart_sum(const std::vector<ApartTerm>& terms, const DenominatorSet& dens);

/// Expands terms back into one fraction over a common denominator.
Fraction recombine(const std::vector<ApartTerm>& terms, const DenominatorSet& dens);

/// Sorted x-variables of an expression (and extra polynomials' tables).
VarTablePtr default_xtable(const std::vector<ExprPtr>& exprs);

/// Embeds an x-polynomial into the abbreviation ring.
Polynomial lift_to_ring(const Polynomial& p, const VarTablePtr& ring);

}  // namespace mapart
