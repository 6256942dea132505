#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mapart/polynomial.hpp"

namespace mapart {

/// Nonzero generators over one table.
struct Ideal {
  std::vector<Polynomial> generators;

  explicit Ideal(std::vector<Polynomial> gens);
  const VarTablePtr& table() const { return generators.front().table(); }
};

struct BuchbergerStats {
  std::size_t pairs_total = 0;
  std::size_t skipped_product = 0;
  std::size_t skipped_chain = 0;
  std::size_t zero_reductions = 0;
};

struct GroebnerBasis {
  /// Sorted ascending by leading monomial; primitive with positive leading
  /// coefficient.
  std::vector<Polynomial> elements;
  OrderPtr order;
  bool reduced = false;
  BuchbergerStats stats;

  const VarTablePtr& table() const { return elements.front().table(); }
};

struct BuchbergerOptions {
  /// Product (coprime leading monomials) and chain criteria.
  bool use_criteria = true;
};

enum class ReductionStrategy {
  LargestFirst,   // always reduce the greatest reducible term
  SmallestFirst,  // always reduce the least reducible term
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const OrderPtr& order);

/// Full reduction of p modulo divisors (every divisible term is reduced).
/// The divisors' own orders are ignored; order decides.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors, const OrderPtr& order,
                       ReductionStrategy strategy = ReductionStrategy::LargestFirst);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis,
                       ReductionStrategy strategy = ReductionStrategy::LargestFirst);

GroebnerBasis buchberger(const Ideal& ideal, const OrderPtr& order, BuchbergerOptions options = {});

bool contains_one(const GroebnerBasis& basis);

/// True when every S-polynomial of gens reduces to zero under order.
bool is_groebner_basis(const std::vector<Polynomial>& gens, const OrderPtr& order);

struct CofactorResult {
  Polynomial remainder;
  /// p == sum cofactors[i] * gens[i] + remainder
  std::vector<Polynomial> cofactors;
  /// The remainder is the unique normal form (gens form a Groebner basis, or
  /// the reduction ran against a completed basis).
  bool unique = false;
};

/// Division with cofactor tracking. With complete = false the generators are
/// used as given; otherwise a tracked completion is computed first and the
/// cofactors are expressed back in terms of gens.
CofactorResult normal_form_with_cofactors(const Polynomial& p, const std::vector<Polynomial>& gens,
                                          const OrderPtr& order, bool complete = false);

struct TrackedBasis {
  GroebnerBasis basis;
  /// basis.elements[k] == sum representation[k][i] * gens[i]
  std::vector<std::vector<Polynomial>> representation;
};

TrackedBasis buchberger_tracked(const Ideal& ideal, const OrderPtr& order);

/// One polynomial per line.
std::string basis_to_text(const GroebnerBasis& basis);

}  // namespace mapart
