#pragma once

#include <map>
#include <vector>

#include "mapart/polynomial.hpp"

namespace mapart {

/// Pairwise coprime, square-free, normalized polynomials. The first
/// fixed_count entries are never split.
class FactorBase {
 public:
  explicit FactorBase(VarTablePtr table) : table_(std::move(table)) {}

  /// Adds factors that must stay atomic. Throws when they are not pairwise
  /// coprime or not square-free.
  void add_fixed(const Polynomial& f);
  /// Adds the square-free parts of f and refines until pairwise coprime.
  /// Throws when a fixed factor would have to be split.
  void add(const Polynomial& f);

  const std::vector<Polynomial>& factors() const { return factors_; }
  std::size_t fixed_count() const { return fixed_; }

  struct Decomposition {
    Rational constant;
    std::map<std::size_t, unsigned> powers;
  };
  /// f == constant * prod factors()[i]^powers[i]; throws InvariantError if f
  /// is not a product of base elements.
  Decomposition decompose(const Polynomial& f) const;

  /// Reorders the non-fixed factors (indices from fixed_count() on).
  void sort_free(const std::vector<std::size_t>& permutation);

 private:
  void insert_square_free(Polynomial a);
  VarTablePtr table_;
  std::vector<Polynomial> factors_;
  std::size_t fixed_ = 0;
};

/// Canonical order used to number newly discovered factors: terms sorted
/// under lex with the last variable most significant, sequences compared
/// monomial first, then coefficient, a shorter prefix first.
bool canonical_factor_less(const Polynomial& a, const Polynomial& b);

}  // namespace mapart
