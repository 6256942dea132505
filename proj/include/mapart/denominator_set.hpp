#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mapart/polynomial.hpp"

namespace mapart {

/// Irreducible (or at least pairwise coprime) denominator factors d_i over
/// the x-variables, each tied to an inverse-denominator symbol q_i.
struct DenominatorSet {
  VarTablePtr xtable;
  std::vector<Polynomial> factors;
  std::vector<std::string> symbols;

  /// Normalizes every factor and names them prefix1, prefix2, ...
  static DenominatorSet make(VarTablePtr xtable, std::vector<Polynomial> factors, const std::string& prefix = "q");

  std::size_t size() const { return factors.size(); }
  bool empty() const { return factors.empty(); }

  /// Index of a factor equal to normalize_factor(f).
  std::optional<std::size_t> index_of(const Polynomial& f) const;
  std::optional<std::size_t> symbol_index(std::string_view symbol) const;

  /// Throws Error unless the factors are distinct, normalized and
  /// non-constant and the symbols are distinct and disjoint from x.
  void validate() const;

  /// Ring with the q-symbols first, then the x-variables.
  VarTablePtr ring() const;

  /// Appends a factor (normalized) with symbol prefix<k>, k = size()+1,
  /// skipping names already taken.
  std::size_t append(const Polynomial& f, const std::string& prefix = "q");
};

}  // namespace mapart
