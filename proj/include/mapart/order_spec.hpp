#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mapart/denominator_set.hpp"
#include "mapart/monomial_order.hpp"
#include "mapart/var_table.hpp"

namespace mapart {

/// Nested list of variable names, earliest block greatest, written as
/// {{q3,q1},{q2},{x,y}}.
struct OrderSpec {
  std::vector<std::vector<std::string>> blocks;

  static OrderSpec parse(std::string_view text);
  std::string to_string() const;
  std::vector<std::string> flatten() const;

  /// Monomial order over table; the spec must name every table variable once.
  OrderPtr to_order(const VarTable& table, BlockRule rule = BlockRule::DegRevLex) const;

  bool operator==(const OrderSpec&) const = default;
};

/// Block ordering for a denominator set: factors grouped by variable support,
/// groups with more variables first, higher degree first inside a group,
/// followed by one block with all x-variables. Inner rule degrevlex.
OrderSpec apart_order(const DenominatorSet& dens);

/// {{q1},{q2},...,{x...}}: pure lex on the q-symbols in index order.
OrderSpec lex_q_order(const DenominatorSet& dens);

/// Moves the listed symbols into a new leading block.
OrderSpec promote_spurious(const OrderSpec& spec, const std::vector<std::string>& spurious);

}  // namespace mapart
