#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <vector>

#include "mapart/monomial.hpp"

namespace mapart {

enum class BlockRule { DegRevLex, Lex };

struct OrderBlock {
  /// Variable indices; the first listed variable is the most significant.
  std::vector<std::size_t> vars;
  BlockRule rule = BlockRule::DegRevLex;
  bool operator==(const OrderBlock&) const = default;
};

/// Block monomial order. Earlier blocks dominate later ones; inside a block
/// the inner rule decides.
class MonomialOrder {
 public:
  MonomialOrder(std::size_t nvars, std::vector<OrderBlock> blocks);

  static std::shared_ptr<const MonomialOrder> degrevlex(std::size_t nvars);
  static std::shared_ptr<const MonomialOrder> lex(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<OrderBlock>& blocks() const { return blocks_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder& o) const { return nvars_ == o.nvars_ && blocks_ == o.blocks_; }

 private:
  std::size_t nvars_;
  std::vector<OrderBlock> blocks_;
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

/// Strict weak ordering that sorts monomials descending.
struct DescendingBy {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

}  // namespace mapart
