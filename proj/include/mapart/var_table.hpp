#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mapart/monomial_order.hpp"

namespace mapart {

/// Ordered, immutable list of distinct variable names. Position is meaning:
/// exponent i of a monomial refers to name(i).
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  static std::shared_ptr<const VarTable> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  /// Degrevlex in table order; the default storage order of polynomials.
  const OrderPtr& default_order() const { return default_order_; }

  bool same_as(const VarTable& o) const { return this == &o || names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  OrderPtr default_order_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

}  // namespace mapart
