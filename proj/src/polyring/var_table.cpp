#include "mapart/var_table.hpp"

#include <unordered_set>

#include "mapart/error.hpp"

namespace mapart {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable '" + n + "'");
  }
  default_order_ = MonomialOrder::degrevlex(names_.size());
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarTable::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error("unknown variable '" + std::string(name) + "'");
}

}  // namespace mapart
