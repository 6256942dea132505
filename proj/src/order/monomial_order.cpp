#include "mapart/monomial_order.hpp"

#include <numeric>

#include "mapart/error.hpp"

namespace mapart {

MonomialOrder::MonomialOrder(std::size_t nvars, std::vector<OrderBlock> blocks)
    : nvars_(nvars), blocks_(std::move(blocks)) {
  std::vector<bool> seen(nvars, false);
  std::size_t count = 0;
  for (const auto& b : blocks_) {
    if (b.vars.empty()) throw Error("empty block in monomial order");
    for (auto v : b.vars) {
      if (v >= nvars || seen[v]) throw Error("monomial order blocks must partition the variables");
      seen[v] = true;
      ++count;
    }
  }
  if (count != nvars) throw Error("monomial order blocks must partition the variables");
}

OrderPtr MonomialOrder::degrevlex(std::size_t nvars) {
  std::vector<OrderBlock> blocks;
  if (nvars > 0) {
    OrderBlock b;
    b.vars.resize(nvars);
    std::iota(b.vars.begin(), b.vars.end(), 0);
    blocks.push_back(std::move(b));
  }
  return std::make_shared<const MonomialOrder>(nvars, std::move(blocks));
}

OrderPtr MonomialOrder::lex(std::size_t nvars) {
  std::vector<OrderBlock> blocks;
  if (nvars > 0) {
    OrderBlock b;
    b.vars.resize(nvars);
    std::iota(b.vars.begin(), b.vars.end(), 0);
    b.rule = BlockRule::Lex;
    blocks.push_back(std::move(b));
  }
  return std::make_shared<const MonomialOrder>(nvars, std::move(blocks));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& block : blocks_) {
    if (block.rule == BlockRule::Lex) {
      for (auto v : block.vars) {
        if (a[v] != b[v]) return a[v] <=> b[v];
      }
      continue;
    }
    unsigned da = 0;
    unsigned db = 0;
    for (auto v : block.vars) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da <=> db;
    for (auto it = block.vars.rbegin(); it != block.vars.rend(); ++it) {
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace mapart
