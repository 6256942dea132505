#include <algorithm>
#include <map>

#include "mapart/order_spec.hpp"

namespace mapart {

namespace {

struct Group {
  std::vector<std::size_t> support;  // ascending variable indices
  std::vector<std::size_t> members;  // factor indices
  unsigned max_degree = 0;
};

}  // namespace

OrderSpec apart_order(const DenominatorSet& dens) {
  dens.validate();
  const auto& x_order = *dens.xtable->default_order();
  std::map<std::vector<std::size_t>, Group> by_support;
  for (std::size_t i = 0; i < dens.size(); ++i) {
    auto support = dens.factors[i].support();
    auto& g = by_support[support];
    g.support = support;
    g.members.push_back(i);
    g.max_degree = std::max(g.max_degree, dens.factors[i].total_degree());
  }
  std::vector<Group> groups;
  for (auto& [key, g] : by_support) groups.push_back(std::move(g));

  // More variables first, then higher degree; remaining ties put the group
  // whose support reaches later variables first.
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    if (a.support.size() != b.support.size()) return a.support.size() > b.support.size();
    if (a.max_degree != b.max_degree) return a.max_degree > b.max_degree;
    return std::lexicographical_compare(b.support.rbegin(), b.support.rend(), a.support.rbegin(), a.support.rend());
  });

  OrderSpec spec;
  for (auto& g : groups) {
    std::sort(g.members.begin(), g.members.end(), [&](std::size_t a, std::size_t b) {
      const auto da = dens.factors[a].total_degree();
      const auto db = dens.factors[b].total_degree();
      if (da != db) return da > db;
      const int c = compare_polynomials(dens.factors[a], dens.factors[b], x_order);
      if (c != 0) return c > 0;
      return a < b;
    });
    std::vector<std::string> block;
    for (auto m : g.members) block.push_back(dens.symbols[m]);
    spec.blocks.push_back(std::move(block));
  }
  if (dens.xtable->size() > 0) spec.blocks.push_back(dens.xtable->names());
  return spec;
}

OrderSpec lex_q_order(const DenominatorSet& dens) {
  OrderSpec spec;
  for (const auto& s : dens.symbols) spec.blocks.push_back({s});
  if (dens.xtable->size() > 0) spec.blocks.push_back(dens.xtable->names());
  return spec;
}

}  // namespace mapart
