#include "mapart/order_spec.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mapart/error.hpp"
#include "mapart/poly_gcd.hpp"

namespace mapart {

OrderSpec OrderSpec::parse(std::string_view text) {
  OrderSpec spec;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) {
      throw Error("order spec: expected '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
    ++i;
  };
  expect('{');
  skip();
  if (i < text.size() && text[i] == '}') {
    ++i;
    return spec;
  }
  while (true) {
    expect('{');
    std::vector<std::string> block;
    while (true) {
      skip();
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      if (start == i) throw Error("order spec: expected variable name at position " + std::to_string(i));
      block.emplace_back(text.substr(start, i - start));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect('}');
      break;
    }
    spec.blocks.push_back(std::move(block));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    expect('}');
    break;
  }
  skip();
  if (i != text.size()) throw Error("order spec: trailing characters");
  return spec;
}

std::string OrderSpec::to_string() const {
  std::string out = "{";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out += ',';
    out += '{';
    for (std::size_t k = 0; k < blocks[b].size(); ++k) {
      if (k > 0) out += ',';
      out += blocks[b][k];
    }
    out += '}';
  }
  return out + "}";
}

std::vector<std::string> OrderSpec::flatten() const {
  std::vector<std::string> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

OrderPtr OrderSpec::to_order(const VarTable& table, BlockRule rule) const {
  std::vector<OrderBlock> out;
  std::set<std::string> seen;
  for (const auto& b : blocks) {
    OrderBlock ob;
    ob.rule = rule;
    for (const auto& name : b) {
      if (!seen.insert(name).second) throw Error("order spec names '" + name + "' twice");
      ob.vars.push_back(table.require(name));
    }
    out.push_back(std::move(ob));
  }
  if (seen.size() != table.size()) throw Error("order spec does not cover every variable");
  return std::make_shared<const MonomialOrder>(table.size(), std::move(out));
}

OrderSpec promote_spurious(const OrderSpec& spec, const std::vector<std::string>& spurious) {
  if (spurious.empty()) return spec;
  const auto all = spec.flatten();
  for (const auto& s : spurious) {
    if (std::find(all.begin(), all.end(), s) == all.end()) throw Error("unknown symbol '" + s + "'");
  }
  OrderSpec out;
  out.blocks.push_back(spurious);
  for (const auto& b : spec.blocks) {
    std::vector<std::string> kept;
    for (const auto& v : b) {
      if (std::find(spurious.begin(), spurious.end(), v) == spurious.end()) kept.push_back(v);
    }
    if (!kept.empty()) out.blocks.push_back(std::move(kept));
  }
  return out;
}

DenominatorSet DenominatorSet::make(VarTablePtr xtable, std::vector<Polynomial> factors, const std::string& prefix) {
  DenominatorSet d;
  d.xtable = std::move(xtable);
  for (const auto& f : factors) d.append(f, prefix);
  d.validate();
  return d;
}

std::size_t DenominatorSet::append(const Polynomial& f, const std::string& prefix) {
  Polynomial g = normalize_factor(f.embed(xtable));
  factors.push_back(std::move(g));
  for (std::size_t k = factors.size();; ++k) {
    std::string name = prefix + std::to_string(k);
    if (std::find(symbols.begin(), symbols.end(), name) == symbols.end() && !xtable->index_of(name)) {
      symbols.push_back(std::move(name));
      break;
    }
  }
  return factors.size() - 1;
}

std::optional<std::size_t> DenominatorSet::index_of(const Polynomial& f) const {
  const Polynomial g = normalize_factor(f.embed(xtable));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == g) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> DenominatorSet::symbol_index(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] == symbol) return i;
  }
  return std::nullopt;
}

void DenominatorSet::validate() const {
  if (!xtable) throw Error("denominator set without variables");
  if (symbols.size() != factors.size()) throw Error("denominator symbols and factors differ in count");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].is_constant()) throw Error("constant denominator factor " + factors[i].to_string());
    if (!(normalize_factor(factors[i]) == factors[i])) throw Error("denominator factor not normalized: " + factors[i].to_string());
    if (xtable->index_of(symbols[i])) throw Error("symbol '" + symbols[i] + "' clashes with a variable");
    for (std::size_t j = 0; j < i; ++j) {
      if (factors[i] == factors[j]) throw Error("duplicate denominator factor " + factors[i].to_string());
      if (symbols[i] == symbols[j]) throw Error("duplicate denominator symbol " + symbols[i]);
    }
  }
}

VarTablePtr DenominatorSet::ring() const {
  std::vector<std::string> names = symbols;
  names.insert(names.end(), xtable->names().begin(), xtable->names().end());
  return VarTable::make(std::move(names));
}

}  // namespace mapart
