#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mapart/expr.hpp"

namespace mapart::testing {

/// Direct evaluation of an expression tree with GMP rationals. Shares
/// nothing with the polynomial code; nullopt on division by zero.
inline std::optional<mpq_class> eval_tree(const ExprPtr& e, const std::map<std::string, mpq_class>& at) {
  switch (e->kind) {
    case ExprKind::Number:
      return mpq_class(e->number);
    case ExprKind::Variable: {
      auto it = at.find(e->name);
      if (it == at.end()) return std::nullopt;
      return it->second;
    }
    case ExprKind::Neg: {
      auto v = eval_tree(e->args[0], at);
      if (!v) return v;
      return mpq_class(-*v);
    }
    case ExprKind::Add: {
      mpq_class s = 0;
      for (const auto& a : e->args) {
        auto v = eval_tree(a, at);
        if (!v) return v;
        s += *v;
      }
      return s;
    }
    case ExprKind::Mul: {
      mpq_class s = 1;
      for (const auto& a : e->args) {
        auto v = eval_tree(a, at);
        if (!v) return v;
        s *= *v;
      }
      return s;
    }
    case ExprKind::Div: {
      auto n = eval_tree(e->args[0], at);
      auto d = eval_tree(e->args[1], at);
      if (!n || !d || *d == 0) return std::nullopt;
      return mpq_class(*n / *d);
    }
    case ExprKind::Pow: {
      auto b = eval_tree(e->args[0], at);
      if (!b) return b;
      mpq_class r = 1;
      for (unsigned i = 0; i < e->exponent; ++i) r *= *b;
      return r;
    }
  }
  return std::nullopt;
}

inline std::optional<mpq_class> eval_text(const std::string& text, const std::map<std::string, mpq_class>& at) {
  return eval_tree(parse_expression(text), at);
}

/// Agreement of two expressions at random rational points away from poles.
inline bool agree_at_random_points(const std::string& a, const std::string& b, const std::vector<std::string>& vars,
                                   std::mt19937_64& rng, int points = 4) {
  const ExprPtr ea = parse_expression(a);
  const ExprPtr eb = parse_expression(b);
  std::uniform_int_distribution<long> num(-97, 97), den(1, 31);
  int checked = 0;
  for (int attempt = 0; attempt < 50 * points && checked < points; ++attempt) {
    std::map<std::string, mpq_class> at;
    for (const auto& v : vars) {
      mpq_class q(num(rng), den(rng));
      q.canonicalize();
      at[v] = q;
    }
    auto va = eval_tree(ea, at);
    auto vb = eval_tree(eb, at);
    if (!va || !vb) continue;
    if (*va != *vb) return false;
    ++checked;
  }
  return checked == points;
}

inline std::string random_polynomial_text(const std::vector<std::string>& vars, std::mt19937_64& rng,
                                          unsigned max_degree, int max_terms) {
  std::uniform_int_distribution<int> coeff(-5, 5), nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::string out;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    std::string term = std::to_string(c);
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) term += "*" + vars[pick(rng)];
    out += (t == 0 ? "" : "+") + std::string("(") + term + ")";
  }
  return out;
}

/// Random numerator / product of pool factors with powers 1..max_power.
inline std::string random_function_text(const std::vector<std::string>& pool, const std::vector<std::string>& vars,
                                        std::mt19937_64& rng, std::size_t max_factors = 3, unsigned max_power = 3,
                                        unsigned numerator_degree = 4) {
  std::vector<std::size_t> idx(pool.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::uniform_int_distribution<std::size_t> nf(1, max_factors);
  std::uniform_int_distribution<unsigned> pw(1, max_power);
  const std::size_t k = nf(rng);
  std::string den;
  for (std::size_t i = 0; i < k; ++i) {
    den += (i ? "*" : "") + std::string("(") + pool[idx[i]] + ")^" + std::to_string(pw(rng));
  }
  return "(" + random_polynomial_text(vars, rng, numerator_degree, 4) + ")/(" + den + ")";
}

}  // namespace mapart::testing
