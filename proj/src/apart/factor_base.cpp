#include "mapart/factor_base.hpp"

#include <algorithm>

#include "mapart/error.hpp"
#include "mapart/poly_gcd.hpp"

namespace mapart {

void FactorBase::add_fixed(const Polynomial& f_in) {
  if (fixed_ != factors_.size()) throw InvariantError("fixed factors must be added first");
  const Polynomial f = normalize_factor(f_in.embed(table_));
  if (f.is_constant()) throw Error("constant denominator factor " + f_in.to_string());
  const auto sf = square_free_split(f);
  if (sf.factors.size() != 1 || sf.factors[0].multiplicity != 1) throw Error("known factor is not square-free: " + f.to_string());
  for (const auto& g : factors_) {
    if (g == f) throw Error("duplicate known factor " + f.to_string());
    if (!gcd(g, f).is_constant()) throw Error("known factors " + g.to_string() + " and " + f.to_string() + " are not coprime");
  }
  factors_.push_back(f);
  ++fixed_;
}

void FactorBase::add(const Polynomial& f_in) {
  const Polynomial f = f_in.embed(table_);
  if (f.is_zero()) throw Error("zero denominator");
  if (f.is_constant()) return;
  for (const auto& part : square_free_split(f).factors) insert_square_free(part.factor);
}

void FactorBase::insert_square_free(Polynomial a_in) {
  std::vector<Polynomial> pending{normalize_factor(a_in)};
  while (!pending.empty()) {
    Polynomial a = std::move(pending.back());
    pending.pop_back();
    bool restart = true;
    while (restart && !a.is_constant()) {
      restart = false;
      for (std::size_t k = 0; k < factors_.size(); ++k) {
        const Polynomial& b = factors_[k];
        const Polynomial g = gcd(a, b);
        if (g.is_constant()) continue;
        if (g == b) {
          a = divexact(a, b);
          restart = true;
          break;
        }
        if (k < fixed_) {
          throw Error("factor " + g.to_string() + " splits the known factor " + b.to_string());
        }
        Polynomial rest = divexact(b, g);
        factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(k));
        pending.push_back(normalize_factor(rest));
        pending.push_back(g);
        a = divexact(a, g);
        restart = true;
        break;
      }
    }
    if (!a.is_constant()) factors_.push_back(normalize_factor(a));
  }
}

FactorBase::Decomposition FactorBase::decompose(const Polynomial& f_in) const {
  Polynomial f = f_in.embed(table_);
  if (f.is_zero()) throw Error("zero denominator");
  Decomposition d;
  for (std::size_t k = 0; k < factors_.size() && !f.is_constant(); ++k) {
    unsigned e = 0;
    while (auto q = try_divide(f, factors_[k])) {
      f = std::move(*q);
      ++e;
    }
    if (e > 0) d.powers[k] = e;
  }
  if (!f.is_constant()) throw InvariantError("factor base does not cover " + f_in.to_string());
  d.constant = f.constant_value();
  return d;
}

void FactorBase::sort_free(const std::vector<std::size_t>& permutation) {
  if (permutation.size() != factors_.size() - fixed_) throw InvariantError("bad permutation size");
  std::vector<Polynomial> reordered;
  for (auto k : permutation) reordered.push_back(factors_.at(fixed_ + k));
  std::copy(reordered.begin(), reordered.end(), factors_.begin() + static_cast<std::ptrdiff_t>(fixed_));
}

bool canonical_factor_less(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.table()->size();
  std::vector<std::size_t> vars(n);
  for (std::size_t k = 0; k < n; ++k) vars[k] = n - 1 - k;
  const MonomialOrder order(n, {OrderBlock{vars, BlockRule::Lex}});
  return compare_polynomials(a, b, order) < 0;
}

}  // namespace mapart
