#include "mapart/leinartas.hpp"

#include <algorithm>
#include <map>

#include "mapart/error.hpp"
#include "mapart/poly_gcd.hpp"

namespace mapart {

namespace {

GroebnerBasis degrevlex_basis(const std::vector<Polynomial>& polys) {
  const VarTablePtr& table = polys.front().table();
  return buchberger(Ideal(polys), table->default_order());
}

std::vector<std::string> fresh_names(const VarTable& table, std::size_t m) {
  for (const std::string prefix : {"y", "z", "u", "w", "t", "Y", "Z"}) {
    std::vector<std::string> names;
    bool clash = false;
    for (std::size_t i = 1; i <= m && !clash; ++i) {
      names.push_back(prefix + std::to_string(i));
      clash = table.index_of(names.back()).has_value();
    }
    if (!clash) return names;
  }
  for (std::size_t k = 0;; ++k) {
    std::vector<std::string> names;
    bool clash = false;
    for (std::size_t i = 1; i <= m && !clash; ++i) {
      names.push_back("y" + std::to_string(k) + "_" + std::to_string(i));
      clash = table.index_of(names.back()).has_value();
    }
    if (!clash) return names;
  }
}

using FactorPowers = std::vector<std::pair<std::size_t, unsigned>>;

class Decomposer {
 public:
  explicit Decomposer(const std::vector<Polynomial>& factors) : factors_(factors) {}

  void process(Polynomial num, FactorPowers fp, std::vector<LeinartasTerm>& out) {
    if (num.is_zero()) return;
    fp.erase(std::remove_if(fp.begin(), fp.end(), [](const auto& x) { return x.second == 0; }), fp.end());
    std::sort(fp.begin(), fp.end());
    if (fp.empty()) {
      out.push_back({std::move(num), {}});
      return;
    }
    std::vector<Polynomial> polys;
    std::vector<std::pair<Polynomial, unsigned>> powered;
    for (const auto& [i, a] : fp) {
      polys.push_back(factors_[i]);
      powered.emplace_back(factors_[i], a);
    }
    if (auto h = nullstellensatz_cofactors(powered)) {
      for (std::size_t k = 0; k < fp.size(); ++k) {
        if ((*h)[k].is_zero()) continue;
        FactorPowers rest = fp;
        rest[k].second = 0;
        process(num * (*h)[k], rest, out);
      }
      return;
    }
    if (fp.size() > 1) {
      std::vector<Polynomial> dpow;
      for (const auto& [i, a] : fp) dpow.push_back(factors_[i].pow(a));
      if (auto ann = annihilator(dpow)) {
        split_annihilator(num, fp, *ann, out);
        return;
      }
    }
    const auto red = normal_form_with_cofactors(num, polys, num.table()->default_order(), true);
    bool any = false;
    for (const auto& h : red.cofactors) any = any || !h.is_zero();
    if (!any) {
      out.push_back({std::move(num), fp});
      return;
    }
    if (!red.remainder.is_zero()) out.push_back({red.remainder, fp});
    for (std::size_t k = 0; k < fp.size(); ++k) {
      if (red.cofactors[k].is_zero()) continue;
      FactorPowers lower = fp;
      lower[k].second -= 1;
      process(red.cofactors[k], lower, out);
    }
  }

 private:
  void split_annihilator(const Polynomial& num, const FactorPowers& fp, const Annihilator& ann,
                         std::vector<LeinartasTerm>& out) {
    const auto& terms = ann.polynomial.terms();
    // Lowest-degree monomial; terms are stored descending under degrevlex,
    // so the last one of minimal degree is the least.
    std::size_t beta = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (terms[k].mono.total_degree() <= terms[beta].mono.total_degree()) beta = k;
    }
    const Monomial& b = terms[beta].mono;
    const Rational cb = terms[beta].coeff;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k == beta) continue;
      const Monomial& g = terms[k].mono;
      Polynomial n = num * (-terms[k].coeff / cb);
      FactorPowers next = fp;
      for (std::size_t i = 0; i < fp.size(); ++i) {
        const unsigned gi = g[i];
        const unsigned bi = b[i];
        if (gi > bi) {
          n *= factors_[fp[i].first].pow(fp[i].second * (gi - bi - 1));
          next[i].second = 0;
        } else {
          next[i].second = fp[i].second * (bi + 1 - gi);
        }
      }
      process(n, next, out);
    }
  }

  const std::vector<Polynomial>& factors_;
};

}  // namespace

bool have_common_zero(const std::vector<Polynomial>& factors) {
  if (factors.empty()) return true;
  return !contains_one(degrevlex_basis(factors));
}

std::optional<std::vector<Polynomial>> nullstellensatz_cofactors(
    const std::vector<std::pair<Polynomial, unsigned>>& factors_with_powers) {
  if (factors_with_powers.empty()) return std::nullopt;
  std::vector<Polynomial> gens;
  for (const auto& [d, a] : factors_with_powers) {
    if (d.is_zero()) throw Error("zero factor");
    gens.push_back(d.pow(a));
  }
  const VarTablePtr& table = gens.front().table();
  const auto res = normal_form_with_cofactors(Polynomial::constant(table, 1), gens, table->default_order(), true);
  if (!res.remainder.is_zero()) return std::nullopt;
  std::vector<Polynomial> out;
  for (const auto& c : res.cofactors) out.push_back(c.with_order(table->default_order()));
  return out;
}

std::optional<Annihilator> annihilator(const std::vector<Polynomial>& factors) {
  if (factors.empty()) return std::nullopt;
  const VarTablePtr& xt = factors.front().table();
  const std::size_t n = xt->size();
  const std::size_t m = factors.size();
  const auto ynames = fresh_names(*xt, m);
  std::vector<std::string> names = xt->names();
  names.insert(names.end(), ynames.begin(), ynames.end());
  const VarTablePtr ring = VarTable::make(names);
  std::vector<OrderBlock> blocks;
  if (n > 0) {
    OrderBlock xb;
    for (std::size_t i = 0; i < n; ++i) xb.vars.push_back(i);
    blocks.push_back(xb);
  }
  OrderBlock yb;
  for (std::size_t i = 0; i < m; ++i) yb.vars.push_back(n + i);
  blocks.push_back(yb);
  const OrderPtr order = std::make_shared<const MonomialOrder>(ring->size(), blocks);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < m; ++i) {
    if (factors[i].is_zero()) throw Error("zero factor");
    gens.push_back(Polynomial::variable(ring, n + i) - factors[i].embed(ring));
  }
  const GroebnerBasis gb = buchberger(Ideal(gens), order);
  const VarTablePtr yt = VarTable::make(ynames);
  std::optional<Polynomial> best;
  for (const auto& g : gb.elements) {
    bool x_free = true;
    for (auto v : g.support()) x_free = x_free && v >= n;
    if (!x_free || g.is_zero()) continue;
    Polynomial p = g.embed(yt);
    if (!best || p.total_degree() < best->total_degree() ||
        (p.total_degree() == best->total_degree() && compare_polynomials(p, *best, *yt->default_order()) < 0)) {
      best = std::move(p);
    }
  }
  if (!best) return std::nullopt;
  return Annihilator{*best, factors};
}

bool is_algebraically_independent(const std::vector<Polynomial>& factors) {
  if (factors.empty()) return true;
  if (factors.size() > factors.front().table()->size()) return false;
  return !annihilator(factors).has_value();
}

Polynomial substitute_factors(const Annihilator& a) {
  const VarTablePtr& xt = a.factors.front().table();
  Polynomial sum(xt);
  std::vector<std::vector<Polynomial>> powers(a.factors.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(xt, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * a.factors[i]);
    return cache[e];
  };
  for (const auto& t : a.polynomial.terms()) {
    Polynomial term = Polynomial::constant(xt, t.coeff);
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      if (t.mono[i] > 0) term *= power(i, t.mono[i]);
    }
    sum += term;
  }
  return sum;
}

LeinartasDecomposition leinartas_decompose(const RationalFunction& r) {
  LeinartasDecomposition out;
  FactorPowers fp;
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    out.factors.push_back(r.factors[i].first);
    fp.emplace_back(i, r.factors[i].second);
  }
  std::vector<LeinartasTerm> raw;
  Decomposer d(out.factors);
  d.process(r.numerator * r.constant, fp, raw);
  std::map<FactorPowers, Polynomial> merged;
  for (auto& t : raw) {
    auto it = merged.find(t.factors);
    if (it == merged.end()) {
      merged.emplace(t.factors, std::move(t.numerator));
    } else {
      it->second += t.numerator;
    }
  }
  for (auto& [key, num] : merged) {
    if (!num.is_zero()) out.terms.push_back({std::move(num), key});
  }
  std::stable_sort(out.terms.begin(), out.terms.end(),
                   [](const LeinartasTerm& a, const LeinartasTerm& b) { return a.factors.size() < b.factors.size(); });
  return out;
}

bool LeinartasReport::ok() const {
  return std::all_of(terms.begin(), terms.end(), [](const LeinartasTermReport& t) { return t.ok(); });
}

LeinartasReport verify_leinartas_form(const std::vector<LeinartasTerm>& terms, const std::vector<Polynomial>& factors) {
  LeinartasReport report;
  std::map<std::vector<std::size_t>, LeinartasTermReport> cache;
  std::map<std::vector<std::size_t>, GroebnerBasis> bases;
  for (const auto& t : terms) {
    std::vector<std::size_t> idx;
    for (const auto& [i, a] : t.factors) {
      if (a > 0) idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    LeinartasTermReport r;
    if (!idx.empty()) {
      std::vector<Polynomial> polys;
      for (auto i : idx) polys.push_back(factors.at(i));
      auto it = cache.find(idx);
      if (it == cache.end()) {
        LeinartasTermReport base;
        base.common_zero = have_common_zero(polys);
        base.independent = is_algebraically_independent(polys);
        it = cache.emplace(idx, base).first;
        bases.emplace(idx, degrevlex_basis(polys));
      }
      r = it->second;
      const auto& gb = bases.at(idx);
      const Polynomial num = t.numerator.with_order(gb.order);
      r.numerator_reduced = normal_form(num, gb) == num;
    }
    report.terms.push_back(r);
  }
  return report;
}

}  // namespace mapart
