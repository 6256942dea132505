#include "mapart/groebner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "mapart/error.hpp"

namespace mapart {

namespace {

using TermMap = std::map<Monomial, Rational, DescendingBy>;

// A polynomial being reduced, optionally carrying its expression in terms of
// the original generators.
struct Tracked {
  Polynomial poly;
  std::vector<Polynomial> rep;
};

TermMap to_map(const Polynomial& p, const MonomialOrder& order) {
  TermMap m(DescendingBy{&order});
  for (const auto& t : p.terms()) m.emplace_hint(m.end(), t.mono, t.coeff);
  return m;
}

void axpy(TermMap& acc, const Polynomial& g, const Monomial& shift, const Rational& factor, bool skip_lead) {
  bool first = true;
  for (const auto& t : g.terms()) {
    if (first && skip_lead) {
      first = false;
      continue;
    }
    first = false;
    Monomial m = shift * t.mono;
    auto it = acc.find(m);
    Rational delta = factor * t.coeff;
    if (it == acc.end()) {
      acc.emplace(std::move(m), -delta);
    } else {
      it->second -= delta;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

Polynomial from_map(const VarTablePtr& table, const OrderPtr& order, const TermMap& m) {
  std::vector<Term> terms;
  terms.reserve(m.size());
  for (const auto& [mono, c] : m) terms.push_back({mono, c});
  return Polynomial::from_sorted_terms(table, std::move(terms), order);
}

const Polynomial* find_divisor(const Monomial& m, const std::vector<const Polynomial*>& divisors, std::size_t* index) {
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    if (divides(divisors[k]->leading_monomial(), m)) {
      if (index) *index = k;
      return divisors[k];
    }
  }
  return nullptr;
}

// Core reduction. When cof is non-null, cofactor terms per divisor are
// appended there.
Polynomial reduce(const Polynomial& p, const std::vector<const Polynomial*>& divisors, const OrderPtr& order,
                  ReductionStrategy strategy, std::vector<std::vector<Term>>* cof) {
  const auto& table = p.table();
  TermMap acc = to_map(p, *order);
  TermMap rem(DescendingBy{order.get()});
  if (strategy == ReductionStrategy::LargestFirst) {
    while (!acc.empty()) {
      auto it = acc.begin();
      std::size_t k = 0;
      const Polynomial* g = find_divisor(it->first, divisors, &k);
      if (!g) {
        rem.emplace_hint(rem.end(), it->first, it->second);
        acc.erase(it);
        continue;
      }
      const Monomial shift = it->first / g->leading_monomial();
      const Rational factor = it->second / g->leading_coefficient();
      acc.erase(it);
      axpy(acc, *g, shift, factor, true);
      if (cof) (*cof)[k].push_back({shift, factor});
    }
    return from_map(table, order, rem);
  }
  // Smallest reducible term first; irreducible monomials stay irreducible,
  // so they are remembered across scans.
  std::set<Monomial, DescendingBy> stuck(DescendingBy{order.get()});
  while (true) {
    const Polynomial* g = nullptr;
    std::size_t k = 0;
    TermMap::iterator target = acc.end();
    for (auto rit = acc.rbegin(); rit != acc.rend(); ++rit) {
      if (stuck.count(rit->first)) continue;
      g = find_divisor(rit->first, divisors, &k);
      if (g) {
        target = std::prev(rit.base());
        break;
      }
      stuck.insert(rit->first);
    }
    if (!g) break;
    const Monomial shift = target->first / g->leading_monomial();
    const Rational factor = target->second / g->leading_coefficient();
    acc.erase(target);
    axpy(acc, *g, shift, factor, true);
    if (cof) (*cof)[k].push_back({shift, factor});
  }
  return from_map(table, order, acc);
}

std::vector<const Polynomial*> pointers(const std::vector<Polynomial>& v) {
  std::vector<const Polynomial*> out;
  out.reserve(v.size());
  for (const auto& p : v) {
    if (!p.is_zero()) out.push_back(&p);
  }
  return out;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t degree;
};

class Engine {
 public:
  Engine(const Ideal& ideal, OrderPtr order, BuchbergerOptions opts, bool track)
      : order_(std::move(order)), opts_(opts), track_(track), ngens_(ideal.generators.size()) {
    table_ = ideal.table();
    if (order_->nvars() != table_->size()) throw Error("monomial order does not match variable table");
    for (std::size_t i = 0; i < ngens_; ++i) {
      Tracked t;
      t.poly = ideal.generators[i].with_order(order_);
      if (track_) {
        t.rep.assign(ngens_, Polynomial(table_, order_));
        t.rep[i] = Polynomial::constant(table_, 1, order_);
      }
      add_reduced_input(std::move(t));
      if (found_unit_) break;
    }
  }

  void run() {
    while (!found_unit_ && !pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        auto c = order_->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      Pair pr = *best;
      pairs_.erase(best);
      pending_.erase({pr.i, pr.j});
      if (opts_.use_criteria && chain_skip(pr)) {
        ++stats_.skipped_chain;
        continue;
      }
      Tracked s = spoly(pr.i, pr.j);
      reduce_tracked(s);
      if (s.poly.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(std::move(s));
    }
  }

  TrackedBasis finish() {
    std::vector<Tracked> kept;
    if (found_unit_) {
      kept.push_back(std::move(basis_[unit_index_]));
    } else {
      std::vector<std::size_t> idx(basis_.size());
      for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        auto c = order_->compare(basis_[a].poly.leading_monomial(), basis_[b].poly.leading_monomial());
        if (c != 0) return c < 0;
        return a < b;
      });
      for (auto k : idx) {
        const auto& lm = basis_[k].poly.leading_monomial();
        bool redundant = false;
        for (const auto& t : kept) {
          if (divides(t.poly.leading_monomial(), lm)) {
            redundant = true;
            break;
          }
        }
        if (!redundant) kept.push_back(std::move(basis_[k]));
      }
      // Tail reduction against the other minimal elements.
      for (std::size_t k = 0; k < kept.size(); ++k) {
        std::vector<const Polynomial*> others;
        std::vector<std::size_t> which;
        for (std::size_t l = 0; l < kept.size(); ++l) {
          if (l != k) {
            others.push_back(&kept[l].poly);
            which.push_back(l);
          }
        }
        reduce_against(kept[k], others, which, kept);
        normalize(kept[k]);
      }
    }
    if (found_unit_) normalize(kept.front());
    TrackedBasis out;
    out.basis.order = order_;
    out.basis.reduced = true;
    out.basis.stats = stats_;
    for (auto& t : kept) {
      out.basis.elements.push_back(std::move(t.poly));
      if (track_) out.representation.push_back(std::move(t.rep));
    }
    return out;
  }

 private:
  void normalize(Tracked& t) {
    const Rational c = t.poly.content();
    if (c.is_one()) return;
    const Rational inv = c.inverse();
    t.poly *= inv;
    for (auto& r : t.rep) r *= inv;
  }

  void reduce_against(Tracked& t, const std::vector<const Polynomial*>& divs, const std::vector<std::size_t>& which,
                      const std::vector<Tracked>& pool) {
    if (!track_) {
      t.poly = reduce(t.poly, divs, order_, ReductionStrategy::LargestFirst, nullptr);
      return;
    }
    std::vector<std::vector<Term>> cof(divs.size());
    t.poly = reduce(t.poly, divs, order_, ReductionStrategy::LargestFirst, &cof);
    for (std::size_t k = 0; k < divs.size(); ++k) {
      if (cof[k].empty()) continue;
      const Polynomial q = Polynomial::from_terms(table_, std::move(cof[k]), order_);
      for (std::size_t i = 0; i < ngens_; ++i) t.rep[i] -= q * pool[which[k]].rep[i];
    }
  }

  void reduce_tracked(Tracked& t) {
    std::vector<const Polynomial*> divs;
    std::vector<std::size_t> which;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      divs.push_back(&basis_[k].poly);
      which.push_back(k);
    }
    reduce_against(t, divs, which, basis_);
  }

  void add_reduced_input(Tracked t) {
    if (t.poly.is_zero()) return;
    reduce_tracked(t);
    if (t.poly.is_zero()) return;
    insert(std::move(t));
  }

  void insert(Tracked t) {
    normalize(t);
    const std::size_t n = basis_.size();
    const bool unit = t.poly.is_constant();
    basis_.push_back(std::move(t));
    if (unit) {
      found_unit_ = true;
      unit_index_ = n;
      return;
    }
    const auto& lm_new = basis_[n].poly.leading_monomial();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& lm_i = basis_[i].poly.leading_monomial();
      ++stats_.pairs_total;
      if (opts_.use_criteria && coprime(lm_i, lm_new)) {
        ++stats_.skipped_product;
        continue;
      }
      Monomial l = lcm(lm_i, lm_new);
      const auto deg = l.total_degree();
      pairs_.push_back({i, n, std::move(l), deg});
      pending_.insert({i, n});
    }
  }

  bool is_pending(std::size_t a, std::size_t b) const {
    return pending_.count({std::min(a, b), std::max(a, b)}) > 0;
  }

  bool chain_skip(const Pair& pr) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!divides(basis_[k].poly.leading_monomial(), pr.lcm)) continue;
      if (!is_pending(pr.i, k) && !is_pending(pr.j, k)) return true;
    }
    return false;
  }

  Tracked spoly(std::size_t i, std::size_t j) const {
    const auto& f = basis_[i];
    const auto& g = basis_[j];
    const Monomial l = lcm(f.poly.leading_monomial(), g.poly.leading_monomial());
    const Monomial mf = l / f.poly.leading_monomial();
    const Monomial mg = l / g.poly.leading_monomial();
    const Rational cf = f.poly.leading_coefficient().inverse();
    const Rational cg = g.poly.leading_coefficient().inverse();
    Tracked s;
    s.poly = f.poly.mul_term(mf, cf) - g.poly.mul_term(mg, cg);
    if (track_) {
      s.rep.resize(ngens_);
      for (std::size_t k = 0; k < ngens_; ++k) s.rep[k] = f.rep[k].mul_term(mf, cf) - g.rep[k].mul_term(mg, cg);
    }
    return s;
  }

  OrderPtr order_;
  BuchbergerOptions opts_;
  bool track_;
  std::size_t ngens_;
  VarTablePtr table_;
  std::vector<Tracked> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  BuchbergerStats stats_;
  bool found_unit_ = false;
  std::size_t unit_index_ = 0;
};

}  // namespace

Ideal::Ideal(std::vector<Polynomial> gens) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!generators.empty()) {
      if (!generators.front().table()->same_as(*g.table())) throw Error("incompatible rings");
    }
    generators.push_back(std::move(g));
  }
  if (generators.empty()) throw Error("ideal needs a nonzero generator");
}

Polynomial s_polynomial(const Polynomial& f_in, const Polynomial& g_in, const OrderPtr& order) {
  const Polynomial f = f_in.with_order(order);
  const Polynomial g = g_in.with_order(order);
  if (f.is_zero() || g.is_zero()) throw Error("s-polynomial of zero");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), f.leading_coefficient().inverse()) -
         g.mul_term(l / g.leading_monomial(), g.leading_coefficient().inverse());
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors, const OrderPtr& order,
                       ReductionStrategy strategy) {
  std::vector<Polynomial> ordered;
  ordered.reserve(divisors.size());
  for (const auto& d : divisors) ordered.push_back(d.with_order(order));
  return reduce(p.with_order(order), pointers(ordered), order, strategy, nullptr);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis, ReductionStrategy strategy) {
  return reduce(p.with_order(basis.order), pointers(basis.elements), basis.order, strategy, nullptr);
}

GroebnerBasis buchberger(const Ideal& ideal, const OrderPtr& order, BuchbergerOptions options) {
  Engine e(ideal, order, options, false);
  e.run();
  return e.finish().basis;
}

TrackedBasis buchberger_tracked(const Ideal& ideal, const OrderPtr& order) {
  Engine e(ideal, order, BuchbergerOptions{}, true);
  e.run();
  return e.finish();
}

bool contains_one(const GroebnerBasis& basis) {
  return std::any_of(basis.elements.begin(), basis.elements.end(),
                     [](const Polynomial& p) { return !p.is_zero() && p.is_constant(); });
}

bool is_groebner_basis(const std::vector<Polynomial>& gens, const OrderPtr& order) {
  std::vector<Polynomial> g;
  for (const auto& p : gens) {
    if (!p.is_zero()) g.push_back(p.with_order(order));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (coprime(g[i].leading_monomial(), g[j].leading_monomial())) continue;
      if (!normal_form(s_polynomial(g[i], g[j], order), g, order).is_zero()) return false;
    }
  }
  return true;
}

CofactorResult normal_form_with_cofactors(const Polynomial& p_in, const std::vector<Polynomial>& gens,
                                          const OrderPtr& order, bool complete) {
  const Polynomial p = p_in.with_order(order);
  const auto& table = p.table();
  CofactorResult out;
  out.cofactors.assign(gens.size(), Polynomial(table, order));
  std::vector<std::size_t> nz;
  std::vector<Polynomial> live;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].table()->same_as(*table)) throw Error("incompatible rings");
    if (!gens[i].is_zero()) {
      nz.push_back(i);
      live.push_back(gens[i].with_order(order));
    }
  }
  if (live.empty()) {
    out.remainder = p;
    out.unique = true;
    return out;
  }
  if (!complete) {
    std::vector<std::vector<Term>> cof(live.size());
    out.remainder = reduce(p, pointers(live), order, ReductionStrategy::LargestFirst, &cof);
    for (std::size_t k = 0; k < live.size(); ++k) {
      out.cofactors[nz[k]] = Polynomial::from_terms(table, std::move(cof[k]), order);
    }
    out.unique = is_groebner_basis(live, order);
    return out;
  }
  const TrackedBasis tb = buchberger_tracked(Ideal(live), order);
  std::vector<std::vector<Term>> cof(tb.basis.elements.size());
  out.remainder = reduce(p, pointers(tb.basis.elements), order, ReductionStrategy::LargestFirst, &cof);
  for (std::size_t k = 0; k < cof.size(); ++k) {
    if (cof[k].empty()) continue;
    const Polynomial q = Polynomial::from_terms(table, std::move(cof[k]), order);
    for (std::size_t i = 0; i < live.size(); ++i) out.cofactors[nz[i]] += q * tb.representation[k][i];
  }
  out.unique = true;
  return out;
}

std::string basis_to_text(const GroebnerBasis& basis) {
  std::string out;
  for (const auto& p : basis.elements) {
    out += p.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace mapart
