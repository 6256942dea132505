#include "mapart/apart.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "mapart/error.hpp"
#include "mapart/factor_base.hpp"
#include "mapart/poly_gcd.hpp"

namespace mapart {

namespace {

bool needs_parens(const Polynomial& p) {
  if (p.size() > 1) return true;
  const std::string s = p.to_string();
  return s.find_first_of("*^") != std::string::npos;
}

std::string factor_power(const Polynomial& d, unsigned power) {
  std::string s = d.to_string();
  if (power == 1) return needs_parens(d) ? "(" + s + ")" : s;
  return (needs_parens(d) ? "(" + s + ")" : s) + "^" + std::to_string(power);
}

Polynomial q_power_product(const VarTablePtr& ring, const DenominatorSet& dens,
                           const std::map<std::size_t, unsigned>& powers) {
  Monomial m(ring->size());
  for (const auto& [idx, p] : powers) {
    const auto v = ring->require(dens.symbols.at(idx));
    m.set(v, m[v] + p);
  }
  return Polynomial::monomial(ring, std::move(m), 1);
}

}  // namespace

Polynomial RationalFunction::denominator() const {
  Polynomial d = Polynomial::constant(numerator.table(), 1);
  for (const auto& [f, e] : factors) d *= f.pow(e);
  return d;
}

RationalFunction normalize_and_factor(const Fraction& f, const std::vector<Polynomial>& known) {
  const VarTablePtr& table = f.numerator.table();
  RationalFunction out;
  out.numerator = f.numerator;
  if (out.numerator.is_zero()) return out;

  FactorBase base(table);
  for (const auto& k : known) base.add_fixed(k);
  for (const auto& [atom, e] : f.denominator) base.add(atom);

  std::vector<std::pair<Polynomial, unsigned>> current = f.denominator;
  std::map<std::size_t, unsigned> powers;
  while (true) {
    powers.clear();
    for (const auto& [atom, e] : current) {
      const auto d = base.decompose(atom);
      Rational c = 1;
      for (unsigned k = 0; k < e; ++k) c *= d.constant;
      out.numerator *= c.inverse();
      for (const auto& [idx, p] : d.powers) powers[idx] += p * e;
    }
    for (auto& [idx, alpha] : powers) {
      while (alpha > 0) {
        auto q = try_divide(out.numerator, base.factors()[idx]);
        if (!q) break;
        out.numerator = std::move(*q);
        --alpha;
      }
    }
    bool refined = false;
    for (const auto& [idx, alpha] : powers) {
      if (alpha == 0) continue;
      const Polynomial g = gcd(out.numerator, base.factors()[idx]);
      if (!g.is_constant()) {
        base.add(g);
        refined = true;
        break;
      }
    }
    current.clear();
    for (const auto& [idx, alpha] : powers) {
      if (alpha > 0) current.emplace_back(base.factors()[idx], alpha);
    }
    if (!refined) break;
  }

  std::vector<std::pair<Polynomial, unsigned>> fixed, fresh;
  for (const auto& [idx, alpha] : powers) {
    if (alpha == 0) continue;
    (idx < base.fixed_count() ? fixed : fresh).emplace_back(base.factors()[idx], alpha);
  }
  auto pos_known = [&](const Polynomial& p) {
    for (std::size_t k = 0; k < base.fixed_count(); ++k) {
      if (base.factors()[k] == p) return k;
    }
    return std::size_t{0};
  };
  std::sort(fixed.begin(), fixed.end(), [&](const auto& a, const auto& b) { return pos_known(a.first) < pos_known(b.first); });
  std::sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) { return canonical_factor_less(a.first, b.first); });
  out.factors = std::move(fixed);
  out.factors.insert(out.factors.end(), fresh.begin(), fresh.end());
  return out;
}

RationalFunction normalize_and_factor(const ExprPtr& e, const VarTablePtr& xtable, const std::vector<Polynomial>& known) {
  return normalize_and_factor(to_fraction(e, xtable), known);
}

Polynomial lift_to_ring(const Polynomial& p, const VarTablePtr& ring) { return p.embed(ring); }

AbbreviatedExpression abbreviate_denominators(const ExprPtr& e, const VarTablePtr& xtable_in,
                                              const std::optional<DenominatorSet>& known, bool strict) {
  const VarTablePtr xtable = known ? known->xtable : xtable_in;
  std::vector<Polynomial> known_polys;
  if (known) {
    known->validate();
    known_polys = known->factors;
  }
  std::vector<RationalFunction> parts;
  for (const auto& term : to_fraction_terms(e, xtable)) parts.push_back(normalize_and_factor(term, known_polys));

  FactorBase global(xtable);
  for (const auto& k : known_polys) global.add_fixed(k);
  for (const auto& rf : parts) {
    for (const auto& [f, a] : rf.factors) global.add(f);
  }
  const std::size_t nfixed = global.fixed_count();
  std::vector<std::size_t> perm(global.factors().size() - nfixed);
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return canonical_factor_less(global.factors()[nfixed + a], global.factors()[nfixed + b]);
  });
  global.sort_free(perm);
  if (strict && global.factors().size() > nfixed) {
    throw Error("unknown denominator factor " + global.factors()[nfixed].to_string());
  }

  AbbreviatedExpression out;
  out.dens = known ? *known : DenominatorSet{xtable, {}, {}};
  for (std::size_t k = nfixed; k < global.factors().size(); ++k) out.dens.append(global.factors()[k]);
  out.ring = out.dens.ring();
  out.body = Polynomial(out.ring);
  for (const auto& rf : parts) {
    Polynomial t = lift_to_ring(rf.numerator, out.ring);
    std::map<std::size_t, unsigned> powers;
    for (const auto& [f, a] : rf.factors) {
      const auto d = global.decompose(f);
      Rational c = 1;
      for (unsigned k = 0; k < a; ++k) c *= d.constant;
      t *= c.inverse();
      for (const auto& [idx, p] : d.powers) powers[idx] += p * a;
    }
    out.body += t * q_power_product(out.ring, out.dens, powers);
  }
  return out;
}

GroebnerBasis apart_basis(const DenominatorSet& dens, const OrderSpec& spec) {
  dens.validate();
  const VarTablePtr ring = dens.ring();
  const OrderPtr order = spec.to_order(*ring);
  if (dens.empty()) {
    GroebnerBasis gb;
    gb.order = order;
    gb.reduced = true;
    return gb;
  }
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < dens.size(); ++i) {
    gens.push_back(Polynomial::variable(ring, dens.symbols[i]) * lift_to_ring(dens.factors[i], ring) -
                   Polynomial::constant(ring, 1));
  }
  return buchberger(Ideal(std::move(gens)), order);
}

AbbreviatedExpression apart_reduce(const AbbreviatedExpression& expr, const GroebnerBasis& basis, std::size_t jobs) {
  AbbreviatedExpression out = expr;
  const Polynomial& body = expr.body;
  if (jobs <= 1 || body.size() < 2 * jobs) {
    out.body = normal_form(body, basis);
    return out;
  }
  const auto& terms = body.terms();
  const std::size_t chunk = (terms.size() + jobs - 1) / jobs;
  std::vector<std::future<Polynomial>> futures;
  for (std::size_t start = 0; start < terms.size(); start += chunk) {
    const std::size_t end = std::min(terms.size(), start + chunk);
    std::vector<Term> part(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.begin() + static_cast<std::ptrdiff_t>(end));
    Polynomial piece = Polynomial::from_sorted_terms(body.table(), std::move(part), body.order());
    futures.push_back(std::async(std::launch::async, [piece = std::move(piece), &basis] { return normal_form(piece, basis); }));
  }
  Polynomial sum(body.table(), basis.order);
  for (auto& f : futures) sum += f.get();
  out.body = std::move(sum);
  return out;
}

Polynomial apart_reduce_iterated(const Polynomial& numerator, const std::vector<std::pair<std::string, unsigned>>& qpowers,
                                 const GroebnerBasis& basis, std::optional<std::size_t> partition_size) {
  if (partition_size && *partition_size == 0) throw Error("partition size must be positive");
  const VarTablePtr ring = basis.elements.empty() ? numerator.table() : basis.table();
  const OrderPtr& order = basis.order;
  auto reduce = [&](const Polynomial& w) {
    if (!partition_size || w.size() <= *partition_size) return normal_form(w, basis);
    Polynomial sum(ring, order);
    const auto& terms = w.terms();
    for (std::size_t start = 0; start < terms.size(); start += *partition_size) {
      const std::size_t end = std::min(terms.size(), start + *partition_size);
      std::vector<Term> part(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.begin() + static_cast<std::ptrdiff_t>(end));
      sum += normal_form(Polynomial::from_sorted_terms(ring, std::move(part), w.order()), basis);
    }
    return normal_form(sum, basis);
  };
  std::vector<std::pair<std::size_t, unsigned>> syms;
  for (const auto& [name, p] : qpowers) {
    if (p > 0) syms.emplace_back(ring->require(name), p);
  }
  auto unit = [&](std::size_t v) {
    Monomial m(ring->size());
    m.set(v, 1);
    return m;
  };
  std::stable_sort(syms.begin(), syms.end(),
                   [&](const auto& a, const auto& b) { return order->compare(unit(a.first), unit(b.first)) < 0; });
  Polynomial w = reduce(numerator.embed(ring, order));
  for (const auto& [v, p] : syms) {
    Monomial m(ring->size());
    m.set(v, p);
    w = reduce(w.mul_term(m, 1));
  }
  return w;
}

std::vector<ApartTerm> restore_terms(const Polynomial& body, const DenominatorSet& dens) {
  const VarTablePtr& ring = body.table();
  std::vector<std::optional<std::size_t>> qidx(ring->size()), xidx(ring->size());
  for (std::size_t v = 0; v < ring->size(); ++v) {
    qidx[v] = dens.symbol_index(ring->name(v));
    if (!qidx[v]) {
      xidx[v] = dens.xtable->index_of(ring->name(v));
      if (!xidx[v]) throw Error("symbol '" + ring->name(v) + "' is neither a denominator symbol nor a variable");
    }
  }
  const MonomialOrder& order = *body.order();
  std::map<Monomial, std::vector<Term>, DescendingBy> groups(DescendingBy{&order});
  for (const auto& t : body.terms()) {
    Monomial qm(ring->size());
    Monomial xm(dens.xtable->size());
    for (std::size_t v = 0; v < ring->size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (qidx[v]) {
        qm.set(v, t.mono[v]);
      } else {
        xm.set(*xidx[v], t.mono[v]);
      }
    }
    groups[qm].push_back({std::move(xm), t.coeff});
  }
  std::vector<ApartTerm> out;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    ApartTerm term;
    term.numerator = Polynomial::from_terms(dens.xtable, it->second);
    for (std::size_t v = 0; v < ring->size(); ++v) {
      if (qidx[v] && it->first[v] > 0) term.factors.emplace_back(*qidx[v], it->first[v]);
    }
    std::sort(term.factors.begin(), term.factors.end());
    out.push_back(std::move(term));
  }
  return out;
}

std::string format_apart_term(const ApartTerm& t, const DenominatorSet& dens) {
  if (t.factors.empty()) return t.numerator.to_string();
  const Rational c = t.numerator.content();
  const Polynomial rest = t.numerator * c.inverse();
  const BigInt a = c.numerator();
  const BigInt b = c.denominator();
  const BigInt abs_a = abs(a);
  std::string num;
  if (rest.is_one()) {
    num = abs_a.get_str();
  } else {
    num = (abs_a == 1 ? std::string() : abs_a.get_str() + "*") + (rest.size() > 1 ? "(" + rest.to_string() + ")" : rest.to_string());
  }
  std::vector<std::string> den;
  if (b != 1) den.push_back(b.get_str());
  for (const auto& [idx, p] : t.factors) den.push_back(factor_power(dens.factors.at(idx), p));
  std::string d;
  for (std::size_t k = 0; k < den.size(); ++k) {
    if (k > 0) d += "*";
    d += den[k];
  }
  if (den.size() > 1) d = "(" + d + ")";
  return (a < 0 ? "-" : "") + num + "/" + d;
}

std::string format_apart_sum(const std::vector<ApartTerm>& terms, const DenominatorSet& dens) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::string s = format_apart_term(terms[k], dens);
    if (k == 0) {
      out = s;
    } else if (s.front() == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

Fraction recombine(const std::vector<ApartTerm>& terms, const DenominatorSet& dens) {
  Fraction acc = Fraction::polynomial(Polynomial(dens.xtable));
  for (const auto& t : terms) {
    Fraction f = Fraction::polynomial(t.numerator);
    for (const auto& [idx, p] : t.factors) f.denominator.emplace_back(dens.factors.at(idx), p);
    acc = acc + f;
  }
  return acc;
}

VarTablePtr default_xtable(const std::vector<ExprPtr>& exprs) {
  std::set<std::string> names;
  for (const auto& e : exprs) {
    for (auto& v : expression_variables(e)) names.insert(v);
  }
  return VarTable::make(std::vector<std::string>(names.begin(), names.end()));
}

std::string ApartResult::to_string() const { return format_apart_sum(terms, reduced.dens); }

std::string AbbreviatedExpression::to_string() const {
  std::string out = "{" + body.to_string() + ", {";
  for (std::size_t i = 0; i < dens.size(); ++i) {
    if (i > 0) out += ", ";
    out += dens.symbols[i] + "->1/" + factor_power(dens.factors[i], 1);
  }
  return out + "}}";
}

ApartResult multivariate_apart(const ExprPtr& e, const VarTablePtr& xtable_in, const ApartOptions& options,
                               const std::optional<DenominatorSet>& known) {
  const VarTablePtr xtable = known ? known->xtable : xtable_in;
  std::vector<Polynomial> known_polys;
  if (known) {
    known->validate();
    known_polys = known->factors;
  }
  const RationalFunction rf = normalize_and_factor(e, xtable, known_polys);

  ApartResult r;
  DenominatorSet dens = known ? *known : DenominatorSet{xtable, {}, {}};
  for (const auto& [f, a] : rf.factors) {
    if (!dens.index_of(f)) dens.append(f);
  }
  const VarTablePtr ring = dens.ring();
  std::map<std::size_t, unsigned> powers;
  std::vector<std::pair<std::string, unsigned>> qpowers;
  for (const auto& [f, a] : rf.factors) {
    const auto idx = *dens.index_of(f);
    powers[idx] += a;
    qpowers.emplace_back(dens.symbols[idx], a);
  }
  r.input.dens = dens;
  r.input.ring = ring;
  r.input.body = lift_to_ring(rf.numerator, ring) * q_power_product(ring, dens, powers);

  if (options.order) {
    r.spec = *options.order;
  } else {
    r.spec = options.lex_q ? lex_q_order(dens) : apart_order(dens);
  }
  r.spec = promote_spurious(r.spec, options.promote);
  r.basis = apart_basis(dens, r.spec);
  r.reduced = r.input;
  if (options.iterated) {
    r.reduced.body = apart_reduce_iterated(lift_to_ring(rf.numerator, ring), qpowers, r.basis, options.partition_size);
  } else {
    r.reduced = apart_reduce(r.input, r.basis, options.jobs);
  }
  r.terms = restore_terms(r.reduced.body, dens);
  return r;
}

}  // namespace mapart
