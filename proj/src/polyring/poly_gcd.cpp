#include "mapart/poly_gcd.hpp"

#include <algorithm>

#include "mapart/error.hpp"

namespace mapart {

namespace {

// Dense univariate view: coefficient k multiplies var^k. Coefficients are
// free of var; the top entry is nonzero unless the polynomial is zero.
using UPoly = std::vector<Polynomial>;

void trim(UPoly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

bool is_zero(const UPoly& p) { return p.size() == 1 && p[0].is_zero(); }
std::size_t deg(const UPoly& p) { return p.size() - 1; }

UPoly to_upoly(const Polynomial& p, std::size_t var) {
  UPoly u = p.coefficients_in(var);
  trim(u);
  return u;
}

Polynomial from_upoly(const UPoly& u, std::size_t var, const Polynomial& like) {
  Polynomial out(like.table(), like.order());
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero()) continue;
    Monomial m(like.table()->size());
    m.set(var, static_cast<unsigned>(k));
    out += u[k].mul_term(m, 1);
  }
  return out;
}

UPoly scale(const UPoly& a, const Polynomial& c) {
  UPoly out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(x * c);
  trim(out);
  return out;
}

// lc(B)^(degA - degB + 1) * A  mod  B
UPoly prem(UPoly a, const UPoly& b) {
  const std::size_t db = deg(b);
  const Polynomial& lcb = b.back();
  std::size_t e = deg(a) + 1 - db;
  while (!is_zero(a) && deg(a) >= db) {
    const Polynomial lead = a.back();
    const std::size_t shift = deg(a) - db;
    UPoly next = scale(a, lcb);
    for (std::size_t k = 0; k < b.size(); ++k) next[k + shift] -= lead * b[k];
    next.pop_back();
    if (next.empty()) next.emplace_back(lcb.table(), lcb.order());
    trim(next);
    a = std::move(next);
    --e;
  }
  if (e > 0) a = scale(a, lcb.pow(static_cast<unsigned>(e)));
  return a;
}

std::size_t main_variable(const Polynomial& a, const Polynomial& b) {
  std::size_t best = 0;
  unsigned best_deg = 0;
  for (std::size_t v = 0; v < a.table()->size(); ++v) {
    const unsigned d = std::max(a.degree(v), b.degree(v));
    if (d > best_deg) {
      best_deg = d;
      best = v;
    }
  }
  return best;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.table(), p.order());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial subresultant_gcd(const Polynomial& pa, const Polynomial& pb, std::size_t var) {
  UPoly a = to_upoly(pa, var);
  UPoly b = to_upoly(pb, var);
  if (deg(a) < deg(b)) std::swap(a, b);
  Polynomial g = Polynomial::constant(pa.table(), 1, pa.order());
  Polynomial h = g;
  while (true) {
    const std::size_t delta = deg(a) - deg(b);
    UPoly r = prem(a, b);
    if (is_zero(r)) break;
    if (deg(r) == 0) return Polynomial::constant(pa.table(), 1, pa.order());
    const Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = divexact(c, divisor);
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divexact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  const Polynomial result = from_upoly(b, var, pa);
  return divexact(result, content_in(result, var));
}

}  // namespace

Polynomial normalize_factor(const Polynomial& p) { return p.primitive_part(); }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalize_factor(b);
  if (b.is_zero()) return normalize_factor(a);
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.table(), 1, a.order());
  if (!a.table()->same_as(*b.table())) throw Error("incompatible rings");
  const Polynomial bb = b.with_order(a.order());
  const std::size_t v = main_variable(a, bb);
  const bool in_a = a.depends_on(v);
  const bool in_b = bb.depends_on(v);
  if (!in_b) return gcd(content_in(a, v), bb);
  if (!in_a) return gcd(a, content_in(bb, v));
  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(bb, v);
  const Polynomial pa = normalize_factor(divexact(a, ca));
  const Polynomial pb = normalize_factor(divexact(bb, cb));
  return normalize_factor(gcd(ca, cb) * subresultant_gcd(pa, pb, v));
}

std::optional<Polynomial> try_divide(const Polynomial& a_in, const Polynomial& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  if (!a_in.table()->same_as(*b.table())) throw Error("incompatible rings");
  Polynomial r = a_in.with_order(b.order());
  Polynomial q(b.table(), b.order());
  const Term& lb = b.leading_term();
  for (std::size_t v = 0; v < b.table()->size(); ++v) {
    if (b.degree(v) > r.degree(v)) return r.is_zero() ? std::optional<Polynomial>(q) : std::nullopt;
  }
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!divides(lb.mono, lr.mono)) return std::nullopt;
    const Monomial m = lr.mono / lb.mono;
    const Rational c = lr.coeff / lb.coeff;
    r -= b.mul_term(m, c);
    q += Polynomial::monomial(b.table(), m, c, b.order());
  }
  return q.with_order(a_in.order());
}

Polynomial divexact(const Polynomial& a, const Polynomial& b) {
  auto q = try_divide(a, b);
  if (!q) throw NotDivisible();
  return *std::move(q);
}

namespace {

void square_free_rec(const Polynomial& p, std::vector<SquareFreeFactor>& out) {
  if (p.is_constant()) return;
  std::size_t v = 0;
  unsigned best = 0;
  for (std::size_t i = 0; i < p.table()->size(); ++i) {
    if (p.degree(i) > best) {
      best = p.degree(i);
      v = i;
    }
  }
  const Polynomial cont = content_in(p, v);
  const Polynomial f = normalize_factor(divexact(p, cont));
  // Yun's algorithm with respect to v
  const Polynomial df = f.derivative(v);
  const Polynomial g = gcd(f, df);
  Polynomial b = divexact(f, g);
  Polynomial c = divexact(df, g);
  Polynomial d = c - b.derivative(v);
  for (unsigned i = 1; !b.is_constant(); ++i) {
    const Polynomial a = gcd(b, d);
    if (!a.is_constant()) out.push_back({normalize_factor(a), i});
    b = divexact(b, a);
    c = divexact(d, a);
    d = c - b.derivative(v);
  }
  square_free_rec(cont, out);
}

}  // namespace

SquareFreeDecomposition square_free_split(const Polynomial& p) {
  if (p.is_zero()) throw Error("square-free decomposition of zero");
  SquareFreeDecomposition out;
  square_free_rec(p, out.factors);
  std::stable_sort(out.factors.begin(), out.factors.end(), [&](const SquareFreeFactor& a, const SquareFreeFactor& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    return compare_polynomials(a.factor, b.factor, *p.order()) > 0;
  });
  Polynomial rest = p;
  for (const auto& f : out.factors) rest = divexact(rest, f.factor.pow(f.multiplicity));
  if (!rest.is_constant()) throw InvariantError("square-free recombination left a non-constant cofactor");
  out.constant = rest.constant_value();
  return out;
}

}  // namespace mapart
