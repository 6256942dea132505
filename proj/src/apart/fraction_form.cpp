#include "mapart/fraction_form.hpp"

#include "mapart/error.hpp"
#include "mapart/poly_gcd.hpp"

namespace mapart {

namespace {

void add_atom(std::vector<std::pair<Polynomial, unsigned>>& den, const Polynomial& atom, unsigned power) {
  for (auto& [a, e] : den) {
    if (a == atom) {
      e += power;
      return;
    }
  }
  den.emplace_back(atom, power);
}

unsigned power_of(const std::vector<std::pair<Polynomial, unsigned>>& den, const Polynomial& atom) {
  for (const auto& [a, e] : den) {
    if (a == atom) return e;
  }
  return 0;
}

// Divides by a syntactic product factor by factor so that the written
// factorization survives instead of being expanded first.
Fraction divide_by_expr(Fraction a, const ExprPtr& den, const VarTablePtr& table) {
  switch (den->kind) {
    case ExprKind::Mul:
      for (const auto& f : den->args) a = divide_by_expr(std::move(a), f, table);
      return a;
    case ExprKind::Neg:
      return negate(divide_by_expr(std::move(a), den->args[0], table));
    case ExprKind::Pow: {
      if (den->exponent == 0) return a;
      const Fraction base = to_fraction(den->args[0], table);
      for (unsigned k = 0; k < den->exponent; ++k) a = divide(a, base);
      return a;
    }
    default:
      return divide(a, to_fraction(den, table));
  }
}

}  // namespace

Fraction Fraction::polynomial(Polynomial p) { return Fraction{std::move(p), {}}; }

Polynomial Fraction::denominator_product() const {
  Polynomial d = Polynomial::constant(numerator.table(), 1, numerator.order());
  for (const auto& [a, e] : denominator) d *= a.pow(e);
  return d;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.numerator.is_zero()) return b;
  if (b.numerator.is_zero()) return a;
  // Common denominator: per atom the larger power.
  std::vector<std::pair<Polynomial, unsigned>> den = a.denominator;
  for (const auto& [atom, e] : b.denominator) {
    bool found = false;
    for (auto& [x, f] : den) {
      if (x == atom) {
        f = std::max(f, e);
        found = true;
      }
    }
    if (!found) den.emplace_back(atom, e);
  }
  auto lift = [&](const Fraction& f) {
    Polynomial n = f.numerator;
    for (const auto& [atom, e] : den) {
      const unsigned have = power_of(f.denominator, atom);
      if (e > have) n *= atom.pow(e - have);
    }
    return n;
  };
  Fraction out{lift(a) + lift(b), {}};
  if (!out.numerator.is_zero()) out.denominator = std::move(den);
  return out;
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  Fraction out{a.numerator * b.numerator, a.denominator};
  if (out.numerator.is_zero()) {
    out.denominator.clear();
    return out;
  }
  for (const auto& [atom, e] : b.denominator) add_atom(out.denominator, atom, e);
  return out;
}

Fraction negate(const Fraction& a) { return Fraction{-a.numerator, a.denominator}; }

Fraction divide(const Fraction& a, const Fraction& b) {
  if (b.numerator.is_zero()) throw Error("zero denominator");
  Fraction out{a.numerator, a.denominator};
  for (const auto& [atom, e] : b.denominator) out.numerator *= atom.pow(e);
  const auto sf = square_free_split(b.numerator);
  out.numerator *= sf.constant.inverse();
  if (out.numerator.is_zero()) {
    out.denominator.clear();
    return out;
  }
  for (const auto& f : sf.factors) add_atom(out.denominator, f.factor, f.multiplicity);
  return out;
}

Fraction to_fraction(const ExprPtr& e, const VarTablePtr& table) {
  switch (e->kind) {
    case ExprKind::Number:
      return Fraction::polynomial(Polynomial::constant(table, Rational(e->number)));
    case ExprKind::Variable: {
      if (!table->index_of(e->name)) throw Error("unknown variable '" + e->name + "'");
      return Fraction::polynomial(Polynomial::variable(table, e->name));
    }
    case ExprKind::Add: {
      Fraction acc = Fraction::polynomial(Polynomial(table));
      for (const auto& a : e->args) acc = acc + to_fraction(a, table);
      return acc;
    }
    case ExprKind::Mul: {
      Fraction acc = Fraction::polynomial(Polynomial::constant(table, 1));
      for (const auto& a : e->args) acc = acc * to_fraction(a, table);
      return acc;
    }
    case ExprKind::Div:
      return divide_by_expr(to_fraction(e->args[0], table), e->args[1], table);
    case ExprKind::Neg:
      return negate(to_fraction(e->args[0], table));
    case ExprKind::Pow: {
      const Fraction base = to_fraction(e->args[0], table);
      if (e->exponent == 0) {
        if (base.numerator.is_zero()) throw Error("0^0 is undefined");
        return Fraction::polynomial(Polynomial::constant(table, 1));
      }
      Fraction out{base.numerator.pow(e->exponent), base.denominator};
      for (auto& [atom, p] : out.denominator) p *= e->exponent;
      return out;
    }
  }
  throw InvariantError("unhandled expression kind");
}

std::vector<Fraction> to_fraction_terms(const ExprPtr& e, const VarTablePtr& table) {
  std::vector<Fraction> out;
  if (e->kind == ExprKind::Add) {
    for (const auto& a : e->args) {
      auto sub = to_fraction_terms(a, table);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  } else if (e->kind == ExprKind::Neg && e->args[0]->kind == ExprKind::Add) {
    for (auto& f : to_fraction_terms(e->args[0], table)) out.push_back(negate(f));
  } else {
    out.push_back(to_fraction(e, table));
  }
  return out;
}

Polynomial to_polynomial(const ExprPtr& e, const VarTablePtr& table) {
  Fraction f = to_fraction(e, table);
  if (!f.denominator.empty()) throw Error("expected a polynomial, got a fraction: " + print_expression(e));
  return f.numerator;
}

}  // namespace mapart
