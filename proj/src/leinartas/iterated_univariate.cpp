#include <algorithm>

#include "mapart/error.hpp"
#include "mapart/factor_base.hpp"
#include "mapart/leinartas.hpp"
#include "mapart/poly_gcd.hpp"

namespace mapart {

namespace {

// Element of Q(all variables) kept in lowest terms with a primitive
// denominator of positive leading coefficient.
struct RF {
  Polynomial num;
  Polynomial den;

  static RF make(Polynomial n, Polynomial d) {
    if (d.is_zero()) throw InvariantError("zero denominator in coefficient field");
    if (n.is_zero()) return {std::move(n), Polynomial::constant(d.table(), 1)};
    const Polynomial g = gcd(n, d);
    if (!g.is_constant()) {
      n = divexact(n, g);
      d = divexact(d, g);
    }
    const Rational c = d.content();
    return {n * c.inverse(), d * c.inverse()};
  }
  bool is_zero() const { return num.is_zero(); }
};

RF operator+(const RF& a, const RF& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den == b.den) return RF::make(a.num + b.num, a.den);
  return RF::make(a.num * b.den + b.num * a.den, a.den * b.den);
}
RF operator-(const RF& a) { return {-a.num, a.den}; }
RF operator-(const RF& a, const RF& b) { return a + (-b); }
RF operator*(const RF& a, const RF& b) { return RF::make(a.num * b.num, a.den * b.den); }
RF inverse(const RF& a) {
  if (a.is_zero()) throw InvariantError("inverse of zero");
  return RF::make(a.den, a.num);
}

// Polynomial in one variable with coefficients in Q(other variables),
// lowest degree first.
using UP = std::vector<RF>;

void trim(UP& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UP& p) { return static_cast<int>(p.size()) - 1; }

RF zero_rf(const VarTablePtr& t) { return {Polynomial(t), Polynomial::constant(t, 1)}; }

UP add(const UP& a, const UP& b, const VarTablePtr& t) {
  UP r(std::max(a.size(), b.size()), zero_rf(t));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  trim(r);
  return r;
}

UP mul(const UP& a, const UP& b, const VarTablePtr& t) {
  if (a.empty() || b.empty()) return {};
  UP r(a.size() + b.size() - 1, zero_rf(t));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

UP scale(const UP& a, const RF& c) {
  UP r;
  for (const auto& x : a) r.push_back(x * c);
  trim(r);
  return r;
}

std::pair<UP, UP> divmod(UP a, const UP& b, const VarTablePtr& t) {
  if (b.empty()) throw InvariantError("division by zero polynomial");
  const RF lc_inv = inverse(b.back());
  UP q(std::max(0, deg(a) - deg(b) + 1), zero_rf(t));
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    const RF c = a.back() * lc_inv;
    q[static_cast<std::size_t>(shift)] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - c * b[i];
    a.back() = zero_rf(t);
    trim(a);
  }
  trim(q);
  return {q, a};
}

// s with s * a == 1 mod m.
UP inverse_mod(const UP& a, const UP& m, const VarTablePtr& t) {
  UP r0 = m, r1 = divmod(a, m, t).second;
  UP s0, s1{RF::make(Polynomial::constant(t, 1), Polynomial::constant(t, 1))};
  while (deg(r1) > 0) {
    auto [q, r] = divmod(r0, r1, t);
    UP s = add(s0, scale(mul(q, s1, t), RF::make(Polynomial::constant(t, -1), Polynomial::constant(t, 1))), t);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw Error("factors are not coprime in the chosen variable");
  return divmod(scale(s1, inverse(r1[0])), m, t).second;
}

UP to_up(const Polynomial& p, std::size_t var) {
  const VarTablePtr& t = p.table();
  UP out;
  for (const auto& c : p.coefficients_in(var)) out.push_back(RF::make(c, Polynomial::constant(t, 1)));
  trim(out);
  return out;
}

class Iterator {
 public:
  Iterator(VarTablePtr table, std::vector<std::size_t> order) : t_(std::move(table)), order_(std::move(order)) {}

  void run(const Fraction& f, std::size_t level, IteratedTerm prefix, std::vector<IteratedTerm>& out) {
    const RationalFunction rf = normalize_and_factor(f);
    if (rf.numerator.is_zero()) return;
    if (level == order_.size()) {
      if (!rf.numerator.is_constant() || !rf.factors.empty()) {
        throw Error("variable order does not cover every variable");
      }
      prefix.coefficient = rf.numerator.constant_value();
      out.push_back(std::move(prefix));
      return;
    }
    const std::size_t v = order_[level];
    // Reverse order of first occurrence among the input atoms.
    std::vector<std::pair<std::size_t, std::pair<Polynomial, unsigned>>> keyed;
    for (const auto& fac : rf.factors) {
      std::size_t key = 0;
      for (std::size_t k = 0; k < f.denominator.size(); ++k) {
        if (try_divide(f.denominator[k].first, fac.first)) {
          key = k;
          break;
        }
      }
      keyed.emplace_back(key, fac);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    Polynomial outside = Polynomial::constant(t_, 1);
    std::vector<std::pair<Polynomial, unsigned>> inside;
    for (const auto& [key, fac] : keyed) {
      if (fac.first.depends_on(v)) {
        inside.push_back(fac);
      } else {
        outside *= fac.first.pow(fac.second);
      }
    }
    const Polynomial one = Polynomial::constant(t_, 1);
    UP num = to_up(rf.numerator, v);
    num = scale(num, RF::make(one, outside));
    UP den{RF::make(one, one)};
    std::vector<UP> powers;
    for (const auto& [fac, a] : inside) {
      UP p = to_up(fac.pow(a), v);
      powers.push_back(p);
      den = mul(den, p, t_);
    }
    auto [poly_part, rem] = divmod(num, den, t_);
    emit(poly_part, v, level, std::nullopt, 0, prefix, out);
    for (std::size_t j = 0; j < inside.size(); ++j) {
      UP others{RF::make(one, one)};
      for (std::size_t k = 0; k < inside.size(); ++k) {
        if (k != j) others = mul(others, powers[k], t_);
      }
      UP rj = divmod(mul(divmod(rem, powers[j], t_).second, inverse_mod(others, powers[j], t_), t_), powers[j], t_).second;
      const UP base = to_up(inside[j].first, v);
      const unsigned a = inside[j].second;
      std::vector<UP> digits;
      for (unsigned k = 0; k < a; ++k) {
        auto [q, r] = divmod(rj, base, t_);
        digits.push_back(std::move(r));
        rj = std::move(q);
      }
      // digits[k] / base^(a-k)
      for (unsigned p = 1; p <= a; ++p) emit(digits[a - p], v, level, inside[j].first, p, prefix, out);
    }
  }

 private:
  void emit(const UP& c, std::size_t v, std::size_t level, const std::optional<Polynomial>& factor, unsigned power,
            const IteratedTerm& prefix, std::vector<IteratedTerm>& out) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      IteratedTerm next = prefix;
      next.parts.push_back({v, static_cast<unsigned>(i), factor, power});
      Fraction sub = Fraction::polynomial(c[i].num);
      sub = divide(sub, Fraction::polynomial(c[i].den));
      run(sub, level + 1, std::move(next), out);
    }
  }

  VarTablePtr t_;
  std::vector<std::size_t> order_;
};

std::string var_power(const VarTable& t, std::size_t v, unsigned e) {
  if (e == 0) return "";
  return e == 1 ? t.name(v) : t.name(v) + "^" + std::to_string(e);
}

std::string factor_text(const Polynomial& f, unsigned p) {
  std::string s = f.to_string();
  const bool compound = f.size() > 1 || s.find_first_of("*^") != std::string::npos;
  if (compound) s = "(" + s + ")";
  return p == 1 ? s : s + "^" + std::to_string(p);
}

bool top_level_product(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '*' && depth == 0) return true;
  }
  return false;
}

std::string format_term(const IteratedTerm& t, const VarTable& table) {
  std::vector<const IteratedPart*> parts;
  for (auto it = t.parts.rbegin(); it != t.parts.rend(); ++it) {
    if (it->factor || it->var_power > 0) parts.push_back(&*it);
  }
  const BigInt a = t.coefficient.numerator();
  const BigInt b = t.coefficient.denominator();
  const std::string sign = a < 0 ? "-" : "";
  const BigInt abs_a = abs(a);
  if (parts.empty()) return sign + Rational(abs_a, b).to_string();
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const IteratedPart& p = *parts[k];
    const std::string vp = var_power(table, p.var, p.var_power);
    std::string num;
    std::string den;
    if (k == 0) {
      if (vp.empty()) {
        num = abs_a.get_str();
      } else {
        num = abs_a == 1 ? vp : abs_a.get_str() + "*" + vp;
      }
      if (b != 1) den = b.get_str();
    } else {
      num = vp.empty() ? "1" : vp;
    }
    if (p.factor) den += (den.empty() ? "" : "*") + factor_text(*p.factor, p.power);
    std::string piece = num;
    if (!den.empty()) {
      piece += "/" + (top_level_product(den) ? "(" + den + ")" : den);
    }
    out += (k == 0 ? "" : "*") + piece;
  }
  return sign + out;
}

}  // namespace

std::string IteratedResult::to_string() const {
  if (terms.empty()) return "0";
  const VarTable& table = *input_denominator.table();
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::string s = format_term(terms[k], table);
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

IteratedResult iterated_univariate_apart(const Fraction& r, const std::vector<std::string>& variable_order) {
  const VarTablePtr& table = r.numerator.table();
  std::vector<std::size_t> order;
  for (const auto& name : variable_order) order.push_back(table->require(name));
  for (std::size_t v = 0; v < table->size(); ++v) {
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  }
  IteratedResult result;
  const RationalFunction input = normalize_and_factor(r);
  result.input_denominator = input.denominator();
  Iterator it(table, order);
  it.run(r, 0, IteratedTerm{Rational(1), {}}, result.terms);
  for (const auto& t : result.terms) {
    for (const auto& p : t.parts) {
      if (!p.factor) continue;
      if (try_divide(result.input_denominator, *p.factor)) continue;
      bool seen = false;
      for (const auto& s : result.spurious) seen = seen || s == *p.factor;
      if (!seen) result.spurious.push_back(*p.factor);
    }
  }
  return result;
}

}  // namespace mapart
