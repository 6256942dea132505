#include "mapart/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "mapart/error.hpp"

namespace mapart {

namespace {

void sort_and_merge(std::vector<Term>& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].mono == acc.mono) {
      acc.coeff += terms[j].coeff;
      ++j;
    }
    if (!acc.coeff.is_zero()) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(VarTablePtr table, OrderPtr order) : table_(std::move(table)), order_(std::move(order)) {
  if (!table_) throw InvariantError("polynomial without variable table");
  if (!order_) order_ = table_->default_order();
  if (order_->nvars() != table_->size()) throw Error("monomial order does not match variable table");
}

Polynomial Polynomial::constant(VarTablePtr table, const Rational& c, OrderPtr order) {
  Polynomial p(std::move(table), std::move(order));
  if (!c.is_zero()) p.terms_.push_back({Monomial(p.table_->size()), c});
  return p;
}

Polynomial Polynomial::variable(VarTablePtr table, std::size_t index, OrderPtr order) {
  Polynomial p(std::move(table), std::move(order));
  Monomial m(p.table_->size());
  m.set(index, 1);
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Polynomial Polynomial::variable(VarTablePtr table, std::string_view name, OrderPtr order) {
  const auto idx = table->require(name);
  return variable(std::move(table), idx, std::move(order));
}

Polynomial Polynomial::monomial(VarTablePtr table, Monomial m, const Rational& c, OrderPtr order) {
  Polynomial p(std::move(table), std::move(order));
  if (m.size() != p.table_->size()) throw InvariantError("monomial does not match table");
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(VarTablePtr table, std::vector<Term> terms, OrderPtr order) {
  Polynomial p(std::move(table), std::move(order));
  for (const auto& t : terms) {
    if (t.mono.size() != p.table_->size()) throw InvariantError("monomial does not match table");
  }
  sort_and_merge(terms, *p.order_);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_sorted_terms(VarTablePtr table, std::vector<Term> terms, OrderPtr order) {
  Polynomial p(std::move(table), std::move(order));
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Polynomial::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one(); }

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw InvariantError("constant_value of non-constant polynomial");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InvariantError("leading term of zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::with_order(OrderPtr order) const {
  if (!order) order = table_->default_order();
  if (order == order_ || *order == *order_) {
    Polynomial p = *this;
    p.order_ = std::move(order);
    return p;
  }
  return from_terms(table_, terms_, std::move(order));
}

Polynomial Polynomial::embed(VarTablePtr table, OrderPtr order) const {
  std::vector<std::size_t> map(table_->size());
  for (std::size_t i = 0; i < table_->size(); ++i) {
    auto idx = table->index_of(table_->name(i));
    map[i] = idx ? *idx : static_cast<std::size_t>(-1);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(table->size());
    for (std::size_t i = 0; i < table_->size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] == static_cast<std::size_t>(-1)) throw Error("variable '" + table_->name(i) + "' missing in target ring");
      m.set(map[i], t.mono[i]);
    }
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(std::move(table), std::move(out), std::move(order));
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!table_ || !o.table_ || !table_->same_as(*o.table_)) throw Error("incompatible rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o_in) {
  check_compatible(o_in);
  const Polynomial* o = &o_in;
  Polynomial converted;
  if (o->order_ != order_ && !(*o->order_ == *order_)) {
    converted = o_in.with_order(order_);
    o = &converted;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o->terms_.size());
  auto a = terms_.begin();
  auto b = o->terms_.begin();
  while (a != terms_.end() && b != o->terms_.end()) {
    const auto c = order_->compare(a->mono, b->mono);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (!s.is_zero()) out.push_back({std::move(a->mono), std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != o->terms_.end(); ++b) out.push_back(*b);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  Polynomial p(a.table_, a.order_);
  sort_and_merge(prod, *p.order_);
  p.terms_ = std::move(prod);
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  Polynomial p(table_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the order of terms
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(table_, 1, order_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

unsigned Polynomial::degree(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.total_degree());
  return d;
}

bool Polynomial::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[var] != 0; });
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < table_->size(); ++v) {
    if (depends_on(v)) out.push_back(v);
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({std::move(m), t.coeff * Rational(static_cast<long>(e))});
  }
  return from_terms(table_, std::move(out), order_);
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree(var) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    const unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({std::move(m), t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(table_, std::move(b), order_));
  if (is_zero()) out.assign(1, Polynomial(table_, order_));
  return out;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_compatible(value);
  const auto coeffs = coefficients_in(var);
  Polynomial result(table_, order_);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    result = result * value + coeffs[k];
  }
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& values) const {
  if (values.size() != table_->size()) throw Error("evaluation point has wrong arity");
  Rational sum;
  for (const auto& t : terms_) {
    Rational prod = t.coeff;
    for (std::size_t v = 0; v < table_->size(); ++v) {
      for (unsigned k = 0; k < t.mono[v]; ++k) prod *= values[v];
    }
    sum += prod;
  }
  return sum;
}

Rational Polynomial::evaluate_integer(const std::map<std::string, BigInt>& point) const {
  std::vector<Rational> values(table_->size());
  for (auto v : support()) {
    auto it = point.find(table_->name(v));
    if (it == point.end()) throw Error("missing value for variable '" + table_->name(v) + "'");
    values[v] = Rational(it->second);
  }
  return evaluate(values);
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 1;
  BigInt g = 0;
  BigInt l = 1;
  for (const auto& t : terms_) {
    const BigInt n = t.coeff.numerator();
    const BigInt d = t.coeff.denominator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  Rational c(g, l);
  return leading_coefficient().sign() < 0 ? -c : c;
}

Polynomial Polynomial::primitive_part() const {
  if (terms_.empty()) return *this;
  return *this * content().inverse();
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coefficient().inverse();
}

std::string format_monomial(const VarTable& table, const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += table.name(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (c.sign() < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += format_monomial(*table_, t.mono);
    } else {
      out += c.to_string() + "*" + format_monomial(*table_, t.mono);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.table_ || !b.table_) return a.table_ == b.table_;
  if (!a.table_->same_as(*b.table_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.order_ == b.order_ || *a.order_ == *b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.with_order(a.order_).terms_;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

int compare_polynomials(const Polynomial& a_in, const Polynomial& b_in, const MonomialOrder& order) {
  auto sorted = [&](const Polynomial& p) {
    std::vector<Term> t = p.terms();
    std::sort(t.begin(), t.end(), [&](const Term& x, const Term& y) { return order.compare(x.mono, y.mono) > 0; });
    return t;
  };
  const auto a = sorted(a_in);
  const auto b = sorted(b_in);
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const auto c = order.compare(a[i].mono, b[i].mono);
    if (c != 0) return c > 0 ? 1 : -1;
    if (a[i].coeff != b[i].coeff) return a[i].coeff < b[i].coeff ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

}  // namespace mapart
