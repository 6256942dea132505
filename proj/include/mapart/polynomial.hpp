#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mapart/monomial.hpp"
#include "mapart/monomial_order.hpp"
#include "mapart/rational.hpp"
#include "mapart/var_table.hpp"

namespace mapart {

struct Term {
  Monomial mono;
  Rational coeff;
  bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted descending
/// under the polynomial's order with no zero coefficients and no repeated
/// monomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarTablePtr table, OrderPtr order = nullptr);

  static Polynomial constant(VarTablePtr table, const Rational& c, OrderPtr order = nullptr);
  static Polynomial variable(VarTablePtr table, std::size_t index, OrderPtr order = nullptr);
  static Polynomial variable(VarTablePtr table, std::string_view name, OrderPtr order = nullptr);
  static Polynomial monomial(VarTablePtr table, Monomial m, const Rational& c, OrderPtr order = nullptr);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(VarTablePtr table, std::vector<Term> terms, OrderPtr order = nullptr);
  /// Terms must already be distinct, nonzero and sorted descending under order.
  static Polynomial from_sorted_terms(VarTablePtr table, std::vector<Term> terms, OrderPtr order);

  const VarTablePtr& table() const { return table_; }
  const OrderPtr& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Value of a constant polynomial (zero polynomial -> 0).
  Rational constant_value() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  Polynomial with_order(OrderPtr order) const;
  /// Re-expresses over another table by variable name; every variable with
  /// a nonzero exponent must exist in the target.
  Polynomial embed(VarTablePtr table, OrderPtr order = nullptr) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  /// this * c * m
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  unsigned degree(std::size_t var) const;
  unsigned total_degree() const;
  bool depends_on(std::size_t var) const;
  /// Indices of variables with a nonzero exponent somewhere, ascending.
  std::vector<std::size_t> support() const;

  Polynomial derivative(std::size_t var) const;
  /// Coefficients c_k (free of var) with this = sum_k c_k var^k.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;
  /// Replace variable var by the polynomial value (over the same table).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  /// Full evaluation; values indexed like the table.
  Rational evaluate(const std::vector<Rational>& values) const;
  /// Evaluation at an integer point given by variable name. Every variable
  /// the polynomial depends on must be assigned.
  Rational evaluate_integer(const std::map<std::string, BigInt>& point) const;

  /// Positive rational c with this / c integral and primitive, sign chosen so
  /// the leading coefficient of this / c is positive. Zero -> 1.
  Rational content() const;
  /// this / content()
  Polynomial primitive_part() const;
  /// Leading coefficient scaled to 1.
  Polynomial monic() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& o) const;
  VarTablePtr table_;
  OrderPtr order_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Formats a single monomial like "q1*x^2"; the unit monomial prints as "1".
std::string format_monomial(const VarTable& table, const Monomial& m);

/// Canonical total order on polynomials over a common table: compares the
/// term sequences under the given order (monomial first, then coefficient),
/// a proper prefix being smaller. Returns <0, 0, >0.
int compare_polynomials(const Polynomial& a, const Polynomial& b, const MonomialOrder& order);

}  // namespace mapart
