#include <doctest.h>

#include <random>

#include "mapart/apart.hpp"
#include "mapart/error.hpp"
#include "mapart/factor_base.hpp"
#include "../support/test_support.hpp"

using namespace mapart;
using mapart::testing::agree_at_random_points;

namespace {

VarTablePtr xy() { return VarTable::make({"x", "y"}); }

std::string apart(const std::string& s, const ApartOptions& o = {}) {
  return multivariate_apart(parse_expression(s), default_xtable({parse_expression(s)}), o).to_string();
}

}  // namespace

TEST_CASE("worked example") {
  const ApartResult r = multivariate_apart(parse_expression("(2*y-x)/(y*(x+y)*(y-x))"), xy());
  CHECK(r.input.to_string() == "{q1*q2*q3*x-2*q1*q2*q3*y, {q1->1/(x-y), q2->1/y, q3->1/(x+y)}}");
  CHECK(r.spec.to_string() == "{{q3,q1},{q2},{x,y}}");
  CHECK(basis_to_text(r.basis) == "q2*y-1\nq1*x-q1*y-1\nq3*x+q3*y-1\n2*q1*q3+q2*q3-q1*q2\n");
  CHECK(r.reduced.body.to_string() == "3/2*q2*q3-1/2*q1*q2");
  CHECK(r.to_string() == "-1/(2*(x-y)*y) + 3/(2*y*(x+y))");
}

TEST_CASE("small cases") {
  CHECK(apart("5") == "5");
  CHECK(apart("0") == "0");
  CHECK(apart("1/x") == "1/x");
  CHECK(apart("(x^2-y^2)/((x-y)*y)") == "1 + x/y");
  CHECK(apart("1/((x+y)*(x-y))") == "1/((x-y)*(x+y))");
  CHECK(apart("1/x+1/x^2") == "1/x + 1/x^2");
}

TEST_CASE("options give the same function") {
  std::mt19937_64 rng(21);
  const std::string s = "(x^3*y-2*x+y^2)/((x-y)^2*y*(x+y+1)^3)";
  const std::vector<std::string> vars{"x", "y"};
  ApartOptions iter;
  iter.iterated = true;
  iter.partition_size = 3;
  ApartOptions jobs;
  jobs.jobs = 4;
  ApartOptions lex;
  lex.lex_q = true;
  const std::string base = apart(s);
  CHECK(apart(s, iter) == base);
  CHECK(apart(s, jobs) == base);
  CHECK(agree_at_random_points(s, base, vars, rng));
  CHECK(agree_at_random_points(s, apart(s, lex), vars, rng));
}

TEST_CASE("recombination on random inputs") {
  const std::vector<std::string> pool{"x-y", "y", "x+y", "x^2+y", "x+1"};
  const std::vector<std::string> vars{"x", "y"};
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    const std::string s = mapart::testing::random_function_text(pool, vars, rng);
    const ApartResult r = multivariate_apart(parse_expression(s), xy());
    const Fraction back = recombine(r.terms, r.reduced.dens);
    const Fraction orig = to_fraction(parse_expression(s), xy());
    CHECK((back.numerator * orig.denominator_product() - orig.numerator * back.denominator_product()).is_zero());
    CHECK(agree_at_random_points(s, r.to_string(), vars, rng, 2));
  }
}

TEST_CASE("known denominators and strict abbreviation") {
  const auto t = xy();
  std::vector<Polynomial> fs;
  for (const char* s : {"x-y", "y", "x+y", "x"}) fs.push_back(to_polynomial(parse_expression(s), t));
  const DenominatorSet d = DenominatorSet::make(t, fs);
  const AbbreviatedExpression a = abbreviate_denominators(parse_expression("1/(x*y)+1/(x+y)"), t, d, true);
  CHECK(a.body.to_string() == "q2*q4+q3");
  CHECK_THROWS_AS(abbreviate_denominators(parse_expression("1/(x+2)"), t, d, true), Error);
  const AbbreviatedExpression b = abbreviate_denominators(parse_expression("1/(x+2)"), t, d, false);
  CHECK(b.dens.size() == 5);
}

TEST_CASE("iterated reduction matches direct reduction") {
  const auto t = xy();
  std::vector<Polynomial> fs;
  for (const char* s : {"x-y", "y", "x+y"}) fs.push_back(to_polynomial(parse_expression(s), t));
  const DenominatorSet d = DenominatorSet::make(t, fs);
  const GroebnerBasis gb = apart_basis(d, apart_order(d));
  const auto ring = d.ring();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const Polynomial num =
        lift_to_ring(to_polynomial(parse_expression(mapart::testing::random_polynomial_text({"x", "y"}, rng, 4, 6)), t),
                     ring)
            .with_order(gb.order);
    std::uniform_int_distribution<unsigned> e(0, 3);
    std::vector<std::pair<std::string, unsigned>> qp;
    Monomial m(ring->size());
    for (std::size_t k = 0; k < 3; ++k) {
      const unsigned p = e(rng);
      qp.emplace_back(d.symbols[k], p);
      m.set(k, p);
    }
    const Polynomial direct = normal_form(num.mul_term(m, 1), gb);
    CHECK(apart_reduce_iterated(num, qp, gb) == direct);
    CHECK(apart_reduce_iterated(num, qp, gb, 1) == direct);
    CHECK(apart_reduce_iterated(num, qp, gb, 4) == direct);
  }
  CHECK_THROWS_AS(apart_reduce_iterated(Polynomial(ring, gb.order), {}, gb, 0), Error);
}

TEST_CASE("empty denominator set gives an empty basis") {
  const DenominatorSet d = DenominatorSet::make(xy(), {});
  CHECK(apart_basis(d, apart_order(d)).elements.empty());
}

TEST_CASE("factor base refinement") {
  const auto t = xy();
  FactorBase fb(t);
  fb.add(to_polynomial(parse_expression("x^2-y^2"), t));
  fb.add(to_polynomial(parse_expression("(x+y)*y"), t));
  CHECK(fb.factors().size() == 3);
  const auto dec = fb.decompose(to_polynomial(parse_expression("-3*(x-y)^2*y"), t));
  CHECK(dec.constant == Rational(-3));
  FactorBase fixed(t);
  fixed.add_fixed(to_polynomial(parse_expression("x^2-y^2"), t));
  CHECK_THROWS_AS(fixed.add(to_polynomial(parse_expression("x+y"), t)), Error);
  CHECK_THROWS_AS(fixed.add_fixed(to_polynomial(parse_expression("(x-y)^2"), t)), Error);
}
