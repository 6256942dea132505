#include <doctest.h>

#include <random>

#include "mapart/apart.hpp"
#include "mapart/leinartas.hpp"
#include "../support/test_support.hpp"

using namespace mapart;

namespace {

VarTablePtr xy() { return VarTable::make({"x", "y"}); }
Polynomial P(const std::string& s) { return to_polynomial(parse_expression(s), xy()); }

std::string leinartas_text(const std::string& s, LeinartasDecomposition* out = nullptr) {
  const LeinartasDecomposition d = leinartas_decompose(normalize_and_factor(parse_expression(s), xy()));
  if (out) *out = d;
  return format_apart_sum(d.terms, DenominatorSet::make(xy(), d.factors));
}

}  // namespace

TEST_CASE("common zeros") {
  CHECK(have_common_zero({P("x^2+y"), P("x-y")}));
  CHECK_FALSE(have_common_zero({P("x"), P("x+1")}));
  CHECK(have_common_zero({}));
}

TEST_CASE("nullstellensatz certificate") {
  const auto h = nullstellensatz_cofactors({{P("x-1"), 1}, {P("x+1"), 1}});
  REQUIRE(h.has_value());
  CHECK(((*h)[0] * P("x-1") + (*h)[1] * P("x+1")).is_one());
  CHECK_FALSE(nullstellensatz_cofactors({{P("x"), 1}, {P("y"), 1}}).has_value());
}

TEST_CASE("annihilators") {
  const auto a = annihilator({P("x-y"), P("y"), P("x+y")});
  REQUIRE(a.has_value());
  CHECK(substitute_factors(*a).is_zero());
  CHECK(a->polynomial.total_degree() == 1);
  CHECK(is_algebraically_independent({P("x+y"), P("x-y")}));
  CHECK_FALSE(is_algebraically_independent({P("x"), P("x^2")}));
}

TEST_CASE("decompositions verify and recombine") {
  std::mt19937_64 rng(31);
  for (const std::string s : {"(2*x-y)/(x*(x+y)*(x-y))", "1/(x*(x+1))", "1/((x-1)*(x+1)^2)", "x/((x^2+y)*(x-y)*y)",
                              "(x+y^2)/((x-y)^2*(x+y))"}) {
    LeinartasDecomposition d;
    const std::string out = leinartas_text(s, &d);
    CHECK(verify_leinartas_form(d.terms, d.factors).ok());
    CHECK(mapart::testing::agree_at_random_points(s, out, {"x", "y"}, rng));
  }
  CHECK(leinartas_text("1/(x*(x+1))") == "1/x - 1/(x+1)");
}

TEST_CASE("verification catches violations") {
  const std::vector<Polynomial> fs{P("x"), P("x+1")};
  std::vector<LeinartasTerm> bad{LeinartasTerm{P("1"), {{0, 1}, {1, 1}}}};
  const LeinartasReport r = verify_leinartas_form(bad, fs);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.terms[0].common_zero);
}

TEST_CASE("iterated univariate partial fractions") {
  const auto x = VarTable::make({"x"});
  const IteratedResult a = iterated_univariate_apart(to_fraction(parse_expression("x/((x-1)*(x+1)^2)"), x), {"x"});
  CHECK(a.to_string() == "-1/(4*(x+1)) + 1/(2*(x+1)^2) + 1/(4*(x-1))");
  CHECK(a.spurious.empty());
  const IteratedResult b = iterated_univariate_apart(to_fraction(parse_expression("1/((x+y)*(x-y))"), xy()), {"x", "y"});
  CHECK(b.to_string() == "1/(2*y)*1/(x-y) - 1/(2*y)*1/(x+y)");
  REQUIRE(b.spurious.size() == 1);
  CHECK(b.spurious[0].to_string() == "y");
  const IteratedResult c = iterated_univariate_apart(to_fraction(parse_expression("1/((x+y)*(x-y))"), xy()), {"y", "x"});
  REQUIRE(c.spurious.size() == 1);
  CHECK(c.spurious[0].to_string() == "x");
}
