#include <doctest.h>

#include <random>
#include <sstream>

#include "mapart/error.hpp"
#include "mapart/expr.hpp"
#include "mapart/reconstruct.hpp"

using namespace mapart;

namespace {

VarTablePtr xy() { return VarTable::make({"x", "y"}); }
Polynomial P(const std::string& s) { return to_polynomial(parse_expression(s), xy()); }
Fraction F(const std::string& s) { return to_fraction(parse_expression(s), xy()); }

AnchorPoint anchor_at(long x, long y, const std::vector<Polynomial>& fs) {
  AnchorPoint a;
  a.assignment = {{"x", BigInt(x)}, {"y", BigInt(y)}};
  a.primes = *anchor_primes(fs, a.assignment);
  return a;
}

}  // namespace

TEST_CASE("anchor primes") {
  const std::vector<Polynomial> fs{P("x-y"), P("y")};
  std::string why;
  CHECK(anchor_primes(fs, {{"x", BigInt(7)}, {"y", BigInt(5)}}, &why) == std::vector<BigInt>{2, 5});
  CHECK_FALSE(anchor_primes(fs, {{"x", BigInt(5)}, {"y", BigInt(5)}}, &why));
  CHECK(why == "factor 1 vanishes");
  CHECK_FALSE(anchor_primes(fs, {{"x", BigInt(4)}, {"y", BigInt(1)}}, &why));
  CHECK(why == "factor 2 evaluates to a unit");
  CHECK_FALSE(anchor_primes(fs, {{"x", BigInt(14)}, {"y", BigInt(7)}}, &why));
  CHECK(why == "factors 1 and 2 share prime 7");
  CHECK_FALSE(anchor_primes(fs, {{"x", BigInt(13)}, {"y", BigInt(5)}}, &why));
  CHECK(why == "largest prime of factor 1 is repeated");
}

TEST_CASE("anchor search") {
  const std::vector<Polynomial> fs{P("x-y"), P("y"), P("x+y"), P("x^2+y")};
  const AnchorPoint a = find_anchor(fs);
  CHECK(anchor_primes(fs, a.assignment) == a.primes);
  CHECK(find_anchor(fs).assignment == a.assignment);
  AnchorSearchOptions tiny;
  tiny.lo = 1;
  tiny.hi = 1;
  tiny.budget = 3;
  CHECK_THROWS_AS(find_anchor(fs, tiny), Error);
}

TEST_CASE("denominator guess") {
  const std::vector<Polynomial> fs{P("x-y"), P("y")};
  const AnchorPoint a = anchor_at(7, 5, fs);
  const BlackBoxOracle r = BlackBoxOracle::from_fraction(F("1/((x-y)*y^2)"));
  const DenominatorGuess g = guess_denominator(r.evaluate({Rational(7), Rational(5)}), a, fs);
  CHECK(g.exponents == std::vector<unsigned>{1, 2});
  CHECK(g.complete());
  const BlackBoxOracle s = BlackBoxOracle::from_fraction(F("1/((x-y)*y^2*(x+y+1))"));
  const DenominatorGuess h = guess_denominator(s.evaluate({Rational(7), Rational(5)}), a, fs);
  CHECK_FALSE(h.complete());
  REQUIRE(h.residual.size() == 1);
  CHECK(h.residual[0].prime == 13);
}

TEST_CASE("slice reconstruction") {
  const std::vector<Polynomial> fs{P("x-y"), P("y")};
  const AnchorPoint a = anchor_at(7, 5, fs);
  const BlackBoxOracle r = BlackBoxOracle::from_fraction(F("1/((x-y)*y^2)"));
  const DenominatorGuess g = guess_denominator(r.evaluate({Rational(7), Rational(5)}), a, fs);
  const BlackBoxOracle f = BlackBoxOracle::from_fraction(F("(x^2+1)/((x-y)*y^2)"));
  const UnivariateReconstruction u = deflate_and_reconstruct_univariate(f, g, "x", 5);
  CHECK(u.samples == 4);
  CHECK_FALSE(u.used_fallback);
  CHECK(u.numerator.to_string() == "1/25*x^2+1/25");
  CHECK(u.denominator.to_string() == "x-5");
  // Residual denominator forces the rational fallback.
  const BlackBoxOracle h = BlackBoxOracle::from_fraction(F("1/((x-y)*y^2*(x+2))"));
  const UnivariateReconstruction v = deflate_and_reconstruct_univariate(h, g, "x", 3);
  CHECK(v.used_fallback);
  CHECK(v.numerator.to_string() == "1/25");
  CHECK(v.denominator.to_string() == "x^2-3*x-10");
  const UnivariateReconstruction b = reconstruct_univariate_blind(h, a.assignment, "x", 3);
  CHECK(b.denominator.to_string() == "x^2-3*x-10");
  CHECK_THROWS_AS(reconstruct_univariate_blind(BlackBoxOracle::from_fraction(F("1/(x^5+y)")), a.assignment, "x", 1),
                  Error);
}

TEST_CASE("CRT and rational reconstruction") {
  const auto c = crt_combine({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(3)}, {BigInt(3), BigInt(5)}});
  CHECK(c.first == 23);
  CHECK(c.second == 30);
  CHECK_THROWS_AS(crt_combine({{BigInt(1), BigInt(4)}, {BigInt(1), BigInt(6)}}), Error);
  CHECK(rational_reconstruct(BigInt(6), BigInt(11)) == std::optional<Rational>(Rational(BigInt(1), BigInt(2))));
  CHECK_FALSE(rational_reconstruct(BigInt(5), BigInt(7)).has_value());
  CHECK(rational_mod(Rational(BigInt(1), BigInt(2)), 7) == std::optional<std::uint64_t>(4));
  CHECK_FALSE(rational_mod(Rational(BigInt(1), BigInt(7)), 7).has_value());
  const auto ps = reconstruction_primes(3);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0] < (1ULL << 31));
  CHECK(ps[0] > ps[1]);
}

TEST_CASE("value reconstruction from modular images") {
  const BlackBoxOracle o = BlackBoxOracle::from_fraction(F("(x^5-3*y^4+7)/((x-y)^3*y^2)"));
  const Rational want = o.evaluate({Rational(123456), Rational(789)});
  CHECK(reconstruct_value(o, {BigInt(123456), BigInt(789)}) == want);
}

TEST_CASE("stream oracle protocol") {
  const Fraction f = F("(x+1)/((x-y)*y^2)");
  std::istringstream req("EVAL x=3 y=1 mod 101\nEVAL x=1 y=1 mod 101\n");
  std::ostringstream resp;
  serve_oracle(f, req, resp);
  CHECK(resp.str() == "VAL 2\nPOLE\n");

  std::istringstream answers("VAL 2\nPOLE\nnonsense\n");
  std::ostringstream requests;
  StreamOracle so(answers, requests, {"x", "y"});
  CHECK(so.evaluate({3, 1}, 101) == std::optional<std::uint64_t>(2));
  CHECK_FALSE(so.evaluate({1, 1}, 101).has_value());
  CHECK_THROWS_AS(so.evaluate({1, 2}, 101), Error);
  CHECK(requests.str() == "EVAL x=3 y=1 mod 101\nEVAL x=1 y=1 mod 101\nEVAL x=1 y=2 mod 101\n");
  CHECK(so.requests() == 3);
}

TEST_CASE("stream oracle drives value reconstruction") {
  const Fraction f = F("(x^2+3)/((x-y)*y^2)");
  // Precompute the answers the served oracle would give.
  std::ostringstream script;
  const auto primes = reconstruction_primes(8);
  for (auto p : primes) script << "EVAL x=40 y=17 mod " << p << "\n";
  std::istringstream req(script.str());
  std::ostringstream resp;
  serve_oracle(f, req, resp);
  std::istringstream answers(resp.str());
  std::ostringstream sink;
  StreamOracle so(answers, sink, {"x", "y"});
  const Rational v = reconstruct_value(so.as_oracle(), {BigInt(40), BigInt(17)}, 8);
  CHECK(v == BlackBoxOracle::from_fraction(f).evaluate({Rational(40), Rational(17)}));
}
