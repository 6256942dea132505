#include <doctest.h>

#include <random>

#include "mapart/error.hpp"
#include "mapart/expr.hpp"
#include "mapart/fraction_form.hpp"
#include "mapart/groebner.hpp"
#include "../support/test_support.hpp"

using namespace mapart;

namespace {

Polynomial P(const std::string& s, const VarTablePtr& t) { return to_polynomial(parse_expression(s), t); }

std::vector<Polynomial> gens(const std::vector<std::string>& ss, const VarTablePtr& t) {
  std::vector<Polynomial> v;
  for (const auto& s : ss) v.push_back(P(s, t));
  return v;
}

}  // namespace

TEST_CASE("textbook basis") {
  const auto t = VarTable::make({"x", "y"});
  const auto order = MonomialOrder::lex(2);
  const GroebnerBasis gb = buchberger(Ideal(gens({"x^2+y^2-1", "x-y"}, t)), order);
  CHECK(gb.reduced);
  CHECK(basis_to_text(gb) == "2*y^2-1\nx-y\n");
  CHECK(is_groebner_basis(gb.elements, order));
  CHECK_FALSE(is_groebner_basis(gens({"x^2+y^2-1", "x*y-1"}, t), order));
}

TEST_CASE("unit ideal") {
  const auto t = VarTable::make({"x"});
  const GroebnerBasis gb = buchberger(Ideal(gens({"x-1", "x+1"}, t)), MonomialOrder::degrevlex(1));
  CHECK(contains_one(gb));
  CHECK(gb.elements.size() == 1);
}

TEST_CASE("ideal membership, criteria and reduction strategies") {
  const auto t = VarTable::make({"x", "y", "z"});
  const auto order = MonomialOrder::degrevlex(3);
  const auto g = gens({"x*y-z", "y^2+x-1", "x*z+y*z"}, t);
  const GroebnerBasis gb = buchberger(Ideal(g), order);
  const GroebnerBasis plain = buchberger(Ideal(g), order, BuchbergerOptions{false});
  CHECK(basis_to_text(gb) == basis_to_text(plain));
  CHECK(gb.stats.skipped_product + gb.stats.skipped_chain > 0);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    Polynomial f(t, order);
    for (const auto& gi : g) f += P(mapart::testing::random_polynomial_text(t->names(), rng, 2, 3), t) * gi;
    CHECK(normal_form(f.with_order(order), gb).is_zero());
    const Polynomial p = P(mapart::testing::random_polynomial_text(t->names(), rng, 4, 6), t).with_order(order);
    CHECK(normal_form(p, gb, ReductionStrategy::LargestFirst) == normal_form(p, gb, ReductionStrategy::SmallestFirst));
  }
}

TEST_CASE("cofactor identity") {
  const auto t = VarTable::make({"x", "y"});
  const auto order = MonomialOrder::degrevlex(2);
  const auto g = gens({"x^2-y", "x*y-1"}, t);
  std::mt19937_64 rng(8);
  for (bool complete : {false, true}) {
    for (int i = 0; i < 30; ++i) {
      const Polynomial p = P(mapart::testing::random_polynomial_text(t->names(), rng, 4, 5), t).with_order(order);
      const CofactorResult r = normal_form_with_cofactors(p, g, order, complete);
      Polynomial back = r.remainder;
      for (std::size_t k = 0; k < g.size(); ++k) back += r.cofactors[k] * g[k];
      CHECK(back.with_order(order) == p);
      CHECK(r.unique == complete);
    }
  }
}

TEST_CASE("tracked basis representation") {
  const auto t = VarTable::make({"x", "y"});
  const auto order = MonomialOrder::degrevlex(2);
  const auto g = gens({"x^2+y", "x-y", "y^3-2"}, t);
  const TrackedBasis tb = buchberger_tracked(Ideal(g), order);
  for (std::size_t k = 0; k < tb.basis.elements.size(); ++k) {
    Polynomial s(t, order);
    for (std::size_t i = 0; i < g.size(); ++i) s += tb.representation[k][i] * g[i];
    CHECK(s.with_order(order) == tb.basis.elements[k].with_order(order));
  }
}

TEST_CASE("empty and zero ideals are rejected") {
  const auto t = VarTable::make({"x"});
  CHECK_THROWS_AS(Ideal(std::vector<Polynomial>{}), Error);
  CHECK_THROWS_AS(Ideal(gens({"0"}, t)), Error);
}
