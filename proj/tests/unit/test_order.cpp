#include <doctest.h>

#include "mapart/denominator_set.hpp"
#include "mapart/error.hpp"
#include "mapart/expr.hpp"
#include "mapart/fraction_form.hpp"
#include "mapart/order_spec.hpp"

using namespace mapart;

namespace {

DenominatorSet dens(const std::vector<std::string>& fs, const VarTablePtr& t) {
  std::vector<Polynomial> ps;
  for (const auto& f : fs) ps.push_back(to_polynomial(parse_expression(f), t));
  return DenominatorSet::make(t, ps);
}

Monomial mono(std::initializer_list<unsigned> e) { return Monomial(e); }

}  // namespace

TEST_CASE("degrevlex and lex") {
  const auto dr = MonomialOrder::degrevlex(3);
  const auto lx = MonomialOrder::lex(3);
  CHECK(dr->compare(mono({0, 0, 2}), mono({1, 0, 0})) > 0);
  CHECK(lx->compare(mono({0, 0, 2}), mono({1, 0, 0})) < 0);
  // x*z < y^2 in degrevlex
  CHECK(dr->compare(mono({1, 0, 1}), mono({0, 2, 0})) < 0);
  CHECK(lx->compare(mono({1, 0, 1}), mono({0, 2, 0})) > 0);
  CHECK(dr->compare(mono({1, 1, 1}), mono({1, 1, 1})) == 0);
}

TEST_CASE("block order: earlier block dominates") {
  const auto t = VarTable::make({"q1", "q2", "x"});
  const auto o = OrderSpec::parse("{{q1},{q2},{x}}").to_order(*t);
  CHECK(o->compare(mono({1, 0, 0}), mono({0, 5, 7})) > 0);
  CHECK(o->compare(mono({0, 1, 0}), mono({0, 0, 9})) > 0);
}

TEST_CASE("order spec text form") {
  const OrderSpec s = OrderSpec::parse(" { {q3, q1}, {q2}, {x,y} } ");
  CHECK(s.to_string() == "{{q3,q1},{q2},{x,y}}");
  CHECK(OrderSpec::parse(s.to_string()) == s);
  CHECK(s.flatten() == std::vector<std::string>{"q3", "q1", "q2", "x", "y"});
  CHECK_THROWS_AS(OrderSpec::parse("{{q1},{q2}"), Error);
  const auto t = VarTable::make({"q1", "q2", "q3", "x", "y"});
  CHECK_THROWS_AS(OrderSpec::parse("{{q1},{x,y}}").to_order(*t), Error);
}

TEST_CASE("apart order examples") {
  const auto t = VarTable::make({"x", "y"});
  CHECK(apart_order(dens({"x-y", "y", "x+y"}, t)).to_string() == "{{q3,q1},{q2},{x,y}}");
  CHECK(apart_order(dens({"x^2+y", "x-y", "x+1", "x^2-3", "y+1", "y"}, t)).to_string() ==
        "{{q1,q2},{q4,q3},{q5,q6},{x,y}}");
  CHECK(apart_order(dens({"x-y", "y", "x+y", "x"}, t)).to_string() == "{{q3,q1},{q2},{q4},{x,y}}");
}

TEST_CASE("apart order is a permutation of the symbols plus the x block") {
  const auto t = VarTable::make({"x", "y", "z"});
  const DenominatorSet d = dens({"x+z", "y^2+z", "x-y", "z", "x*y+1"}, t);
  const OrderSpec s = apart_order(d);
  auto flat = s.flatten();
  CHECK(flat.size() == 8);
  CHECK(s.blocks.back() == std::vector<std::string>{"x", "y", "z"});
  std::sort(flat.begin(), flat.end());
  CHECK(std::adjacent_find(flat.begin(), flat.end()) == flat.end());
}

TEST_CASE("promote and lex q orders") {
  const auto t = VarTable::make({"x", "y"});
  const DenominatorSet d = dens({"x-y", "y", "x+y", "x"}, t);
  CHECK(promote_spurious(apart_order(d), {"q4"}).to_string() == "{{q4},{q3,q1},{q2},{x,y}}");
  CHECK(lex_q_order(d).to_string() == "{{q1},{q2},{q3},{q4},{x,y}}");
  CHECK_THROWS_WITH_AS(promote_spurious(apart_order(d), {"q9"}), "unknown symbol 'q9'", Error);
}

TEST_CASE("denominator set validation") {
  const auto t = VarTable::make({"x", "y"});
  DenominatorSet d = dens({"x-y", "y"}, t);
  CHECK(d.index_of(to_polynomial(parse_expression("2*y-2*x"), t)) == std::optional<std::size_t>(0));
  CHECK(d.ring()->names() == std::vector<std::string>{"q1", "q2", "x", "y"});
  d.factors.push_back(d.factors[0]);
  d.symbols.push_back("q3");
  CHECK_THROWS_AS(d.validate(), Error);
}
