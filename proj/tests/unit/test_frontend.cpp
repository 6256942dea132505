#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "mapart/apart.hpp"
#include "mapart/cli.hpp"
#include "mapart/error.hpp"
#include "mapart/exporters.hpp"
#include "mapart/expr.hpp"
#include "../support/test_support.hpp"

using namespace mapart;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("mapart_test_" + name);
  fs::remove_all(p);
  return p;
}

DenominatorSet three() {
  const auto t = VarTable::make({"x", "y"});
  std::vector<Polynomial> f;
  for (const char* s : {"x-y", "y", "x+y"}) f.push_back(to_polynomial(parse_expression(s), t));
  return DenominatorSet::make(t, f);
}

ExprPtr random_tree(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 6 : 1);
  std::uniform_int_distribution<int> small(0, 9);
  switch (kind(rng)) {
    case 0:
      return Expr::make_number(BigInt(small(rng)));
    case 1:
      return Expr::make_variable(std::string(1, "xyz"[small(rng) % 3]));
    case 2:
      return Expr::make_add({random_tree(rng, depth - 1), random_tree(rng, depth - 1)});
    case 3:
      return Expr::make_mul({random_tree(rng, depth - 1), random_tree(rng, depth - 1)});
    case 4:
      return Expr::make_div(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 5:
      return Expr::make_neg(random_tree(rng, depth - 1));
    default:
      return Expr::make_pow(random_tree(rng, depth - 1), static_cast<unsigned>(small(rng) % 4));
  }
}

}  // namespace

TEST_CASE("parser") {
  CHECK(print_expression(parse_expression("1/x^2")) == "1/x^2");
  CHECK(parse_expression("(2*y-x)/(y*(x+y)*(y-x))")->kind == ExprKind::Div);
  CHECK(print_expression(parse_expression("-x^2")) == "-x^2");
  CHECK(print_expression(parse_expression("a-(b-c)")) == "a-(b-c)");
  CHECK_THROWS_WITH_AS(parse_expression("x^(-1)"), doctest::Contains("negative exponent: write 1/x"), Error);
  CHECK_THROWS_WITH_AS(parse_expression("2y"), doctest::Contains("missing operator"), Error);
  CHECK(print_expression(parse_expression("2y", ParseOptions{true})) == "2*y");
  CHECK_THROWS_AS(parse_expression("(x+1"), Error);
  CHECK_THROWS_AS(parse_expression("1.5*x"), Error);
  CHECK(parse_expression_list("x-y; y\nx+y").size() == 3);
}

TEST_CASE("parse and print are idempotent") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const ExprPtr e = random_tree(rng, 4);
    const std::string once = print_expression(parse_expression(print_expression(e)));
    CHECK(print_expression(parse_expression(once)) == once);
    std::map<std::string, mpq_class> at{{"x", mpq_class(2, 3)}, {"y", mpq_class(-5, 7)}, {"z", mpq_class(11)}};
    const auto a = mapart::testing::eval_tree(e, at);
    const auto b = mapart::testing::eval_tree(parse_expression(print_expression(e)), at);
    CHECK(a.has_value() == b.has_value());
    if (a && b) CHECK(*a == *b);
  }
}

TEST_CASE("singular job round trip") {
  const DenominatorSet d = three();
  const OrderSpec spec = apart_order(d);
  const fs::path dir = scratch("sing") / "nested";
  const fs::path job = write_singular_basis_input(d, spec, dir);
  CHECK(job == dir / "apartbasisin.sing");
  CHECK(fs::exists(job));
  const GroebnerBasis gb = apart_basis(d, spec);
  // The output file as the external system would write it.
  std::ofstream(dir / kSingularOutputFile) << "{-1+q2*y,-1+q1*x-q1*y,-1+q3*x+q3*y,-q1*q2+2*q1*q3+q2*q3}";
  const GroebnerBasis back = read_basis_output_file(dir / kSingularOutputFile, d, spec);
  CHECK(basis_to_text(back) == basis_to_text(gb));
  CHECK_THROWS_WITH_AS(write_singular_basis_input(DenominatorSet::make(d.xtable, {}), spec, dir), "nothing to compute",
                       Error);
}

TEST_CASE("form procedure rules") {
  const DenominatorSet d = three();
  const OrderSpec spec = apart_order(d);
  const GroebnerBasis gb = apart_basis(d, spec);
  const FormFiles f = form_procedure(gb, spec);
  CHECK(f.rules.find("id q1*q3 = -1/2*q2*q3+1/2*q1*q2;") != std::string::npos);
  CHECK(f.symbols.rfind("Symbols q3,q1,q2,x,y;", 0) == 0);
  GroebnerBasis unreduced = gb;
  unreduced.reduced = false;
  CHECK_THROWS_AS(form_procedure(unreduced, spec), Error);

  const auto t = VarTable::make({"x"});
  GroebnerBasis single;
  single.elements = {Polynomial::variable(t, 0)};
  single.order = MonomialOrder::degrevlex(1);
  single.reduced = true;
  const auto rules = form_rules(single);
  REQUIRE(rules.size() == 1);
  CHECK(rules[0].rhs.is_zero());
  CHECK(form_procedure(single, OrderSpec::parse("{{x}}")).rules == "repeat;\n  id x = 0;\nendrepeat;\n");
}

TEST_CASE("exporters honor the temporary directory variable") {
  const fs::path dir = scratch("env");
  ::setenv("MAPART_TMPDIR", dir.c_str(), 1);
  const DenominatorSet d = three();
  const OrderSpec spec = apart_order(d);
  CHECK(write_form_procedure(apart_basis(d, spec), spec, "") == dir / "apartreduce.h");
  CHECK(fs::exists(dir / "apartsymbols.h"));
  CHECK(fs::exists(dir / "apartrules.h"));
  ::unsetenv("MAPART_TMPDIR");
}

TEST_CASE("command line") {
  Run r = cli({"apart", "(2*y-x)/(y*(x+y)*(y-x))"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1/(2*(x-y)*y) + 3/(2*y*(x+y))\n");
  CHECK(cli({"order", "--dens", "x^2+y;x-y;x+1;x^2-3;y+1;y", "--vars", "x,y"}).out ==
        "{{q1,q2},{q4,q3},{q5,q6},{x,y}}\n");
  CHECK(cli({"apart", "5"}).out == "5\n");
  CHECK(cli({"apart", "(2*y-x)/(y*(x+y)*(y-x))", "--format", "abbreviated"}).out ==
        "{3/2*q2*q3-1/2*q1*q2, {q1->1/(x-y), q2->1/y, q3->1/(x+y)}}\n");
  CHECK(cli({"reduce", "q1*q2*q3*x-2*q1*q2*q3*y", "--dens", "x-y;y;x+y", "--iterated"}).out == "3/2*q2*q3-1/2*q1*q2\n");
  CHECK(cli({"reduce", "--dens", "x-y;y;x+y;x", "--promote", "q4", "--", "-q1*q4/2+q2*q4-3*q3*q4/2"}).out ==
        "3/2*q2*q3-1/2*q1*q2\n");
  CHECK(cli({"basis", "--dens", "x-y;y;x+y"}).out == "q2*y-1\nq1*x-q1*y-1\nq3*x+q3*y-1\n2*q1*q3+q2*q3-q1*q2\n");
  const Run l = cli({"leinartas", "--univariate", "1/((x+y)*(x-y))", "--vars", "x,y"});
  CHECK(l.out == "1/(2*y)*1/(x-y) - 1/(2*y)*1/(x+y)\n");
  CHECK(l.err == "spurious factor: y\n");
  const Run g = cli({"guess-den", "1/((x-y)*y^2)", "--dens", "x-y;y", "--anchor", "x=7,y=5"});
  CHECK(g.out.find("exponents: 1 2\n") != std::string::npos);
  CHECK(g.out.find("residual: none\n") != std::string::npos);
}

TEST_CASE("command line json") {
  const Run r = cli({"apart", "1/(x*(x+1))", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"denominator_factors\"") != std::string::npos);
  CHECK(r.out.find("\"numerator\": \"-1\"") != std::string::npos);
}

TEST_CASE("command line errors") {
  Run r = cli({"apart", "x^(-1)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("negative exponent") != std::string::npos);
  r = cli({"apart", "1/x", "--bogus"});
  CHECK(r.code == 1);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(cli({}).code == 1);
  CHECK(cli({"basis"}).code == 1);
  CHECK(cli({"apart", "1/x", "--format", "xml"}).code == 1);
  CHECK(cli({"export-singular", "--dens", "x-y", "--order", "{{q1},{x}}", "--dir", scratch("bad").string()}).code == 1);
}
