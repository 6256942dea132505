#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mapart/rational.hpp"

namespace mapart {

enum class ExprKind { Number, Variable, Add, Mul, Div, Neg, Pow };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree. Add and Mul are n-ary, Div is binary, Pow has
/// a single base and a non-negative integer exponent.
struct Expr {
  ExprKind kind;
  BigInt number;
  std::string name;
  std::vector<ExprPtr> args;
  unsigned exponent = 0;
  std::size_t pos = 0;

  static ExprPtr make_number(BigInt v, std::size_t pos = 0);
  static ExprPtr make_variable(std::string name, std::size_t pos = 0);
  static ExprPtr make_add(std::vector<ExprPtr> args);
  static ExprPtr make_mul(std::vector<ExprPtr> args);
  static ExprPtr make_div(ExprPtr num, ExprPtr den);
  static ExprPtr make_neg(ExprPtr arg);
  static ExprPtr make_pow(ExprPtr base, unsigned exponent);
};

struct ParseOptions {
  /// Accept juxtaposition such as 2y or (x+1)(x-1) as multiplication.
  bool implicit_multiplication = false;
};

/// Grammar (lowest to highest precedence): + -, * /, unary -, ^.
/// Errors carry the byte offset: "parse error at 7: ...".
ExprPtr parse_expression(std::string_view text, ParseOptions options = {});

/// Canonical text with minimal parentheses and explicit '*'.
std::string print_expression(const ExprPtr& e);

/// Variable names in order of first appearance.
std::vector<std::string> expression_variables(const ExprPtr& e);

/// Splits on ';' (or newlines) and parses each non-empty piece.
std::vector<ExprPtr> parse_expression_list(std::string_view text, ParseOptions options = {});

}  // namespace mapart
