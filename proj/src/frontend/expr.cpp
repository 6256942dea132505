#include "mapart/expr.hpp"

#include <cctype>
#include <set>

#include "mapart/error.hpp"

namespace mapart {

ExprPtr Expr::make_number(BigInt v, std::size_t pos) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Number;
  e->number = std::move(v);
  e->pos = pos;
  return e;
}

ExprPtr Expr::make_variable(std::string name, std::size_t pos) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Variable;
  e->name = std::move(name);
  e->pos = pos;
  return e;
}

ExprPtr Expr::make_add(std::vector<ExprPtr> args) {
  if (args.size() == 1) return args.front();
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Add;
  e->pos = args.empty() ? 0 : args.front()->pos;
  e->args = std::move(args);
  return e;
}

ExprPtr Expr::make_mul(std::vector<ExprPtr> args) {
  if (args.size() == 1) return args.front();
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Mul;
  e->pos = args.empty() ? 0 : args.front()->pos;
  e->args = std::move(args);
  return e;
}

ExprPtr Expr::make_div(ExprPtr num, ExprPtr den) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Div;
  e->pos = num->pos;
  e->args = {std::move(num), std::move(den)};
  return e;
}

ExprPtr Expr::make_neg(ExprPtr arg) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Neg;
  e->pos = arg->pos;
  e->args = {std::move(arg)};
  return e;
}

ExprPtr Expr::make_pow(ExprPtr base, unsigned exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Pow;
  e->pos = base->pos;
  e->args = {std::move(base)};
  e->exponent = exponent;
  return e;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, ParseOptions opts) : s_(text), opts_(opts) {}

  ExprPtr parse() {
    skip();
    if (i_ >= s_.size()) fail("empty expression");
    ExprPtr e = sum();
    skip();
    if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse error at " + std::to_string(i_) + ": " + msg);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  bool starts_operand() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  ExprPtr sum() {
    std::vector<ExprPtr> parts{product()};
    while (true) {
      if (peek('+')) {
        ++i_;
        parts.push_back(product());
      } else if (peek('-')) {
        ++i_;
        parts.push_back(Expr::make_neg(product()));
      } else {
        break;
      }
    }
    return Expr::make_add(std::move(parts));
  }

  ExprPtr product() {
    ExprPtr acc = unary();
    std::vector<ExprPtr> factors{acc};
    while (true) {
      if (peek('*')) {
        ++i_;
        factors.push_back(unary());
      } else if (peek('/')) {
        ++i_;
        ExprPtr den = unary();
        ExprPtr num = Expr::make_mul(std::move(factors));
        factors = {Expr::make_div(std::move(num), std::move(den))};
      } else if (starts_operand()) {
        if (!opts_.implicit_multiplication) fail("missing operator (use '*' for multiplication)");
        factors.push_back(unary());
      } else {
        break;
      }
    }
    return Expr::make_mul(std::move(factors));
  }

  ExprPtr unary() {
    if (peek('-')) {
      ++i_;
      return Expr::make_neg(unary());
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek('^')) {
      ++i_;
      unsigned e = exponent();
      ExprPtr out = Expr::make_pow(std::move(base), e);
      if (peek('^')) fail("chained exponents need parentheses");
      return out;
    }
    return base;
  }

  unsigned exponent() {
    skip();
    bool paren = false;
    if (peek('(')) {
      ++i_;
      paren = true;
    }
    if (peek('-')) fail("negative exponent: write 1/x");
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("exponent must be a non-negative integer");
    const std::string digits(s_.substr(start, i_ - start));
    if (digits.size() > 6) fail("exponent too large");
    const unsigned long v = std::stoul(digits);
    if (v > 0xFFFF) fail("exponent too large");
    if (paren) {
      if (!peek(')')) fail("expected ')'");
      ++i_;
    }
    return static_cast<unsigned>(v);
  }

  ExprPtr primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const std::size_t start = i_;
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      ExprPtr e = sum();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '.') fail("decimal numbers are not supported");
      return Expr::make_number(BigInt(std::string(s_.substr(start, i_ - start))), start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      return Expr::make_variable(std::string(s_.substr(start, i_ - start)), start);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  ParseOptions opts_;
  std::size_t i_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Neg:
      return 3;
    case ExprKind::Pow:
      return 4;
    case ExprKind::Number:
      return e.number < 0 ? 3 : 5;
    case ExprKind::Variable:
      return 5;
  }
  return 5;
}

std::string print(const Expr& e);

std::string wrap(const Expr& e, int min_prec) {
  std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number:
      return e.number.get_str();
    case ExprKind::Variable:
      return e.name;
    case ExprKind::Add: {
      std::string out;
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        const Expr& a = *e.args[k];
        if (k > 0 && a.kind == ExprKind::Neg) {
          out += "-" + wrap(*a.args[0], 2);
        } else {
          if (k > 0) out += "+";
          out += wrap(a, k == 0 ? 1 : 2);
        }
      }
      return out;
    }
    case ExprKind::Mul: {
      std::string out;
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        if (k > 0) out += "*";
        out += wrap(*e.args[k], k == 0 ? 2 : 3);
      }
      return out;
    }
    case ExprKind::Div:
      return wrap(*e.args[0], 2) + "/" + wrap(*e.args[1], 3);
    case ExprKind::Neg:
      return "-" + wrap(*e.args[0], 3);
    case ExprKind::Pow:
      return wrap(*e.args[0], 5) + "^" + std::to_string(e.exponent);
  }
  return {};
}

void collect(const Expr& e, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (e.kind == ExprKind::Variable && seen.insert(e.name).second) out.push_back(e.name);
  for (const auto& a : e.args) collect(*a, out, seen);
}

}  // namespace

ExprPtr parse_expression(std::string_view text, ParseOptions options) { return Parser(text, options).parse(); }

std::string print_expression(const ExprPtr& e) { return print(*e); }

std::vector<std::string> expression_variables(const ExprPtr& e) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect(*e, out, seen);
  return out;
}

std::vector<ExprPtr> parse_expression_list(std::string_view text, ParseOptions options) {
  std::vector<ExprPtr> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    bool blank = true;
    for (char c : piece) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) out.push_back(parse_expression(piece, options));
    start = end + 1;
  }
  return out;
}

}  // namespace mapart
