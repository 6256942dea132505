#include "mapart/exporters.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mapart/error.hpp"
#include "mapart/expr.hpp"
#include "mapart/fraction_form.hpp"

namespace mapart {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

fs::path prepare_dir(const fs::path& dir) {
  const fs::path d = resolve_output_dir(dir);
  std::error_code ec;
  fs::create_directories(d, ec);
  if (ec || !fs::is_directory(d)) throw Error("cannot create directory " + d.string());
  return d;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

void check_spec(const DenominatorSet& dens, const OrderSpec& spec) {
  dens.validate();
  // to_order checks that the spec names every ring variable exactly once.
  (void)spec.to_order(*dens.ring());
}

}  // namespace

fs::path resolve_output_dir(const fs::path& dir) {
  if (!dir.empty()) return dir;
  if (const char* env = std::getenv("MAPART_TMPDIR"); env && *env) return fs::path(env);
  return fs::temp_directory_path() / "mapart";
}

std::string singular_basis_input(const DenominatorSet& dens, const OrderSpec& spec) {
  if (dens.empty()) throw Error("nothing to compute");
  check_spec(dens, spec);
  std::vector<std::string> blocks;
  for (const auto& b : spec.blocks) blocks.push_back("dp(" + std::to_string(b.size()) + ")");
  std::vector<std::string> gens;
  for (std::size_t i = 0; i < dens.size(); ++i) {
    gens.push_back(dens.symbols[i] + "*(" + dens.factors[i].to_string() + ")-1");
  }
  std::ostringstream s;
  s << "ring R = 0, (" << join(spec.flatten(), ",") << "), (" << join(blocks, ",") << ");\n";
  s << "short = 0;\n";
  s << "option(redSB);\n";
  s << "ideal I = " << join(gens, ", ") << ";\n";
  s << "ideal G = std(I);\n";
  s << "string out = \"{\";\n";
  s << "int k;\n";
  s << "for (k = 1; k <= size(G); k++)\n";
  s << "{\n";
  s << "  if (k > 1) { out = out + \",\"; }\n";
  s << "  out = out + string(G[k]);\n";
  s << "}\n";
  s << "out = out + \"}\";\n";
  s << "write(\":w " << kSingularOutputFile << "\", out);\n";
  return s.str();
}

fs::path write_singular_basis_input(const DenominatorSet& dens, const OrderSpec& spec, const fs::path& dir) {
  const std::string text = singular_basis_input(dens, spec);
  const fs::path path = prepare_dir(dir) / kSingularInputFile;
  write_file(path, text);
  return path;
}

GroebnerBasis read_basis_output(std::string_view text, const DenominatorSet& dens, const OrderSpec& spec) {
  std::string body(text);
  const auto open = body.find('{');
  const auto close = body.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw Error("basis output must be a braced list");
  }
  body = body.substr(open + 1, close - open - 1);
  const VarTablePtr ring = dens.ring();
  const OrderPtr order = spec.to_order(*ring);
  std::vector<Polynomial> elems;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '(') ++depth;
    if (i < body.size() && body[i] == ')') --depth;
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      const std::string item = body.substr(start, i - start);
      start = i + 1;
      if (item.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      Polynomial p = to_polynomial(parse_expression(item), ring).with_order(order);
      if (p.is_zero()) continue;
      elems.push_back(p.primitive_part());
    }
  }
  if (elems.empty()) throw Error("basis output is empty");
  std::sort(elems.begin(), elems.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  GroebnerBasis gb;
  gb.elements = std::move(elems);
  gb.order = order;
  gb.reduced = true;
  return gb;
}

GroebnerBasis read_basis_output_file(const fs::path& file, const DenominatorSet& dens, const OrderSpec& spec) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot read " + file.string());
  std::ostringstream s;
  s << in.rdbuf();
  return read_basis_output(s.str(), dens, spec);
}

std::vector<RewriteRule> form_rules(const GroebnerBasis& basis) {
  if (!basis.reduced) throw Error("basis is not reduced");
  std::vector<RewriteRule> rules;
  for (const auto& g0 : basis.elements) {
    const Polynomial g = g0.with_order(basis.order);
    const Term& lt = g.leading_term();
    const Polynomial lead = Polynomial::monomial(g.table(), lt.mono, lt.coeff, basis.order);
    rules.push_back(RewriteRule{lt.mono, (lead - g) * lt.coeff.inverse()});
  }
  return rules;
}

Polynomial apply_rule(const RewriteRule& rule, const Monomial& m, const Rational& c) {
  if (!divides(rule.lhs, m)) throw Error("rule does not apply");
  return rule.rhs.mul_term(m / rule.lhs, c);
}

FormFiles form_procedure(const GroebnerBasis& basis, const OrderSpec& spec) {
  const auto rules = form_rules(basis);
  const VarTable& table = *basis.table();
  const auto names = spec.flatten();
  if (names.size() != table.size()) throw Error("order does not match the basis ring");
  (void)spec.to_order(table);

  // Inverse-denominator symbols are the variables outside the last block.
  std::vector<std::string> qs;
  for (std::size_t b = 0; b + 1 < spec.blocks.size(); ++b) {
    for (const auto& n : spec.blocks[b]) qs.push_back(n);
  }

  FormFiles f;
  std::ostringstream sym;
  sym << "Symbols " << join(names, ",") << ";\n";
  if (!qs.empty()) {
    std::vector<std::string> hidden;
    for (const auto& q : qs) hidden.push_back("apartH" + q);
    sym << "Symbols " << join(hidden, ",") << ";\n";
  }
  f.symbols = sym.str();

  std::ostringstream rs;
  rs << "repeat;\n";
  for (const auto& r : rules) {
    rs << "  id " << format_monomial(table, r.lhs) << " = " << r.rhs.to_string() << ";\n";
  }
  rs << "endrepeat;\n";
  f.rules = rs.str();

  std::ostringstream ps;
  ps << "#include- " << kFormSymbolsFile << "\n";
  ps << "\n";
  ps << "#procedure apartreduce(expr)\n";
  for (const auto& q : qs) ps << "  id " << q << " = apartH" << q << ";\n";
  ps << "  .sort\n";
  for (auto it = qs.rbegin(); it != qs.rend(); ++it) {
    ps << "  id apartH" << *it << " = " << *it << ";\n";
    ps << "  .sort\n";
    ps << "  #include- " << kFormRulesFile << "\n";
    ps << "  .sort\n";
  }
  if (qs.empty()) {
    ps << "  #include- " << kFormRulesFile << "\n";
    ps << "  .sort\n";
  }
  ps << "#endprocedure\n";
  f.procedure = ps.str();
  return f;
}

fs::path write_form_procedure(const GroebnerBasis& basis, const OrderSpec& spec, const fs::path& dir) {
  const FormFiles f = form_procedure(basis, spec);
  const fs::path d = prepare_dir(dir);
  write_file(d / kFormSymbolsFile, f.symbols);
  write_file(d / kFormRulesFile, f.rules);
  write_file(d / kFormProcedureFile, f.procedure);
  return d / kFormProcedureFile;
}

}  // namespace mapart
