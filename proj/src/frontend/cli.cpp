#include "mapart/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "mapart/apart.hpp"
#include "mapart/error.hpp"
#include "mapart/exporters.hpp"
#include "mapart/expr.hpp"
#include "mapart/leinartas.hpp"
#include "mapart/reconstruct.hpp"

namespace mapart {

namespace {

using json = nlohmann::json;

struct Common {
  std::string vars;
  std::string dens;
  std::string order;
  std::vector<std::string> promote;
  bool lex_q = false;
  bool implicit_mul = false;
  std::string format = "plain";
};

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',' || c == ' ' || c == ';') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return names;
}

class Job {
 public:
  /// With vars_from_dens the default x-variables are those of the
  /// denominator list, since the input also contains q-symbols.
  Job(const Common& c, const std::vector<std::string>& inputs, bool vars_from_dens = false) : c_(c) {
    const ParseOptions po{c.implicit_mul};
    for (const auto& s : inputs) exprs_.push_back(parse_expression(s, po));
    if (!c.dens.empty()) dens_exprs_ = parse_expression_list(c.dens, po);
    if (!c.vars.empty()) {
      xtable_ = VarTable::make(split_names(c.vars));
    } else if (vars_from_dens) {
      if (dens_exprs_.empty()) throw Error("--dens is required");
      xtable_ = default_xtable(dens_exprs_);
    } else {
      auto all = exprs_;
      all.insert(all.end(), dens_exprs_.begin(), dens_exprs_.end());
      xtable_ = default_xtable(all);
    }
  }

  const ExprPtr& expr(std::size_t i = 0) const { return exprs_.at(i); }
  const VarTablePtr& xtable() const { return xtable_; }

  std::optional<DenominatorSet> known() const {
    if (dens_exprs_.empty()) return std::nullopt;
    std::vector<Polynomial> fs;
    for (const auto& e : dens_exprs_) fs.push_back(to_polynomial(e, xtable_));
    auto d = DenominatorSet::make(xtable_, fs);
    d.validate();
    return d;
  }

  DenominatorSet require_dens() const {
    auto d = known();
    if (!d) throw Error("--dens is required");
    return *d;
  }

  OrderSpec spec(const DenominatorSet& d) const {
    OrderSpec s;
    if (!c_.order.empty()) {
      s = OrderSpec::parse(c_.order);
    } else if (c_.lex_q) {
      s = lex_q_order(d);
    } else {
      s = apart_order(d);
    }
    if (!c_.promote.empty()) s = promote_spurious(s, c_.promote);
    return s;
  }

 private:
  const Common& c_;
  std::vector<ExprPtr> exprs_;
  std::vector<ExprPtr> dens_exprs_;
  VarTablePtr xtable_;
};

json terms_json(const std::vector<ApartTerm>& terms, const DenominatorSet& dens) {
  json arr = json::array();
  for (const auto& t : terms) {
    json fs = json::array();
    for (const auto& [i, e] : t.factors) fs.push_back(json::array({dens.factors[i].to_string(), e}));
    arr.push_back({{"numerator", t.numerator.to_string()}, {"denominator_factors", fs}});
  }
  return arr;
}

json dens_json(const DenominatorSet& d) {
  json arr = json::array();
  for (std::size_t i = 0; i < d.size(); ++i) arr.push_back({{"symbol", d.symbols[i]}, {"factor", d.factors[i].to_string()}});
  return arr;
}

json basis_json(const GroebnerBasis& gb) {
  json arr = json::array();
  for (const auto& g : gb.elements) arr.push_back(g.to_string());
  return arr;
}

void check_format(const std::string& f) {
  if (f != "plain" && f != "abbreviated" && f != "json") throw Error("unknown format '" + f + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multivariate partial fractions via Groebner-basis reduction", "mapart"};
  app.require_subcommand(1);
  Common c;
  std::string input;
  std::size_t jobs = 1;
  std::size_t partition = 0;
  bool iterated = false;
  bool univariate = false;
  std::string anchor_text;
  std::string reconstruct_var;
  unsigned degree_bound = 8;
  std::uint64_t seed = 1;
  std::string dir;

  auto add_common = [&](CLI::App* s, bool with_expr) {
    if (with_expr) s->add_option("expr,--expr", input, "Input expression (put -- before one starting with -)")->required();
    s->add_option("--vars", c.vars, "Comma separated x-variables (default: sorted variables of the input)");
    s->add_option("--dens", c.dens, "Denominator factors separated by ';'");
    s->add_option("--order", c.order, "Block order such as {{q3,q1},{q2},{x,y}}");
    s->add_option("--promote", c.promote, "Symbols moved into a new leading block")->delimiter(',');
    s->add_flag("--lex-q", c.lex_q, "Pure lex order on the q-symbols");
    s->add_flag("--implicit-mul", c.implicit_mul, "Allow juxtaposition such as 2y");
    s->add_option("--format", c.format, "plain, abbreviated or json");
  };

  auto* apart = app.add_subcommand("apart", "Partial-fraction decomposition");
  add_common(apart, true);
  apart->add_option("--jobs", jobs, "Threads for the reduction");
  apart->add_flag("--iterated", iterated, "Iterated reduction of the common-denominator form");
  apart->add_option("--partition", partition, "Partition size for the iterated reduction (0: unbounded)");

  auto* abbrev = app.add_subcommand("abbrev", "Replace denominator factors by symbols");
  add_common(abbrev, true);

  auto* order = app.add_subcommand("order", "Block monomial order for a denominator list");
  add_common(order, false);
  order->add_option("expr,--expr", input, "Expression whose denominators are used when --dens is absent");

  auto* basis = app.add_subcommand("basis", "Groebner basis of the inverse-denominator ideal");
  add_common(basis, false);

  auto* reduce = app.add_subcommand("reduce", "Normal form of an expression in the q-symbols and x-variables");
  add_common(reduce, true);
  reduce->add_flag("--iterated", iterated, "Pull the common q-monomial out and reduce one symbol at a time");
  reduce->add_option("--partition", partition, "Partition size for the iterated reduction (0: unbounded)");

  auto* lein = app.add_subcommand("leinartas", "Leinartas decomposition");
  add_common(lein, true);
  lein->add_flag("--univariate", univariate, "Iterated univariate partial fractions instead");

  auto* guess = app.add_subcommand("guess-den", "Guess the denominator exponents from one sample");
  add_common(guess, true);
  guess->add_option("--anchor", anchor_text, "Anchor point such as x=7,y=5 (default: random search)");
  guess->add_option("--seed", seed, "Seed of the anchor search");
  guess->add_option("--reconstruct", reconstruct_var, "Also reconstruct the slice through the anchor in this variable");
  guess->add_option("--degree-bound", degree_bound, "Degree bound for the slice reconstruction");

  auto* esing = app.add_subcommand("export-singular", "Write the Singular basis job");
  add_common(esing, false);
  esing->add_option("--dir", dir, "Output directory (default: $MAPART_TMPDIR)");

  auto* eform = app.add_subcommand("export-form", "Write the Form reduction procedure");
  add_common(eform, false);
  eform->add_option("--dir", dir, "Output directory (default: $MAPART_TMPDIR)");

  try {
    std::vector<std::string> a = args;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] == "--") {
        a[i] = "--expr=" + a[i + 1];
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(i + 1));
        break;
      }
    }
    std::vector<std::string> rev(a.rbegin(), a.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    check_format(c.format);
    std::vector<std::string> inputs;
    if (!input.empty()) inputs.push_back(input);
    Job job(c, inputs, reduce->parsed());
    const bool as_json = c.format == "json";

    if (apart->parsed()) {
      ApartOptions o;
      if (!c.order.empty()) o.order = OrderSpec::parse(c.order);
      o.promote = c.promote;
      o.lex_q = c.lex_q;
      o.jobs = std::max<std::size_t>(jobs, 1);
      o.iterated = iterated;
      if (partition > 0) o.partition_size = partition;
      const ApartResult r = multivariate_apart(job.expr(), job.xtable(), o, job.known());
      if (as_json) {
        json j{{"order", r.spec.to_string()},
               {"denominators", dens_json(r.reduced.dens)},
               {"body", r.reduced.body.to_string()},
               {"terms", terms_json(r.terms, r.reduced.dens)}};
        out << j.dump(2) << "\n";
      } else if (c.format == "abbreviated") {
        out << r.reduced.to_string() << "\n";
      } else {
        out << r.to_string() << "\n";
      }
    } else if (abbrev->parsed()) {
      const AbbreviatedExpression a = abbreviate_denominators(job.expr(), job.xtable(), job.known());
      if (as_json) {
        out << json{{"body", a.body.to_string()}, {"denominators", dens_json(a.dens)}}.dump(2) << "\n";
      } else {
        out << a.to_string() << "\n";
      }
    } else if (order->parsed()) {
      DenominatorSet d;
      if (auto k = job.known()) {
        d = *k;
      } else if (!inputs.empty()) {
        d = abbreviate_denominators(job.expr(), job.xtable()).dens;
      } else {
        throw Error("--dens or an expression is required");
      }
      const OrderSpec s = job.spec(d);
      if (as_json) {
        out << json{{"order", s.to_string()}, {"denominators", dens_json(d)}}.dump(2) << "\n";
      } else {
        out << s.to_string() << "\n";
      }
    } else if (basis->parsed()) {
      const DenominatorSet d = job.require_dens();
      const OrderSpec s = job.spec(d);
      const GroebnerBasis gb = apart_basis(d, s);
      if (as_json) {
        out << json{{"order", s.to_string()}, {"denominators", dens_json(d)}, {"basis", basis_json(gb)}}.dump(2) << "\n";
      } else {
        out << basis_to_text(gb);
      }
    } else if (reduce->parsed()) {
      const DenominatorSet d = job.require_dens();
      const OrderSpec s = job.spec(d);
      const GroebnerBasis gb = apart_basis(d, s);
      const VarTablePtr ring = d.ring();
      const Polynomial p = to_polynomial(job.expr(), ring).with_order(gb.order);
      Polynomial result(ring);
      if (iterated && !p.is_zero()) {
        // Common q-monomial of all terms.
        std::vector<unsigned> common(d.size(), ~0u);
        for (const auto& t : p.terms()) {
          for (std::size_t i = 0; i < d.size(); ++i) common[i] = std::min(common[i], t.mono[i]);
        }
        Monomial m(std::vector<unsigned>(ring->size(), 0));
        std::vector<std::pair<std::string, unsigned>> qpowers;
        for (std::size_t i = 0; i < d.size(); ++i) {
          m.set(i, common[i]);
          if (common[i] > 0) qpowers.emplace_back(d.symbols[i], common[i]);
        }
        std::vector<Term> rest;
        for (const auto& t : p.terms()) rest.push_back(Term{t.mono / m, t.coeff});
        const Polynomial numerator = Polynomial::from_terms(ring, std::move(rest), gb.order);
        std::optional<std::size_t> ps;
        if (partition > 0) ps = partition;
        result = apart_reduce_iterated(numerator, qpowers, gb, ps);
      } else {
        result = normal_form(p, gb);
      }
      if (as_json) {
        out << json{{"order", s.to_string()}, {"denominators", dens_json(d)}, {"body", result.to_string()}}.dump(2)
            << "\n";
      } else if (c.format == "abbreviated") {
        out << AbbreviatedExpression{result, d, ring}.to_string() << "\n";
      } else {
        out << result.to_string() << "\n";
      }
    } else if (lein->parsed()) {
      if (univariate) {
        std::vector<std::string> vo = c.vars.empty() ? job.xtable()->names() : split_names(c.vars);
        const IteratedResult r = iterated_univariate_apart(to_fraction(job.expr(), job.xtable()), vo);
        if (as_json) {
          json sp = json::array();
          for (const auto& f : r.spurious) sp.push_back(f.to_string());
          out << json{{"result", r.to_string()}, {"spurious", sp}}.dump(2) << "\n";
        } else {
          out << r.to_string() << "\n";
          for (const auto& f : r.spurious) err << "spurious factor: " << f << "\n";
        }
      } else {
        const RationalFunction rf = normalize_and_factor(job.expr(), job.xtable(), job.known() ? job.known()->factors
                                                                                             : std::vector<Polynomial>{});
        const LeinartasDecomposition dec = leinartas_decompose(rf);
        const DenominatorSet d = DenominatorSet::make(job.xtable(), dec.factors);
        const LeinartasReport rep = verify_leinartas_form(dec.terms, dec.factors);
        if (as_json) {
          out << json{{"terms", terms_json(dec.terms, d)}, {"verified", rep.ok()}}.dump(2) << "\n";
        } else {
          out << format_apart_sum(dec.terms, d) << "\n";
        }
        if (!rep.ok()) throw InvariantError("decomposition failed verification");
      }
    } else if (guess->parsed()) {
      const DenominatorSet d = job.require_dens();
      const Fraction f = to_fraction(job.expr(), job.xtable());
      AnchorPoint anchor;
      if (!anchor_text.empty()) {
        for (const auto& kv : split_names(anchor_text)) {
          const auto eq = kv.find('=');
          if (eq == std::string::npos) throw Error("anchor entries must look like x=7");
          try {
            anchor.assignment[kv.substr(0, eq)] = BigInt(kv.substr(eq + 1));
          } catch (const std::invalid_argument&) {
            throw Error("anchor value is not an integer: " + kv);
          }
        }
        std::string why;
        auto primes = anchor_primes(d.factors, anchor.assignment, &why);
        if (!primes) throw Error("unusable anchor: " + why);
        anchor.primes = *primes;
      } else {
        AnchorSearchOptions ao;
        ao.seed = seed;
        anchor = find_anchor(d.factors, ao);
      }
      const BlackBoxOracle oracle = BlackBoxOracle::from_fraction(f);
      std::vector<Rational> point;
      for (const auto& n : oracle.variables) {
        auto it = anchor.assignment.find(n);
        if (it == anchor.assignment.end()) throw Error("anchor lacks a value for '" + n + "'");
        point.emplace_back(it->second);
      }
      const DenominatorGuess g = guess_denominator(oracle.evaluate(point), anchor, d.factors);
      std::ostringstream where;
      for (const auto& [k, v] : anchor.assignment) where << (where.tellp() ? "," : "") << k << "=" << v;
      std::vector<std::string> res;
      for (const auto& pp : g.residual) res.push_back(pp.prime.get_str() + "^" + std::to_string(pp.exponent));
      std::optional<UnivariateReconstruction> slice;
      if (!reconstruct_var.empty()) slice = deflate_and_reconstruct_univariate(oracle, g, reconstruct_var, degree_bound);
      if (as_json) {
        json j{{"anchor", where.str()},
               {"exponents", g.exponents},
               {"denominator", g.denominator().to_string()},
               {"residual", res}};
        if (slice) {
          j["slice"] = {{"numerator", slice->numerator.to_string()},
                        {"denominator", slice->denominator.to_string()},
                        {"samples", slice->samples},
                        {"fallback", slice->used_fallback}};
        }
        out << j.dump(2) << "\n";
      } else {
        out << "anchor: " << where.str() << "\n";
        out << "exponents:";
        for (auto e : g.exponents) out << " " << e;
        out << "\n";
        out << "denominator: " << g.denominator() << "\n";
        out << "residual:";
        if (res.empty()) out << " none";
        for (const auto& r : res) out << " " << r;
        out << "\n";
        if (slice) {
          out << "slice: (" << slice->numerator << ")/(" << slice->denominator << ")\n";
          out << "samples: " << slice->samples << (slice->used_fallback ? " (rational fallback)" : "") << "\n";
        }
      }
    } else if (esing->parsed()) {
      const DenominatorSet d = job.require_dens();
      out << write_singular_basis_input(d, job.spec(d), dir).string() << "\n";
    } else if (eform->parsed()) {
      const DenominatorSet d = job.require_dens();
      const OrderSpec s = job.spec(d);
      out << write_form_procedure(apart_basis(d, s), s, dir).string() << "\n";
    }
    return 0;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mapart
