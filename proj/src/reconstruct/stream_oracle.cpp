#include <istream>
#include <ostream>
#include <sstream>

#include "mapart/error.hpp"
#include "mapart/reconstruct.hpp"

namespace mapart {

StreamOracle::StreamOracle(std::istream& in, std::ostream& out, std::vector<std::string> variables)
    : in_(in), out_(out), vars_(std::move(variables)) {}

std::optional<std::uint64_t> StreamOracle::evaluate(const std::vector<std::uint64_t>& point, std::uint64_t p) {
  if (point.size() != vars_.size()) throw Error("point has the wrong number of coordinates");
  out_ << "EVAL";
  for (std::size_t i = 0; i < vars_.size(); ++i) out_ << ' ' << vars_[i] << '=' << point[i];
  out_ << " mod " << p << '\n';
  out_.flush();
  ++requests_;
  std::string line;
  if (!std::getline(in_, line)) throw Error("oracle stream closed");
  std::istringstream ls(line);
  std::string tag;
  ls >> tag;
  if (tag == "POLE") return std::nullopt;
  std::uint64_t v = 0;
  if (tag != "VAL" || !(ls >> v)) throw Error("malformed oracle response: " + line);
  if (v >= p) throw Error("oracle value out of range: " + line);
  return v;
}

BlackBoxOracle StreamOracle::as_oracle() {
  BlackBoxOracle o;
  o.variables = vars_;
  o.evaluate_mod = [this](const std::vector<std::uint64_t>& x, std::uint64_t p) { return evaluate(x, p); };
  return o;
}

void serve_oracle(const Fraction& f, std::istream& in, std::ostream& out) {
  const BlackBoxOracle o = BlackBoxOracle::from_fraction(f);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag != "EVAL") throw Error("malformed oracle request: " + line);
    std::vector<std::uint64_t> point(o.variables.size(), 0);
    std::vector<bool> have(o.variables.size(), false);
    std::string tok;
    std::uint64_t p = 0;
    while (ls >> tok) {
      if (tok == "mod") {
        if (!(ls >> p)) throw Error("malformed oracle request: " + line);
        continue;
      }
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw Error("malformed oracle request: " + line);
      const std::string name = tok.substr(0, eq);
      bool known = false;
      for (std::size_t i = 0; i < o.variables.size(); ++i) {
        if (o.variables[i] == name) {
          point[i] = std::stoull(tok.substr(eq + 1));
          have[i] = true;
          known = true;
        }
      }
      if (!known) throw Error("unknown variable in request: " + name);
    }
    if (p < 2) throw Error("missing modulus in request: " + line);
    for (std::size_t i = 0; i < have.size(); ++i) {
      if (!have[i]) throw Error("request lacks '" + o.variables[i] + "'");
    }
    auto v = o.evaluate_mod(point, p);
    if (v) {
      out << "VAL " << *v << '\n';
    } else {
      out << "POLE\n";
    }
    out.flush();
  }
}

}  // namespace mapart
