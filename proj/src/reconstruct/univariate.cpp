#include <random>
#include <set>

#include "mapart/error.hpp"
#include "mapart/poly_gcd.hpp"
#include "mapart/reconstruct.hpp"

namespace mapart {

namespace {

class Slice {
 public:
  Slice(const BlackBoxOracle& oracle, const std::map<std::string, BigInt>& anchor, const std::string& variable)
      : oracle_(oracle) {
    bool found = false;
    for (std::size_t i = 0; i < oracle.variables.size(); ++i) {
      if (oracle.variables[i] == variable) {
        active_ = i;
        found = true;
        point_.emplace_back(0);
        continue;
      }
      auto it = anchor.find(oracle.variables[i]);
      if (it == anchor.end()) throw Error("anchor lacks a value for '" + oracle.variables[i] + "'");
      point_.emplace_back(it->second);
    }
    if (!found) throw Error("unknown variable '" + variable + "'");
    table_ = VarTable::make({variable});
  }

  std::optional<Rational> sample(const Rational& t) {
    point_[active_] = t;
    try {
      Rational v = oracle_.evaluate(point_);
      ++samples_;
      return v;
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  std::vector<Rational> point_at(const Rational& t) const {
    auto p = point_;
    p[active_] = t;
    return p;
  }

  const VarTablePtr& table() const { return table_; }
  std::size_t samples() const { return samples_; }

 private:
  const BlackBoxOracle& oracle_;
  std::size_t active_ = 0;
  std::vector<Rational> point_;
  VarTablePtr table_;
  std::size_t samples_ = 0;
};

Polynomial linear(const VarTablePtr& t, const Rational& shift) {
  return Polynomial::variable(t, 0) - Polynomial::constant(t, shift);
}

class Newton {
 public:
  /// Returns true when the new sample matched the current interpolant.
  bool add(const Rational& t, const Rational& y) {
    if (!ts_.empty() && eval(t) == y) return true;
    Rational denom = 1;
    for (const auto& tj : ts_) denom *= t - tj;
    cs_.push_back((y - eval(t)) / denom);
    ts_.push_back(t);
    return false;
  }

  Rational eval(const Rational& t) const {
    Rational v = 0;
    for (std::size_t k = cs_.size(); k-- > 0;) v = v * (t - ts_[k]) + cs_[k];
    return v;
  }

  Polynomial polynomial(const VarTablePtr& table) const {
    Polynomial p(table);
    for (std::size_t k = cs_.size(); k-- > 0;) p = p * linear(table, ts_[k]) + Polynomial::constant(table, cs_[k]);
    return p;
  }

 private:
  std::vector<Rational> ts_, cs_;
};

class Thiele {
 public:
  enum class Step { Confirmed, Added, Degenerate };

  Step add(const Rational& t, const Rational& y) {
    if (!as_.empty()) {
      auto v = eval(t);
      if (v && *v == y) return Step::Confirmed;
    }
    Rational v = y;
    for (std::size_t j = 0; j < as_.size(); ++j) {
      if (v == as_[j]) return Step::Degenerate;
      v = (t - ts_[j]) / (v - as_[j]);
    }
    as_.push_back(v);
    ts_.push_back(t);
    return Step::Added;
  }

  std::optional<Rational> eval(const Rational& t) const {
    Rational v = as_.back();
    for (std::size_t j = as_.size() - 1; j-- > 0;) {
      if (v.is_zero()) return std::nullopt;
      v = as_[j] + (t - ts_[j]) / v;
    }
    return v;
  }

  std::pair<Polynomial, Polynomial> fraction(const VarTablePtr& table) const {
    Polynomial n = Polynomial::constant(table, as_.back());
    Polynomial d = Polynomial::constant(table, 1);
    for (std::size_t j = as_.size() - 1; j-- > 0;) {
      Polynomial n2 = n * as_[j] + linear(table, ts_[j]) * d;
      d = std::move(n);
      n = std::move(n2);
    }
    return {n, d};
  }

 private:
  std::vector<Rational> ts_, as_;
};

UnivariateReconstruction finish(Polynomial n, Polynomial d, std::size_t samples, bool fallback) {
  const Polynomial g = gcd(n, d);
  if (!g.is_constant()) {
    n = divexact(n, g);
    d = divexact(d, g);
  }
  const Rational c = d.content();
  return UnivariateReconstruction{n * c.inverse(), d * c.inverse(), samples, fallback};
}

/// Distinct pseudo-random sample abscissae; consecutive integers invite
/// accidental agreement of symmetric functions.
class SamplePoints {
 public:
  Rational next() {
    while (true) {
      const long t = dist_(rng_);
      if (used_.insert(t).second) return Rational(t);
    }
  }

 private:
  std::mt19937_64 rng_{0x5eed};
  std::uniform_int_distribution<long> dist_{1, 1L << 20};
  std::set<long> used_;
};

constexpr const char* kInconsistent = "degree bound too low or oracle inconsistent";

}  // namespace

UnivariateReconstruction deflate_and_reconstruct_univariate(const BlackBoxOracle& oracle, const DenominatorGuess& guess,
                                                            const std::string& variable, unsigned degree_bound) {
  Slice slice(oracle, guess.anchor.assignment, variable);
  const Polynomial gd = guess.denominator();
  const VarTable& gt = *gd.table();
  auto guess_at = [&](const Rational& t) {
    const auto p = slice.point_at(t);
    std::vector<Rational> vals(gt.size());
    for (std::size_t i = 0; i < gt.size(); ++i) {
      bool set = false;
      for (std::size_t k = 0; k < oracle.variables.size(); ++k) {
        if (oracle.variables[k] == gt.name(i)) {
          vals[i] = p[k];
          set = true;
        }
      }
      if (!set) throw Error("guess uses variable '" + gt.name(i) + "' unknown to the oracle");
    }
    return gd.evaluate(vals);
  };

  std::vector<std::pair<Rational, Rational>> seen;
  Newton newton;
  SamplePoints points;
  bool confirmed = false;
  const std::size_t newton_limit = static_cast<std::size_t>(degree_bound) + 2;
  while (seen.size() < newton_limit) {
    const Rational tt = points.next();
    const Rational g = guess_at(tt);
    if (g.is_zero()) continue;
    auto y = slice.sample(tt);
    if (!y) continue;
    const Rational s = *y * g;
    seen.emplace_back(tt, s);
    if (newton.add(tt, s)) {
      confirmed = true;
      break;
    }
  }
  // Guess denominator restricted to the slice.
  Polynomial gslice = gd;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    if (gt.name(i) == variable) continue;
    gslice = gslice.substitute(i, Polynomial::constant(gd.table(), guess.anchor.assignment.at(gt.name(i))));
  }
  gslice = gslice.embed(slice.table());
  if (confirmed) return finish(newton.polynomial(slice.table()), gslice, slice.samples(), false);

  Thiele thiele;
  bool done = false;
  for (const auto& [tt, s] : seen) {
    if (thiele.add(tt, s) == Thiele::Step::Confirmed) {
      done = true;
      break;
    }
  }
  const std::size_t limit = 2 * static_cast<std::size_t>(degree_bound) + 3;
  while (!done) {
    if (slice.samples() >= limit) throw Error(kInconsistent);
    const Rational tt = points.next();
    const Rational g = guess_at(tt);
    if (g.is_zero()) continue;
    auto y = slice.sample(tt);
    if (!y) continue;
    done = thiele.add(tt, *y * g) == Thiele::Step::Confirmed;
  }
  auto [n, d] = thiele.fraction(slice.table());
  return finish(n, d * gslice, slice.samples(), true);
}

UnivariateReconstruction reconstruct_univariate_blind(const BlackBoxOracle& oracle,
                                                      const std::map<std::string, BigInt>& anchor,
                                                      const std::string& variable, unsigned degree_bound) {
  Slice slice(oracle, anchor, variable);
  Thiele thiele;
  const std::size_t limit = 2 * static_cast<std::size_t>(degree_bound) + 3;
  SamplePoints points;
  while (true) {
    if (slice.samples() >= limit) throw Error(kInconsistent);
    const Rational tt = points.next();
    auto y = slice.sample(tt);
    if (!y) continue;
    if (thiele.add(tt, *y) == Thiele::Step::Confirmed) break;
  }
  auto [n, d] = thiele.fraction(slice.table());
  return finish(n, d, slice.samples(), true);
}

}  // namespace mapart
