#include "mapart/reconstruct.hpp"

#include <algorithm>
#include <random>

#include "mapart/error.hpp"
#include "mapart/prime_field.hpp"

namespace mapart {

std::optional<std::vector<BigInt>> anchor_primes(const std::vector<Polynomial>& factors,
                                                 const std::map<std::string, BigInt>& assignment, std::string* why) {
  std::vector<BigInt> primes;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Rational v = factors[i].evaluate_integer(assignment);
    if (v.is_zero()) {
      if (why) *why = "factor " + std::to_string(i + 1) + " vanishes";
      return std::nullopt;
    }
    if (!v.is_integer()) throw Error("candidate factors must have integer coefficients");
    const BigInt n = abs(v.numerator());
    const auto f = factor_integer(n);
    if (f.empty()) {
      if (why) *why = "factor " + std::to_string(i + 1) + " evaluates to a unit";
      return std::nullopt;
    }
    if (f.back().exponent != 1) {
      if (why) *why = "largest prime of factor " + std::to_string(i + 1) + " is repeated";
      return std::nullopt;
    }
    const BigInt p = f.back().prime;
    for (std::size_t j = 0; j < primes.size(); ++j) {
      if (primes[j] == p) {
        if (why) *why = "factors " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " share prime " + p.get_str();
        return std::nullopt;
      }
    }
    primes.push_back(p);
  }
  return primes;
}

AnchorPoint find_anchor(const std::vector<Polynomial>& factors, const AnchorSearchOptions& options) {
  if (factors.empty()) throw Error("no candidate factors");
  for (const auto& f : factors) {
    if (f.is_constant()) throw Error("candidate factors must be non-constant");
  }
  if (options.lo > options.hi) throw Error("empty sampling range");
  const VarTablePtr& table = factors.front().table();
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> dist(options.lo, options.hi);
  std::string best_why = "no attempt made";
  std::map<std::string, BigInt> best;
  std::size_t best_good = 0;
  for (std::size_t attempt = 0; attempt < options.budget; ++attempt) {
    std::map<std::string, BigInt> point;
    for (const auto& name : table->names()) point[name] = BigInt(dist(rng));
    std::string why;
    if (auto primes = anchor_primes(factors, point, &why)) return AnchorPoint{point, *primes};
    // Count factors passing individually to report the nearest miss.
    std::size_t good = 0;
    for (const auto& f : factors) {
      if (anchor_primes({f}, point)) ++good;
    }
    if (best.empty() || good > best_good) {
      best = point;
      best_good = good;
      best_why = why;
    }
  }
  std::string where;
  for (const auto& [k, v] : best) where += (where.empty() ? "" : ", ") + k + "=" + v.get_str();
  throw Error("no anchor found after " + std::to_string(options.budget) + " attempts; best candidate {" + where + "}: " +
              std::to_string(best_good) + " of " + std::to_string(factors.size()) + " factors usable, " + best_why);
}

Polynomial DenominatorGuess::denominator() const {
  if (factors.empty()) throw Error("empty guess");
  Polynomial d = Polynomial::constant(factors.front().table(), 1);
  for (std::size_t i = 0; i < factors.size(); ++i) d *= factors[i].pow(exponents[i]);
  return d;
}

DenominatorGuess guess_denominator(const Rational& value, const AnchorPoint& anchor, const std::vector<Polynomial>& factors) {
  if (anchor.primes.size() != factors.size()) throw Error("anchor does not match the candidate factors");
  DenominatorGuess g;
  g.factors = factors;
  g.anchor = anchor;
  g.exponents.assign(factors.size(), 0);
  for (const auto& pp : factor_integer(value.denominator())) {
    bool matched = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (anchor.primes[i] == pp.prime) {
        g.exponents[i] = pp.exponent;
        matched = true;
      }
    }
    if (!matched) g.residual.push_back(pp);
  }
  return g;
}

std::pair<BigInt, BigInt> crt_combine(const std::vector<std::pair<BigInt, BigInt>>& residues) {
  if (residues.empty()) throw Error("no residues");
  BigInt a = residues.front().first;
  BigInt m = residues.front().second;
  if (m <= 0) throw Error("modulus must be positive");
  mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  for (std::size_t k = 1; k < residues.size(); ++k) {
    BigInt b = residues[k].first;
    const BigInt n = residues[k].second;
    if (n <= 0) throw Error("modulus must be positive");
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t()) == 0) throw Error("moduli are not coprime");
    // a + m * ((b - a) * m^-1 mod n)
    BigInt t = (b - a) * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    a += m * t;
    m *= n;
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  }
  return {a, m};
}

std::optional<Rational> rational_reconstruct(const BigInt& a_in, const BigInt& m) {
  if (m <= 0) throw Error("modulus must be positive");
  BigInt a = a_in;
  mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  BigInt half = m / 2;
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  BigInt r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), m.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), r1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rational(r1, t1);
}

std::optional<std::uint64_t> rational_mod(const Rational& r, std::uint64_t p) {
  const BigInt pp(static_cast<unsigned long>(p));
  BigInt n = r.numerator(), d = r.denominator();
  mpz_fdiv_r(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
  mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
  if (d == 0) return std::nullopt;
  const auto inv = inverse_mod(d.get_ui(), p);
  if (!inv) return std::nullopt;
  return mul_mod(n.get_ui(), *inv, p);
}

namespace {

std::optional<std::uint64_t> poly_mod(const Polynomial& f, const std::vector<std::uint64_t>& point, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    auto c = rational_mod(t.coeff, p);
    if (!c) return std::nullopt;
    std::uint64_t v = *c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.mono[i] > 0) v = mul_mod(v, pow_mod(point[i] % p, t.mono[i], p), p);
    }
    acc = (acc + v) % p;
  }
  return acc;
}

}  // namespace

BlackBoxOracle BlackBoxOracle::from_fraction(const Fraction& f) {
  BlackBoxOracle o;
  o.variables = f.numerator.table()->names();
  const Polynomial num = f.numerator;
  const Polynomial den = f.denominator_product();
  o.evaluate = [num, den](const std::vector<Rational>& x) {
    const Rational d = den.evaluate(x);
    if (d.is_zero()) throw Error("pole");
    return num.evaluate(x) / d;
  };
  o.evaluate_mod = [num, den](const std::vector<std::uint64_t>& x, std::uint64_t p) -> std::optional<std::uint64_t> {
    auto d = poly_mod(den, x, p);
    auto n = poly_mod(num, x, p);
    if (!d || !n || *d == 0) return std::nullopt;
    return mul_mod(*n, *inverse_mod(*d, p), p);
  };
  return o;
}

std::vector<std::uint64_t> reconstruction_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = (1ULL << 31) - 1; out.size() < count && c > 2; c -= 2) {
    if (is_prime_u64(c)) out.push_back(c);
  }
  return out;
}

Rational reconstruct_value(const BlackBoxOracle& oracle, const std::vector<BigInt>& point, std::size_t max_primes) {
  if (!oracle.evaluate_mod) throw Error("oracle has no modular evaluation");
  std::vector<std::pair<BigInt, BigInt>> residues;
  std::optional<Rational> last;
  for (auto p : reconstruction_primes(max_primes)) {
    std::vector<std::uint64_t> xp;
    const BigInt pp(static_cast<unsigned long>(p));
    for (const auto& v : point) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pp.get_mpz_t());
      xp.push_back(r.get_ui());
    }
    auto val = oracle.evaluate_mod(xp, p);
    if (!val) continue;
    residues.emplace_back(BigInt(static_cast<unsigned long>(*val)), pp);
    const auto [a, m] = crt_combine(residues);
    auto r = rational_reconstruct(a, m);
    if (r && last && *r == *last) return *r;
    last = r;
  }
  throw Error("rational reconstruction did not stabilize");
}

}  // namespace mapart
