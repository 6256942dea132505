#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapart/fraction_form.hpp"
#include "mapart/integer_factor.hpp"
#include "mapart/polynomial.hpp"

namespace mapart {

struct AnchorPoint {
  std::map<std::string, BigInt> assignment;
  /// Distinguished prime of each candidate factor, by factor index.
  std::vector<BigInt> primes;
};

struct AnchorSearchOptions {
  long lo = 10;
  long hi = 10000;
  std::size_t budget = 20000;
  std::uint64_t seed = 1;
};

/// Distinguished primes for the factors at assignment, or nullopt with the
/// reason in *why.
std::optional<std::vector<BigInt>> anchor_primes(const std::vector<Polynomial>& factors,
                                                 const std::map<std::string, BigInt>& assignment,
                                                 std::string* why = nullptr);

/// Random search; throws Error("no anchor found ...") after the budget.
AnchorPoint find_anchor(const std::vector<Polynomial>& factors, const AnchorSearchOptions& options = {});

struct DenominatorGuess {
  std::vector<Polynomial> factors;
  AnchorPoint anchor;
  std::vector<unsigned> exponents;
  /// Prime factors of the sampled denominator not explained by the guess.
  std::vector<PrimePower> residual;

  Polynomial denominator() const;
  bool complete() const { return residual.empty(); }
};

DenominatorGuess guess_denominator(const Rational& value, const AnchorPoint& anchor,
                                   const std::vector<Polynomial>& factors);

/// Combined residue modulo the product of pairwise coprime moduli.
std::pair<BigInt, BigInt> crt_combine(const std::vector<std::pair<BigInt, BigInt>>& residues);

/// n/d with n == a*d (mod m), |n|, d <= floor(sqrt(m/2)), gcd(d, m) = 1.
std::optional<Rational> rational_reconstruct(const BigInt& a, const BigInt& m);

/// Image of a rational in Z/pZ; nullopt when p divides the denominator.
std::optional<std::uint64_t> rational_mod(const Rational& r, std::uint64_t p);

/// Black-box rational function of named variables. evaluate throws Error at
/// poles; evaluate_mod may be empty.
struct BlackBoxOracle {
  std::vector<std::string> variables;
  std::function<Rational(const std::vector<Rational>&)> evaluate;
  std::function<std::optional<std::uint64_t>(const std::vector<std::uint64_t>&, std::uint64_t)> evaluate_mod;

  static BlackBoxOracle from_fraction(const Fraction& f);
};

/// Primes just below 2^31, descending, skipping none.
std::vector<std::uint64_t> reconstruction_primes(std::size_t count);

/// Value at an integer point from modular images: primes are added until
/// two successive reconstructions agree.
Rational reconstruct_value(const BlackBoxOracle& oracle, const std::vector<BigInt>& point, std::size_t max_primes = 64);

struct UnivariateReconstruction {
  /// Over a one-variable table; denominator primitive with positive leading
  /// coefficient.
  Polynomial numerator;
  Polynomial denominator;
  std::size_t samples = 0;
  bool used_fallback = false;
};

/// Newton interpolation of oracle * guess on the slice through the anchor
/// along variable, stopping at the first confirmed sample. Falls back to
/// Thiele interpolation when no polynomial of degree <= degree_bound fits.
UnivariateReconstruction deflate_and_reconstruct_univariate(const BlackBoxOracle& oracle, const DenominatorGuess& guess,
                                                            const std::string& variable, unsigned degree_bound);

/// Thiele interpolation of the raw oracle on the same slice.
UnivariateReconstruction reconstruct_univariate_blind(const BlackBoxOracle& oracle,
                                                      const std::map<std::string, BigInt>& anchor,
                                                      const std::string& variable, unsigned degree_bound);

/// Oracle served over a line protocol: writes "EVAL x=7 y=5 mod p", reads
/// "VAL v".
class StreamOracle {
 public:
  StreamOracle(std::istream& in, std::ostream& out, std::vector<std::string> variables);

  std::optional<std::uint64_t> evaluate(const std::vector<std::uint64_t>& point, std::uint64_t p);
  BlackBoxOracle as_oracle();
  std::size_t requests() const { return requests_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::vector<std::string> vars_;
  std::size_t requests_ = 0;
};

/// Answers EVAL requests from in with values of f until end of input.
/// Poles are answered with "POLE".
void serve_oracle(const Fraction& f, std::istream& in, std::ostream& out);

}  // namespace mapart
