#include "mapart/monomial.hpp"

#include "mapart/error.hpp"

namespace mapart {

namespace {
const simd::ExponentKernels& kernels() { return simd::active_kernels(); }

void check_same(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw InvariantError("monomials over different variable counts");
}
}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(nvars), lanes_(simd::padded_width(nvars), 0) {}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw InvariantError("monomial index out of range");
  if (e > 0xFFFFU) throw Error("exponent overflow");
  lanes_[i] = static_cast<simd::Exponent>(e);
}

std::uint32_t Monomial::total_degree() const { return kernels().total_degree(lanes_.data(), lanes_.size()); }

bool Monomial::is_one() const {
  for (auto e : lanes_) {
    if (e != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial out(a.nvars_);
  if (!kernels().add(a.lanes_.data(), b.lanes_.data(), out.lanes_.data(), out.lanes_.size())) {
    throw Error("exponent overflow");
  }
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  if (!divides(b, a)) throw InvariantError("monomial quotient of non-divisible pair");
  Monomial out(a.nvars_);
  kernels().sub(a.lanes_.data(), b.lanes_.data(), out.lanes_.data(), out.lanes_.size());
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  const auto la = a.lanes();
  return kernels().divides(la.data(), b.lanes().data(), la.size());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  Monomial out(a.nvars_);
  kernels().lcm(a.lanes_.data(), b.lanes_.data(), out.lanes_.data(), out.lanes_.size());
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  check_same(a, b);
  const auto la = a.lanes();
  return kernels().disjoint(la.data(), b.lanes().data(), la.size());
}

}  // namespace mapart
