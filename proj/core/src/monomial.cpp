#include "symrees/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "symrees/errors.hpp"

namespace symrees {

namespace {

constexpr int kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVariables) throw DomainError("too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= kMaxVariables) throw DomainError("variable index out of range");
  if (e < 0 || e > kMaxExponent) throw DomainError("exponent out of range");
  exps_[i] = static_cast<Exponent>(e);
  if (e > 0)
    mask_ |= (1u << i);
  else
    mask_ &= ~(1u << i);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

int Monomial::weighted_degree(std::span<const int> weights) const {
  int d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) d += weights[i] * exps_[i];
  return d;
}

bool Monomial::coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r *= b;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const int e = int(exps_[i]) + int(b.exps_[i]);
    if (e > kMaxExponent) throw DomainError("exponent overflow");
    exps_[i] = static_cast<Exponent>(e);
  }
  mask_ |= b.mask_;
  return *this;
}

Monomial Monomial::operator/(const Monomial& b) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = static_cast<Exponent>(exps_[i] - b.exps_[i]);
  r.recompute_mask();
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  r.mask_ = a.mask_ & b.mask_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

void Monomial::recompute_mask() {
  mask_ = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0) mask_ |= (1u << i);
}

}  // namespace symrees
