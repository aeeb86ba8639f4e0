#include "symrees/field.hpp"

#include "symrees/errors.hpp"

namespace symrees {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientField CoefficientField::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw DomainError("characteristic must be a prime below 2^31");
  return CoefficientField(p);
}

Scalar CoefficientField::reduce(const Scalar& value) const {
  Scalar out = value;
  reduce_in_place(out);
  return out;
}

void CoefficientField::reduce_in_place(Scalar& value) const {
  if (p_ == 0) return;
  const mpz_class p = p_;
  mpz_class num = value.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value.get_den() % p;
  if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p_));
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  value = Scalar(num);
}

Scalar CoefficientField::inverse(const Scalar& value) const {
  if (value == 0) throw DomainError("division by zero");
  if (p_ == 0) return 1 / value;
  mpz_class v = reduce(value).get_num();
  mpz_class inv;
  const mpz_class p = p_;
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Scalar(inv);
}

std::string CoefficientField::name() const {
  return p_ == 0 ? std::string("QQ") : "Fp(" + std::to_string(p_) + ")";
}

}  // namespace symrees
