#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace symrees {

/// Exact scalar. Over a prime field the value is kept as an integer in [0, p).
using Scalar = mpq_class;

/// The coefficient field: the rationals or a prime field F_p (p < 2^31).
class CoefficientField {
 public:
  CoefficientField() = default;

  static CoefficientField rationals() { return CoefficientField{}; }
  static CoefficientField prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  /// Canonical representative of `value` in this field. Throws DomainError
  /// when a denominator vanishes modulo p.
  Scalar reduce(const Scalar& value) const;
  void reduce_in_place(Scalar& value) const;

  Scalar inverse(const Scalar& value) const;

  /// "QQ" or "Fp(p)".
  std::string name() const;

  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

 private:
  explicit CoefficientField(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace symrees
