#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace symrees {

inline constexpr std::size_t kMaxVariables = 32;

/// Dense exponent vector. Slots beyond the ring's variable count stay zero, so
/// equality and hashing never need to know the ring.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, int power = 1);

  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);

  int degree() const;
  int weighted_degree(std::span<const int> weights) const;
  bool is_one() const { return mask_ == 0; }
  std::uint32_t support_mask() const { return mask_; }

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial& operator*=(const Monomial& b);
  /// Exact quotient; the caller guarantees `b.divides(*this)`.
  Monomial operator/(const Monomial& b) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.mask_ == b.mask_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  void recompute_mask();

  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace symrees
