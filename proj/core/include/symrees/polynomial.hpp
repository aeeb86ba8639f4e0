#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symrees/errors.hpp"
#include "symrees/field.hpp"
#include "symrees/monomial.hpp"
#include "symrees/ring.hpp"

namespace symrees {

/// Exact multivariate polynomial. Terms are kept sorted in descending order
/// under the ring's default order and carry nonzero coefficients only.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Scalar coeff;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c = 1);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Scalar& leading_coeff() const { return leading_term().coeff; }

  /// Largest weighted degree of a term; -1 for the zero polynomial.
  int degree() const;
  /// Largest weighted degree restricted to the variables of one block.
  int block_degree(std::size_t block) const;
  bool is_homogeneous() const;
  /// Variables [first, first + count) only; used for bidegrees.
  bool is_homogeneous_in(std::size_t first, std::size_t count) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c = 1) const;
  Polynomial pow(unsigned exponent) const;

  /// Content removed with a positive leading coefficient over QQ, monic over F_p.
  Polynomial normalized() const;
  /// Leading coefficient 1.
  Polynomial monic() const;

  /// Coefficient of the monomial (0 if absent).
  Scalar coefficient(const Monomial& m) const;

  /// Canonical text: descending terms, explicit '*', '^' powers, a/b rationals.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
  void add_scaled(const Polynomial& other, const Scalar& factor);

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Scalar& c, const Polynomial& p);

/// Ring homomorphism sending variable i of f's ring to images[i].
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Reinterprets f in `target`, sending variable i to variable index_map[i]
/// (or to 1 when index_map[i] < 0 and the exponent is zero; a nonzero exponent
/// on an unmapped variable is an error).
Polynomial remap(const Polynomial& f, const RingPtr& target, std::span<const int> index_map);

/// Maps variables by name; every variable of f with a nonzero exponent must
/// exist in target.
Polynomial remap_by_name(const Polynomial& f, const RingPtr& target);

/// Quotient q with f = q*g. Throws NotDivisibleError when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);
bool divides(const Polynomial& g, const Polynomial& f);

/// Multivariate division by a list (not a Groebner basis in general); returns
/// the remainder.
Polynomial divide_remainder(const Polynomial& f, std::span<const Polynomial> divisors);

/// Degree in each block of the ring. Throws NotHomogeneousError if f is not
/// homogeneous in every block, DomainError if the ring has one block.
std::vector<int> bidegree(const Polynomial& f);

/// Largest monomial dividing every term of f.
Monomial monomial_content(const Polynomial& f);

/// Formal partial derivative.
Polynomial derivative(const Polynomial& f, std::size_t var);

/// Parses the canonical text format (and the usual infix extensions:
/// parentheses, integer powers of subexpressions, rationals).
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Parse error with 1-based position information.
class ParseError : public AlgebraError {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace symrees
