#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symrees/cremona.hpp"
#include "symrees/form_matrix.hpp"
#include "symrees/ideal.hpp"
#include "symrees/rees.hpp"

namespace symrees {

/// (n+1) x n matrix over k[x1..xn]: linear forms in the first n-1 columns,
/// forms of degree r in the last one. The base ideal is generated by the
/// signed maximal minors.
struct TemplateInstance {
  int n = 0, r = 0;
  std::uint64_t seed = 0;
  FormMatrix phi;
  Ideal ideal;
  int codimension = 0;
  mpz_class multiplicity = 0;
  /// I_2 of the linear columns is (x)-primary (n = 3 only).
  bool linear_part_primary = false;
  /// Why earlier draws were rejected, one line per draw.
  std::vector<std::string> rejections;
};

/// r^2 + (n-1) r + n(n-1)/2.
mpz_class template_multiplicity(int n, int r);

/// The ring k[x1..xn] used by template instances.
RingPtr template_ring(int n);

/// Builds the instance from an explicit matrix without validation.
TemplateInstance template_from_matrix(const FormMatrix& phi, int r);

/// Draws coefficients in [-5, 5] from mt19937_64(seed), then seed + 1, ...,
/// rejecting draws where I has codimension below 2, fewer than n+1 minimal
/// generators, or (n = 3) a linear part that is not (x)-primary. Throws
/// DomainError after `retries` rejections.
TemplateInstance template_ideal(int n, int r, std::uint64_t seed, int retries = 3);

/// Degree of the implicit equation of the image of P^2 --> P^3.
int implicit_degree(const ReesPresentation& P);

/// det C where h = C * (x_v : v in vars), C read off by sequential division:
/// the coefficient of the first variable takes every term it divides, the
/// next variable works on what is left, and the last must divide the rest.
Polynomial sylvester_form(const std::vector<Polynomial>& h, const std::vector<std::size_t>& vars);

struct SylvesterChain {
  ReesPresentation rees;
  /// I_1((y) phi): the linear columns l_1..l_{n-1}, then f_0.
  std::vector<Polynomial> symmetric;
  /// f_1..f_r in k[x, y].
  std::vector<Polynomial> chain;
  std::vector<std::pair<int, int>> bidegrees;
  bool in_rees = false;
  /// (I_1((y) phi), f_1..f_r) equals the Rees ideal.
  bool equals_rees = false;
};

/// n = 3 only; throws DomainError when the linear part is not (x)-primary.
SylvesterChain sylvester_chain(const TemplateInstance& T);

/// Inverse representatives of degree n-1 read off from (n-1)-subsets of the
/// bidegree (1,1) generators of the Rees ideal, one per projective class.
std::vector<InverseData> linear_inverses(const ReesPresentation& P);

struct AppendixData {
  FormMatrix phi;
  /// Signed 2-minors of phi; the columns of phi are their syzygies.
  std::vector<Polynomial> base;
  ReesPresentation rees;
  /// Rows (sum a_i1 y_i, sum b_i1 y_i, sum c_i1 y_i), the same for column 2,
  /// (-x2, x1, 0) and (-x2, 0, x0); lives in rees.ambient.
  FormMatrix B;
  /// Delta_k = det(B without row k-1).
  std::array<Polynomial, 4> delta;
  /// 2-minors of the first two rows of B (columns 2 3, 1 3, 1 2), in k[y].
  std::array<Polynomial, 3> q;
  FormMatrix phi_prime;

  bool delta_formulas = false;
  bool eq3 = false;
  /// c1 Delta_1 - c2 Delta_2 = x0 Delta_4 (Cramer on the third column).
  bool eq4 = false;
  /// The same relation with the two sides of opposite sign.
  bool eq4_opposite = false;
  bool q_nonzero = false;
  bool minors_equal_rees = false;
  int codim_B = 0;
  int codim_phi_prime = 0;

  /// Signed 2-minors of phi', with its inversion factor when they invert
  /// the map.
  std::vector<Polynomial> inverse;
  std::optional<Polynomial> factor;
  bool inverse_gcd_one = false;
  int inverse_degree = 0;
};

/// phi is 3 x 2 over k[x0, x1, x2] with quadric entries free of pure
/// powers; throws DomainError otherwise.
AppendixData appendix_construct(const FormMatrix& phi);

}  // namespace symrees
