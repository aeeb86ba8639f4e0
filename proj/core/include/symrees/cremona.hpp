#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symrees/rees.hpp"

namespace symrees {

/// Inverse representative g in k[y] with g_i(f) = x_i D.
struct InverseData {
  std::vector<Polynomial> inverse;
  Polynomial factor;
  int inverse_degree = 0;
};

struct BirationalityResult {
  bool birational = false;
  std::optional<InverseData> witness;
  /// Why the answer is negative ("" when birational).
  std::string reason;
};

/// Square maps only: n+1 forms on P^n. Tries syzygies of the weak Jacobian
/// dual in increasing degree up to max_inverse_degree (default: d^(n-1)) and
/// accepts the first one whose composition with f is x_i D.
BirationalityResult is_birational(const Ideal& I, int max_inverse_degree = 0);
BirationalityResult is_birational(const ReesPresentation& P, int max_inverse_degree = 0);

/// All minimal syzygies of the weak Jacobian dual of one degree that pass the
/// composition check, each scaled so that D has leading coefficient 1.
std::vector<InverseData> inverse_candidates(const ReesPresentation& P, int degree);

/// D = g_i(f) / x_i, checked equal for all i. `inverse` has one entry per
/// source variable and lives in a ring with one variable per form. Throws DomainError when G is not an inverse.
Polynomial inversion_factor(const std::vector<Polynomial>& forms, const std::vector<Polynomial>& inverse);

/// g_i(f) x_j = g_j(f) x_i for all i, j.
bool plane_composition_oracle(const std::vector<Polynomial>& forms, const std::vector<Polynomial>& inverse);

/// The Rees ideals of I and I' agree after exchanging the x and y blocks.
bool check_graph_identification(const Ideal& I, const Ideal& Iprime);

/// Forms f and h (rings with the same number of variables, matched by
/// position) define the same map: f_i h_j = f_j h_i.
bool projectively_equal(const std::vector<Polynomial>& f, const std::vector<Polynomial>& h);

/// The forms have no common factor, i.e. they generate an ideal of
/// codimension at least 2.
bool has_trivial_gcd(const std::vector<Polynomial>& forms);

}  // namespace symrees
