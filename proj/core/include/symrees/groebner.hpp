#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "symrees/form_matrix.hpp"
#include "symrees/order.hpp"
#include "symrees/polynomial.hpp"

namespace symrees {

/// Installs a cooperative deadline for the current thread. Nested scopes keep
/// the earliest deadline. Long computations poll it between S-pairs.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::steady_clock::duration budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> saved_;
};

/// Throws DeadlineExceeded when the current thread's deadline has passed.
void check_deadline();

namespace detail {
struct BasisImpl;
}

/// Counters collected by one Buchberger run.
struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_discarded = 0;
};

/// Reduced Groebner basis of an ideal (rank 1) or of a submodule of a free
/// module of finite rank, under a position-over-term extension of `order`.
class GroebnerBasis {
 public:
  using Vector = std::vector<Polynomial>;

  GroebnerBasis() = default;

  const RingPtr& ring() const;
  const MonomialOrder& order() const;
  std::size_t rank() const;
  std::size_t size() const;

  /// Ideal case: basis elements, monic, ascending by leading monomial.
  const std::vector<Polynomial>& generators() const;
  /// Module case: basis elements as component vectors.
  const std::vector<Vector>& elements() const;

  /// Leading monomial (and component) of each basis element.
  std::vector<Monomial> leading_monomials() const;
  std::vector<std::size_t> leading_components() const;

  Polynomial normal_form(const Polynomial& f) const;
  Vector normal_form(const Vector& v) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Vector& v) const;
  /// True iff the basis is {1}.
  bool is_unit() const;

  /// Every S-polynomial reduces to zero modulo the basis.
  bool verify_buchberger_criterion() const;

  const GroebnerStats& stats() const;

 private:
  friend GroebnerBasis groebner_basis(std::span<const Polynomial>, const MonomialOrder&);
  friend GroebnerBasis module_groebner_basis(const RingPtr&, std::size_t, std::span<const GroebnerBasis::Vector>,
                                             const MonomialOrder&, std::vector<int>);
  std::shared_ptr<const detail::BasisImpl> impl_;
};

/// Reduced Groebner basis of the ideal generated by `gens` (all in one ring,
/// at least one nonzero).
GroebnerBasis groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order);

/// Submodule of R^rank generated by `gens`, position over term: component 0
/// is the largest. `shifts` are component degree shifts used for sugar.
GroebnerBasis module_groebner_basis(const RingPtr& ring, std::size_t rank, std::span<const GroebnerBasis::Vector> gens,
                                    const MonomialOrder& order, std::vector<int> shifts = {});

/// Minimal homogeneous generators of the submodule generated by `gens`
/// modulo the submodule generated by `modulo` (degreewise linear algebra).
/// Inputs are homogeneous with respect to `shifts`.
std::vector<GroebnerBasis::Vector> minimalize_module(const RingPtr& ring, std::size_t rank,
                                                     std::vector<GroebnerBasis::Vector> gens,
                                                     const std::vector<GroebnerBasis::Vector>& modulo,
                                                     const std::vector<int>& shifts);

/// Degree of a homogeneous module element under component shifts; -1 for 0.
int module_degree(const GroebnerBasis::Vector& v, const std::vector<int>& shifts);

/// First syzygies of the columns of M over R/(modulo): the columns of the
/// result generate {a : M a in (modulo) R^rows}, minimal modulo (modulo) R^cols.
/// Columns are sorted by degree. Column j of M gets the shift u_j making M
/// homogeneous (smallest shift 0); a syzygy a has degree deg(a_j) + u_j, and
/// these degrees are declared on the result.
FormMatrix syzygies(const FormMatrix& M, std::span<const Polynomial> modulo = {});

}  // namespace symrees
