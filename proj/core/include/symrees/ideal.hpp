#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symrees/form_matrix.hpp"
#include "symrees/groebner.hpp"
#include "symrees/polynomial.hpp"

namespace symrees {

/// Ideal given by a generator list. Groebner bases are cached per monomial
/// order; copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const;

  const GroebnerBasis& groebner() const;
  const GroebnerBasis& groebner(const MonomialOrder& order) const;
  /// Number of cached bases (diagnostics).
  std::vector<GroebnerBasis> cached_bases() const;

  bool contains(const Polynomial& f) const;
  /// J is a subset of this ideal.
  bool contains(const Ideal& J) const;
  bool is_unit() const;
  Polynomial normal_form(const Polynomial& f) const;

  /// Generators in canonical text, comma separated.
  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<std::string, std::shared_ptr<const GroebnerBasis>>> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Hilbert series data of R/I. The series is numerator / prod_i (1 - t^{w_i}).
struct HilbertData {
  std::vector<mpz_class> numerator;
  /// Q(t) with series Q(t)/(1-t)^dimension; standard graded rings only.
  std::vector<mpz_class> reduced_numerator;
  int dimension = 0;
  int codimension = 0;
  /// e_0(R/I); zero when the ring is not standard graded or I = R.
  mpz_class multiplicity = 0;
};

struct SaturationResult {
  Ideal ideal;
  /// Smallest k with J^k * (I : J^infinity) contained in I.
  int exponent = 0;
};

bool same_ideal(const Ideal& a, const Ideal& b);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
/// I^l, minimalized when I is homogeneous.
Ideal power(const Ideal& I, unsigned l);

/// I : f. Homogeneous inputs use a Groebner basis of (I, f - w) with a new
/// variable w last in reverse lexicographic order; others go through
/// intersection.
Ideal quotient(const Ideal& I, const Polynomial& f);
/// I : J as the intersection of the I : f_j over generators f_j not in I.
Ideal quotient(const Ideal& I, const Ideal& J);
/// I : f via (I ∩ (f)) / f.
Ideal quotient_by_intersection(const Ideal& I, const Polynomial& f);

SaturationResult saturate(const Ideal& I, const Polynomial& f);
/// I : J^infinity, equal to the intersection of the I : f_j^infinity.
SaturationResult saturate(const Ideal& I, const Ideal& J);
/// The chain I : J, I : J^2, ... until two consecutive terms agree.
SaturationResult saturate_iterated(const Ideal& I, const Ideal& J);

Ideal intersect(const Ideal& a, const Ideal& b);

/// Minimal homogeneous generators, ascending by degree; deterministic choice
/// among the given generators.
std::vector<Polynomial> minimal_generators(const Ideal& I);
Ideal minimalized(const Ideal& I);
/// Generators of I forming a minimal generating set of (I + K)/K.
std::vector<Polynomial> minimal_generators_modulo(const Ideal& I, const Ideal& K);

/// Ideal of k x k minors, minimalized when homogeneous.
Ideal minors(const FormMatrix& M, std::size_t k);

HilbertData hilbert(const Ideal& I);
/// Krull dimension of R/I (-1 for the unit ideal).
int krull_dimension(const Ideal& I);
int codimension(const Ideal& I);

/// Intersection of the primary components of I of minimal codimension c,
/// computed by linkage as J : (J : I) for a complete intersection J ⊆ I of
/// codimension c built from seeded combinations of the generators.
/// Homogeneous I only.
Ideal unmixed_part(const Ideal& I);
/// Every associated prime of R/I has the same codimension.
bool is_unmixed(const Ideal& I);

/// f^N in I for some N.
bool radical_contains(const Ideal& I, const Polynomial& f);

/// I ∩ k[variables outside `block`], generators kept in I's ring.
Ideal eliminate(const Ideal& I, std::size_t block);
/// I ∩ k[variables outside `vars`].
Ideal eliminate_variables(const Ideal& I, const std::vector<std::size_t>& vars);

/// Generators mapped by variable name into `target` (all must exist there).
Ideal transfer(const Ideal& I, const RingPtr& target);

/// (x_0, ..., x_n) over the variables of one block (all variables by default).
Ideal irrelevant_ideal(const RingPtr& ring);
Ideal irrelevant_ideal(const RingPtr& ring, std::size_t block);

}  // namespace symrees
