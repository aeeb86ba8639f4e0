#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symrees/cremona.hpp"
#include "symrees/ideal.hpp"
#include "symrees/rees.hpp"

namespace symrees {

/// What I^l is saturated against to obtain I^(l). MinimalPrimes takes the
/// intersection of the P^l over the minimal primes P of a squarefree
/// monomial ideal; Unmixed keeps the components of I^l of minimal
/// codimension, which is I^(l) whenever R/I is unmixed.
struct SaturationTarget {
  enum class Kind { Irrelevant, Ideal, Element, MinimalPrimes, Unmixed };
  Kind kind = Kind::Irrelevant;
  std::optional<symrees::Ideal> ideal;
  std::optional<Polynomial> element;

  static SaturationTarget irrelevant() { return {}; }
  static SaturationTarget from_ideal(symrees::Ideal J);
  static SaturationTarget from_element(Polynomial h);
  static SaturationTarget minimal_primes();
  static SaturationTarget unmixed();

  /// I : target^infinity, or the unmixed part of I. MinimalPrimes needs the
  /// base ideal and is handled by SymbolicFiltration; here it throws
  /// DomainError.
  SaturationResult saturate(const symrees::Ideal& I) const;
  /// "m", "min", "unm", or the ideal or element in canonical text.
  std::string describe() const;
};

/// Minimal primes of a squarefree monomial ideal as variable index sets
/// (minimal transversals of the generator supports).
std::vector<std::vector<std::size_t>> monomial_minimal_primes(const Ideal& I);

/// Intersection of P^l over the minimal primes P of a squarefree monomial
/// ideal.
Ideal monomial_symbolic_power(const Ideal& I, int l);

/// Necessary-condition screen for a user target: saturating I must keep the
/// dimension and the multiplicity of R/I, so the target avoids every top
/// dimensional minimal prime.
bool target_preserves_top_components(const Ideal& I, const SaturationTarget& target);

/// Levels I^(l) = I^l : target^infinity, computed on demand and cached.
class SymbolicFiltration {
 public:
  explicit SymbolicFiltration(Ideal I, SaturationTarget target = SaturationTarget::irrelevant());

  const Ideal& base() const { return base_; }
  const SaturationTarget& target() const { return target_; }

  const Ideal& power(int l);
  const Ideal& symbolic(int l);
  /// Saturation exponent of I^l; 0 for the MinimalPrimes and Unmixed kinds.
  int saturation_exponent(int l);
  /// Sum of I^(s) I^(l-s) over 1 <= s < l (l >= 2).
  const Ideal& products_below(int l);

  /// Minimal generators of I^(l) modulo I^l.
  std::vector<Polynomial> fresh(int l);
  /// Minimal generators of I^(l) modulo products_below(l); for l = 1 the
  /// minimal generators of I^(1).
  std::vector<Polynomial> essential(int l);

 private:
  struct Level {
    std::optional<Ideal> power, symbolic, products;
    int exponent = 0;
  };
  Level& level(int l);

  Ideal base_;
  SaturationTarget target_;
  std::map<int, Level> levels_;
};

/// Representatives of (gens) modulo K: normal forms, reduced echelon per
/// degree, normalized, ascending by degree.
std::vector<Polynomial> canonical_modulo(const std::vector<Polynomial>& gens, const Ideal& K);

/// R/I has positive depth: I : m = I.
bool depth_positive(const Ideal& I);

struct ConditionRecord {
  enum class Verdict { Zero, Primary, Fails };
  int level = 0;
  Verdict verdict = Verdict::Zero;
  /// I^l : I^(l) (the unit ideal for Zero).
  Ideal annihilator;
  /// First variable outside the radical of the annihilator (Fails only).
  std::optional<std::size_t> witness;
};

std::string to_string(ConditionRecord::Verdict v);

/// Condition (i) at each level 1..lmax: I^(l)/I^l is zero or primary to m.
std::vector<ConditionRecord> condition_i(SymbolicFiltration& F, int lmax);

/// P : a = P for each successive element a of seq modulo the earlier ones.
bool is_regular_sequence(const Ideal& P, const std::vector<Polynomial>& seq);

/// Linear forms forming a regular sequence of length dim R/S on R/S, which
/// makes R/S Cohen-Macaulay and hence S unmixed. Tries variables (last to
/// first) and then seeded random linear forms.
struct UnmixedCertificate {
  bool certified = false;
  std::vector<Polynomial> sequence;
};
UnmixedCertificate cohen_macaulay_certificate(const Ideal& S, std::uint64_t seed = 1);

struct ExpectedFormReport {
  /// D lies in I^(d').
  bool precondition = false;
  /// (l, I^(l) = sum_j D^j I^(l - j d')).
  std::vector<std::pair<int, bool>> levels;
};

ExpectedFormReport expected_form_check(SymbolicFiltration& F, const Polynomial& D, int dprime, int lmax);

/// (P, x_i z - g_i(y)) in the ring of presentation_ring(I, {(D, d')}).
Ideal symbolic_presentation(const ReesPresentation& P, const InverseData& inv);

}  // namespace symrees
