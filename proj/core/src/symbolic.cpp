#include "symrees/symbolic.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace symrees {

SaturationTarget SaturationTarget::from_ideal(symrees::Ideal J) {
  SaturationTarget t;
  t.kind = Kind::Ideal;
  t.ideal = std::move(J);
  return t;
}

SaturationTarget SaturationTarget::from_element(Polynomial h) {
  SaturationTarget t;
  t.kind = Kind::Element;
  t.element = std::move(h);
  return t;
}

SaturationTarget SaturationTarget::minimal_primes() {
  SaturationTarget t;
  t.kind = Kind::MinimalPrimes;
  return t;
}

SaturationTarget SaturationTarget::unmixed() {
  SaturationTarget t;
  t.kind = Kind::Unmixed;
  return t;
}

SaturationResult SaturationTarget::saturate(const symrees::Ideal& I) const {
  switch (kind) {
    case Kind::Unmixed:
      return {unmixed_part(I), 0};
    case Kind::MinimalPrimes:
      throw DomainError("minimal-prime symbolic powers need the base ideal");
    case Kind::Irrelevant:
      return symrees::saturate(I, irrelevant_ideal(I.ring()));
    case Kind::Ideal:
      return symrees::saturate(I, *ideal);
    case Kind::Element:
      return symrees::saturate(I, *element);
  }
  throw DomainError("unknown saturation target");
}

std::string SaturationTarget::describe() const {
  switch (kind) {
    case Kind::Irrelevant:
      return "m";
    case Kind::Ideal:
      return "(" + ideal->to_string() + ")";
    case Kind::Element:
      return element->to_string();
    case Kind::MinimalPrimes:
      return "min";
    case Kind::Unmixed:
      return "unm";
  }
  return "";
}

namespace {

bool squarefree_monomial(const Ideal& I) {
  for (const auto& g : I.generators()) {
    if (!g.is_monomial()) return false;
    const Monomial& m = g.leading_monomial();
    for (std::size_t i = 0; i < I.ring()->nvars(); ++i)
      if (m[i] > 1) return false;
  }
  return true;
}

// Minimal monomial generators of the intersection of two monomial ideals.
std::vector<Monomial> intersect_monomial(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> all;
  for (const auto& p : a)
    for (const auto& q : b) all.push_back(Monomial::lcm(p, q));
  std::sort(all.begin(), all.end(), [](const Monomial& x, const Monomial& y) { return x.degree() < y.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : all) {
    if (std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); })) continue;
    out.push_back(m);
  }
  return out;
}

// Monomials of degree l in the given variables.
std::vector<Monomial> prime_power(const std::vector<std::size_t>& vars, int l) {
  std::vector<Monomial> out;
  std::vector<int> e(vars.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == vars.size()) {
      Monomial m;
      for (std::size_t k = 0; k + 1 < vars.size(); ++k) m.set(vars[k], e[k]);
      m.set(vars.back(), left);
      out.push_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (!vars.empty()) rec(0, l);
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> monomial_minimal_primes(const Ideal& I) {
  if (!squarefree_monomial(I)) throw DomainError("minimal primes need a squarefree monomial ideal");
  if (I.is_zero()) return {{}};
  const std::size_t n = I.ring()->nvars();
  if (n > 20) throw DomainError("too many variables for transversal enumeration");
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.generators()) supports.push_back(g.leading_monomial().support_mask());
  std::vector<std::uint32_t> found;
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (auto m : masks) {
    if (std::any_of(found.begin(), found.end(), [&](std::uint32_t f) { return (f & m) == f; })) continue;
    if (std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & m) != 0; })) found.push_back(m);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto m : found) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (1u << i)) vars.push_back(i);
    out.push_back(std::move(vars));
  }
  return out;
}

Ideal monomial_symbolic_power(const Ideal& I, int l) {
  if (l < 1) throw DomainError("symbolic levels start at 1");
  const auto primes = monomial_minimal_primes(I);
  std::vector<Monomial> acc;
  bool first = true;
  for (const auto& P : primes) {
    auto pw = prime_power(P, l);
    acc = first ? pw : intersect_monomial(acc, pw);
    first = false;
  }
  std::vector<Polynomial> gens;
  for (const auto& m : acc) gens.push_back(Polynomial::monomial(I.ring(), m));
  return Ideal(I.ring(), std::move(gens));
}

bool target_preserves_top_components(const Ideal& I, const SaturationTarget& target) {
  const Ideal S = target.saturate(I).ideal;
  if (S.is_unit()) return false;
  const HilbertData a = hilbert(I), b = hilbert(S);
  if (a.dimension != b.dimension) return false;
  return !I.ring()->standard_graded() || a.multiplicity == b.multiplicity;
}

// ---------------------------------------------------------------------------

SymbolicFiltration::SymbolicFiltration(Ideal I, SaturationTarget target)
    : base_(std::move(I)), target_(std::move(target)) {
  if (base_.is_zero()) throw DomainError("symbolic powers of the zero ideal");
}

SymbolicFiltration::Level& SymbolicFiltration::level(int l) {
  if (l < 1) throw DomainError("symbolic levels start at 1");
  return levels_[l];
}

const Ideal& SymbolicFiltration::power(int l) {
  Level& L = level(l);
  if (!L.power) {
    if (l == 1)
      L.power = base_.is_homogeneous() ? minimalized(base_) : base_;
    else {
      const Ideal prev = power(l - 1);
      const Ideal next = product(prev, power(1));
      L.power = next.is_homogeneous() ? minimalized(next) : next;
    }
  }
  return *L.power;
}

const Ideal& SymbolicFiltration::symbolic(int l) {
  Level& L = level(l);
  if (!L.symbolic) {
    const Ideal P = power(l);
    SaturationResult res;
    if (target_.kind == SaturationTarget::Kind::MinimalPrimes) {
      res.ideal = monomial_symbolic_power(base_, l);
    } else {
      res = target_.saturate(P);
    }
    L.exponent = res.exponent;
    L.symbolic = res.ideal.is_homogeneous() && !res.ideal.is_zero() ? minimalized(res.ideal) : res.ideal;
  }
  return *L.symbolic;
}

int SymbolicFiltration::saturation_exponent(int l) {
  symbolic(l);
  return level(l).exponent;
}

const Ideal& SymbolicFiltration::products_below(int l) {
  if (l < 2) throw DomainError("products of lower levels need l >= 2");
  Level& L = level(l);
  if (!L.products) {
    Ideal acc = Ideal::zero(base_.ring());
    for (int s = 1; 2 * s <= l; ++s) acc = sum(acc, product(symbolic(s), symbolic(l - s)));
    L.products = acc.is_homogeneous() ? minimalized(acc) : acc;
  }
  return *L.products;
}

std::vector<Polynomial> SymbolicFiltration::fresh(int l) {
  const Ideal& S = symbolic(l);
  const Ideal& P = power(l);
  return canonical_modulo(minimal_generators_modulo(S, P), P);
}

std::vector<Polynomial> SymbolicFiltration::essential(int l) {
  const Ideal& S = symbolic(l);
  if (l == 1) return canonical_modulo(minimal_generators(S), Ideal::zero(S.ring()));
  const Ideal& B = products_below(l);
  return canonical_modulo(minimal_generators_modulo(S, B), B);
}

// ---------------------------------------------------------------------------

std::vector<Polynomial> canonical_modulo(const std::vector<Polynomial>& gens, const Ideal& K) {
  std::map<int, std::vector<Polynomial>> by_degree;
  for (const auto& g : gens) {
    Polynomial r = K.normal_form(g);
    if (!r.is_zero()) by_degree[r.degree()].push_back(std::move(r));
  }
  std::vector<Polynomial> out;
  for (auto& [deg, polys] : by_degree) {
    std::vector<Polynomial> rows;
    for (auto v : polys) {
      bool changed = true;
      while (changed && !v.is_zero()) {
        changed = false;
        for (const auto& row : rows) {
          const Scalar c = v.coefficient(row.leading_monomial());
          if (c != 0) {
            v -= row.scaled(c);
            changed = true;
          }
        }
      }
      if (v.is_zero()) continue;
      v = v.monic();
      for (auto& row : rows) {
        const Scalar c = row.coefficient(v.leading_monomial());
        if (c != 0) row -= v.scaled(c);
      }
      rows.push_back(std::move(v));
    }
    std::vector<Polynomial> normalized;
    for (auto& r : rows) normalized.push_back(r.normalized());
    std::sort(normalized.begin(), normalized.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.ring()->default_order().less(b.leading_monomial(), a.leading_monomial());
    });
    out.insert(out.end(), normalized.begin(), normalized.end());
  }
  return out;
}

bool depth_positive(const Ideal& I) {
  if (I.is_unit()) throw DomainError("depth of the zero module");
  return I.contains(quotient(I, irrelevant_ideal(I.ring())));
}

std::string to_string(ConditionRecord::Verdict v) {
  switch (v) {
    case ConditionRecord::Verdict::Zero:
      return "ZERO";
    case ConditionRecord::Verdict::Primary:
      return "PRIMARY";
    case ConditionRecord::Verdict::Fails:
      return "FAILS";
  }
  return "";
}

std::vector<ConditionRecord> condition_i(SymbolicFiltration& F, int lmax) {
  if (lmax < 1) throw DomainError("lmax must be at least 1");
  const RingPtr& R = F.base().ring();
  std::vector<ConditionRecord> out;
  for (int l = 1; l <= lmax; ++l) {
    ConditionRecord rec;
    rec.level = l;
    const auto fresh = F.fresh(l);
    if (fresh.empty()) {
      rec.verdict = ConditionRecord::Verdict::Zero;
      rec.annihilator = Ideal::unit(R);
    } else {
      rec.annihilator = quotient(F.power(l), Ideal(R, fresh));
      if (krull_dimension(rec.annihilator) <= 0) {
        rec.verdict = ConditionRecord::Verdict::Primary;
      } else {
        rec.verdict = ConditionRecord::Verdict::Fails;
        for (std::size_t i = 0; i < R->nvars(); ++i)
          if (!radical_contains(rec.annihilator, Polynomial::variable(R, i))) {
            rec.witness = i;
            break;
          }
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

bool is_regular_sequence(const Ideal& P, const std::vector<Polynomial>& seq) {
  Ideal J = P;
  for (const auto& a : seq) {
    if (J.is_unit()) return false;
    if (!J.contains(quotient(J, a))) return false;
    J = sum(J, Ideal(P.ring(), {a}));
  }
  return !J.is_unit();
}

UnmixedCertificate cohen_macaulay_certificate(const Ideal& S, std::uint64_t seed) {
  UnmixedCertificate cert;
  if (S.is_unit()) return cert;
  const RingPtr& R = S.ring();
  const int dim = krull_dimension(S);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(1, 9);
  Ideal J = S;
  for (int k = 0; k < dim; ++k) {
    std::vector<Polynomial> candidates;
    for (std::size_t i = R->nvars(); i-- > 0;) candidates.push_back(Polynomial::variable(R, i));
    for (int r = 0; r < 3; ++r) {
      Polynomial l(R);
      for (std::size_t i = 0; i < R->nvars(); ++i) l += Polynomial::variable(R, i).scaled(Scalar(coeff(rng)));
      candidates.push_back(l);
    }
    bool found = false;
    for (const auto& a : candidates) {
      if (J.contains(a)) continue;
      if (J.contains(quotient(J, a))) {
        cert.sequence.push_back(a);
        J = sum(J, Ideal(R, {a}));
        found = true;
        break;
      }
    }
    if (!found) return cert;
  }
  cert.certified = true;
  return cert;
}

ExpectedFormReport expected_form_check(SymbolicFiltration& F, const Polynomial& D, int dprime, int lmax) {
  if (dprime < 1) throw DomainError("d' must be positive");
  ExpectedFormReport rep;
  rep.precondition = F.symbolic(dprime).contains(D);
  if (!rep.precondition) return rep;
  const RingPtr& R = F.base().ring();
  for (int l = 1; l <= lmax; ++l) {
    Ideal E = Ideal::zero(R);
    Polynomial Dj = Polynomial::constant(R, 1);
    for (int j = 0; j * dprime <= l; ++j) {
      const int rest = l - j * dprime;
      const Ideal part = rest == 0 ? Ideal(R, {Dj}) : product(Ideal(R, {Dj}), F.power(rest));
      E = sum(E, part);
      Dj = Dj * D;
    }
    const Ideal& S = F.symbolic(l);
    rep.levels.emplace_back(l, E.contains(S) && S.contains(E));
  }
  return rep;
}

Ideal symbolic_presentation(const ReesPresentation& P, const InverseData& inv) {
  const Ideal I(P.source, P.forms);
  const RingPtr T = presentation_ring(I, {{inv.factor, inv.inverse_degree}});
  std::vector<Polynomial> gens;
  for (const auto& g : P.ideal.generators()) gens.push_back(remap_by_name(g, T));
  const std::size_t n = P.source->nvars();
  const Polynomial z = Polynomial::variable(T, T->nvars() - 1);
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(Polynomial::variable(T, i) * z - remap_by_name(inv.inverse[i], T));
  return Ideal(T, std::move(gens));
}

}  // namespace symrees
