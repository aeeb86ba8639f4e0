#include "symrees/ideal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace symrees {

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("ideal without a ring");
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

const GroebnerBasis& Ideal::groebner() const { return groebner(ring_->default_order()); }

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
  const std::string key = order.description();
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& [k, gb] : cache_->bases)
      if (k == key) return *gb;
  }
  std::vector<Polynomial> input = gens_;
  if (input.empty()) input.push_back(Polynomial(ring_));
  auto computed = std::make_shared<const GroebnerBasis>(groebner_basis(input, order));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  for (const auto& [k, gb] : cache_->bases)
    if (k == key) return *gb;
  cache_->bases.emplace_back(key, computed);
  return *computed;
}

std::vector<GroebnerBasis> Ideal::cached_bases() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  std::vector<GroebnerBasis> out;
  for (const auto& [k, gb] : cache_->bases) out.push_back(*gb);
  return out;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  return groebner().contains(f);
}

bool Ideal::contains(const Ideal& J) const {
  return std::all_of(J.generators().begin(), J.generators().end(), [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const { return !gens_.empty() && groebner().is_unit(); }

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (gens_.empty()) return f;
  return groebner().normal_form(f);
}

std::string Ideal::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < gens_.size(); ++i) out << (i ? ", " : "") << gens_[i].to_string();
  return out.str();
}

bool same_ideal(const Ideal& a, const Ideal& b) { return a.contains(b) && b.contains(a); }

// ---------------------------------------------------------------------------
// Sums, products, powers

namespace {

// Drops duplicates up to a scalar factor; keeps first occurrences.
std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
  std::set<std::string> seen;
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (seen.insert(g.normalized().to_string()).second) out.push_back(std::move(g));
  }
  return out;
}

Ideal tidy(const RingPtr& ring, std::vector<Polynomial> gens) {
  gens = dedupe(std::move(gens));
  for (auto& g : gens) g = g.normalized();
  Ideal I(ring, std::move(gens));
  if (I.is_homogeneous() && !I.is_zero()) return Ideal(ring, minimal_generators(I));
  return I;
}

}  // namespace

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), dedupe(std::move(gens)));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), dedupe(std::move(gens)));
}

Ideal power(const Ideal& I, unsigned l) {
  if (l == 0) return Ideal::unit(I.ring());
  Ideal acc = I.is_homogeneous() ? minimalized(I) : I;
  const Ideal base = acc;
  for (unsigned k = 1; k < l; ++k) {
    Ideal next = product(acc, base);
    acc = next.is_homogeneous() ? minimalized(next) : next;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Colon ideals and saturation

namespace {

std::optional<std::size_t> as_variable(const Polynomial& f) {
  if (!f.is_monomial()) return std::nullopt;
  const Monomial& m = f.leading_monomial();
  if (m.degree() != 1) return std::nullopt;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
    if (m[i] == 1) return i;
  return std::nullopt;
}

MonomialOrder variable_last_order(const RingPtr& ring, std::size_t k) {
  std::vector<int> scan;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (i != k) scan.push_back(static_cast<int>(i));
  scan.push_back(static_cast<int>(k));
  return MonomialOrder::weighted_permuted(ring->weights(), scan);
}

// Homogeneous I : x_k (once) or I : x_k^infinity (full).
Ideal colon_by_variable(const Ideal& I, std::size_t k, bool full) {
  const auto& gb = I.groebner(variable_last_order(I.ring(), k));
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    const int e = monomial_content(g)[k];
    const int drop = full ? e : std::min(e, 1);
    out.push_back(drop ? exact_divide(g, Polynomial::monomial(I.ring(), Monomial::variable(k, drop))) : g);
  }
  return Ideal(I.ring(), dedupe(std::move(out)));
}

// Homogeneous I : f or I : f^infinity through (I, f - w) with w last.
Ideal colon_by_form(const Ideal& I, const Polynomial& f, bool full) {
  const RingPtr& R = I.ring();
  const std::string w = fresh_name(*R, "w");
  const RingPtr S = with_extra_variables(R, {w}, {f.degree()}, false);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(remap_by_name(g, S));
  const std::size_t wi = R->nvars();
  gens.push_back(remap_by_name(f, S) - Polynomial::variable(S, wi));
  const GroebnerBasis gb = groebner_basis(gens, S->default_order());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < R->nvars(); ++i) images.push_back(Polynomial::variable(R, i));
  images.push_back(f);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    const int e = monomial_content(g)[wi];
    const int drop = full ? e : std::min(e, 1);
    Polynomial h = drop ? exact_divide(g, Polynomial::monomial(S, Monomial::variable(wi, drop))) : g;
    out.push_back(substitute(h, images));
  }
  return Ideal(R, dedupe(std::move(out)));
}

// General I : f^infinity by eliminating w from (I, 1 - w f).
Ideal saturation_by_elimination(const Ideal& I, const Polynomial& f) {
  const RingPtr& R = I.ring();
  const std::string w = fresh_name(*R, "w");
  const RingPtr S = with_extra_variables(R, {w}, {1}, true);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(remap_by_name(g, S));
  gens.push_back(Polynomial::constant(S, 1) - Polynomial::variable(S, 0) * remap_by_name(f, S));
  Ideal J(S, gens);
  Ideal E = eliminate_variables(J, {0});
  return transfer(E, R);
}

Ideal raw_saturation(const Ideal& I, const Polynomial& f) {
  if (I.is_homogeneous() && f.is_homogeneous()) {
    if (auto k = as_variable(f)) return colon_by_variable(I, *k, true);
    return colon_by_form(I, f, true);
  }
  return saturation_by_elimination(I, f);
}

// Semi-echelon set of polynomials keyed by leading monomial.
class PolyEchelon {
 public:
  explicit PolyEchelon(const RingPtr& ring) : ring_(ring) {}

  // Reduced copy of v if independent of the stored rows, else zero.
  Polynomial insert(Polynomial v) {
    Polynomial rest(ring_);
    while (!v.is_zero()) {
      const auto lt = v.leading_term();
      auto it = find(lt.monomial);
      if (it != rows_.end()) {
        v -= it->second.scaled(lt.coeff);
      } else {
        rest += Polynomial::monomial(ring_, lt.monomial, lt.coeff);
        v -= Polynomial::monomial(ring_, lt.monomial, lt.coeff);
      }
    }
    if (rest.is_zero()) return rest;
    rest = rest.monic();
    rows_.emplace_back(rest.leading_monomial(), rest);
    return rest;
  }

 private:
  std::vector<std::pair<Monomial, Polynomial>>::iterator find(const Monomial& m) {
    return std::find_if(rows_.begin(), rows_.end(), [&](const auto& r) { return r.first == m; });
  }
  RingPtr ring_;
  std::vector<std::pair<Monomial, Polynomial>> rows_;
};

int saturation_exponent(const Ideal& I, const Ideal& S, const std::vector<Polynomial>& J) {
  if (I.is_zero()) return 0;
  const auto& gb = I.groebner();
  PolyEchelon first(I.ring());
  std::vector<Polynomial> V;
  for (const auto& s : S.generators()) {
    auto r = first.insert(gb.normal_form(s));
    if (!r.is_zero()) V.push_back(std::move(r));
  }
  int k = 0;
  while (!V.empty()) {
    check_deadline();
    ++k;
    PolyEchelon next(I.ring());
    std::vector<Polynomial> W;
    for (const auto& v : V)
      for (const auto& f : J) {
        auto r = next.insert(gb.normal_form(f * v));
        if (!r.is_zero()) W.push_back(std::move(r));
      }
    V.swap(W);
  }
  return k;
}

std::vector<Polynomial> nonzero(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens)
    if (!g.is_zero()) out.push_back(g);
  return out;
}

}  // namespace

Ideal quotient(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("quotient by the zero polynomial");
  require_same_ring(I.ring(), f.ring());
  if (I.is_zero()) return Ideal::zero(I.ring());
  if (f.is_constant() || I.is_unit()) return I;
  if (I.contains(f)) return Ideal::unit(I.ring());
  if (I.is_homogeneous() && f.is_homogeneous()) {
    const Ideal Q = as_variable(f) ? colon_by_variable(I, *as_variable(f), false) : colon_by_form(I, f, false);
    return tidy(I.ring(), Q.generators());
  }
  return quotient_by_intersection(I, f);
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) throw DomainError("quotient by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& f : J.generators()) {
    if (I.contains(f)) continue;
    Ideal q = quotient(I, f);
    acc = acc ? intersect(*acc, q) : q;
  }
  if (!acc) return Ideal::unit(I.ring());
  return *acc;
}

Ideal quotient_by_intersection(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("quotient by the zero polynomial");
  const Ideal K = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> out;
  for (const auto& g : K.generators()) out.push_back(exact_divide(g, f));
  return Ideal(I.ring(), dedupe(std::move(out)));
}

SaturationResult saturate(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
  require_same_ring(I.ring(), f.ring());
  if (I.is_zero() || f.is_constant()) return {I, 0};
  Ideal S = raw_saturation(I, f);
  const int e = saturation_exponent(I, S, {f});
  return {e == 0 ? I : S, e};
}

SaturationResult saturate(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  const auto gens = nonzero(J.generators());
  if (gens.empty()) throw DomainError("saturation by the zero ideal");
  if (gens.size() == 1) return saturate(I, gens.front());
  if (I.is_zero()) return {I, 0};
  if (std::any_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_constant(); })) return {I, 0};

  std::vector<Ideal> parts;
  for (const auto& g : gens) parts.push_back(raw_saturation(I, g));
  std::optional<Ideal> S;
  const bool homogeneous =
      I.is_homogeneous() && std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
  if (homogeneous) {
    // A combination h of powers of the generators satisfies
    // I : J^inf ⊆ I : h^inf; equality holds once I : h^inf sits in every part.
    int L = 1;
    for (const auto& g : gens) L = std::lcm(L, g.degree());
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<int> coeff(1, 9);
    for (int attempt = 0; attempt < 3 && !S; ++attempt) {
      Polynomial h(I.ring());
      for (const auto& g : gens) h += g.pow(static_cast<unsigned>(L / g.degree())).scaled(Scalar(coeff(rng)));
      if (h.is_zero()) continue;
      Ideal candidate = raw_saturation(I, h);
      if (std::all_of(parts.begin(), parts.end(), [&](const Ideal& P) { return P.contains(candidate); }))
        S = candidate;
    }
  }
  if (!S) {
    S = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) S = intersect(*S, parts[k]);
  }
  const int e = saturation_exponent(I, *S, gens);
  return {e == 0 ? I : *S, e};
}

SaturationResult saturate_iterated(const Ideal& I, const Ideal& J) {
  Ideal K = I;
  int k = 0;
  while (true) {
    check_deadline();
    Ideal next = quotient(K, J);
    if (K.contains(next)) return {K, k};
    K = next;
    ++k;
  }
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const RingPtr& R = a.ring();
  const std::string t = fresh_name(*R, "t");
  const RingPtr S = with_extra_variables(R, {t}, {1}, true);
  const Polynomial tt = Polynomial::variable(S, 0);
  const Polynomial one_minus_t = Polynomial::constant(S, 1) - tt;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(tt * remap_by_name(g, S));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * remap_by_name(g, S));
  const Ideal E = eliminate_variables(Ideal(S, gens), {0});
  return tidy(R, transfer(E, R).generators());
}

// ---------------------------------------------------------------------------
// Minimal generators and minors

std::vector<Polynomial> minimal_generators(const Ideal& I) { return minimal_generators_modulo(I, Ideal::zero(I.ring())); }

Ideal minimalized(const Ideal& I) { return Ideal(I.ring(), minimal_generators(I)); }

std::vector<Polynomial> minimal_generators_modulo(const Ideal& I, const Ideal& K) {
  require_same_ring(I.ring(), K.ring());
  if (!I.is_homogeneous() || !K.is_homogeneous())
    throw NotHomogeneousError("minimal generators need a homogeneous ideal");
  std::vector<GroebnerBasis::Vector> gens, mod;
  for (const auto& g : I.generators()) gens.push_back({g});
  for (const auto& g : K.generators()) mod.push_back({g});
  std::vector<Polynomial> out;
  for (auto& v : minimalize_module(I.ring(), 1, std::move(gens), mod, {0})) out.push_back(std::move(v.front()));
  return out;
}

Ideal minors(const FormMatrix& M, std::size_t k) {
  if (k == 0 || k > std::min(M.rows(), M.cols())) throw DomainError("minor size out of range");
  std::vector<Polynomial> gens;
  for (const auto& rs : subsets(M.rows(), k))
    for (const auto& cs : subsets(M.cols(), k)) gens.push_back(M.submatrix(rs, cs).determinant());
  gens = dedupe(std::move(gens));
  Ideal I(M.ring(), gens);
  if (!I.is_zero() && I.is_homogeneous()) return minimalized(I);
  return I;
}

// ---------------------------------------------------------------------------
// Hilbert series and dimension

namespace {

using Series = std::vector<mpz_class>;

void add_into(Series& a, const Series& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

Series times_one_minus(const Series& a, std::size_t d) {
  Series out(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + d] -= a[i];
  }
  return out;
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (std::any_of(out.begin(), out.end(), [&](const Monomial& m) { return m.divides(g); })) continue;
    out.push_back(g);
  }
  return out;
}

// Numerator N with series N / prod (1 - t^{w_i}) for k[x]/(gens).
Series monomial_numerator(std::vector<Monomial> gens, const std::vector<int>& w) {
  gens = minimal_monomials(std::move(gens));
  if (gens.empty()) return {1};
  bool coprime = true;
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    if (seen & g.support_mask()) {
      coprime = false;
      break;
    }
    seen |= g.support_mask();
  }
  if (coprime) {
    Series s{1};
    for (const auto& g : gens) s = times_one_minus(s, g.weighted_degree(w));
    trim(s);
    return s;
  }
  std::size_t best = 0;
  int best_count = -1;
  for (std::size_t v = 0; v < w.size(); ++v) {
    int count = 0;
    for (const auto& g : gens) count += g[v] > 0;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  int e = 0;
  for (const auto& g : gens) {
    if (g[best] == 0 || g.support_mask() == (1u << best)) continue;
    e = e == 0 ? g[best] : std::min(e, g[best]);
  }
  const Monomial p = Monomial::variable(best, e);
  std::vector<Monomial> with_p{p}, colon;
  for (const auto& g : gens) {
    if (!p.divides(g)) with_p.push_back(g);
    colon.push_back(g / Monomial::gcd(g, p));
  }
  Series out = monomial_numerator(std::move(with_p), w);
  add_into(out, monomial_numerator(std::move(colon), w), static_cast<std::size_t>(p.weighted_degree(w)));
  trim(out);
  return out;
}

// Smallest hitting set of the support masks.
int min_cover(std::vector<std::uint32_t> sets, int depth, int best) {
  if (sets.empty()) return depth;
  if (depth + 1 >= best) return best;
  std::size_t pick = 0;
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (__builtin_popcount(sets[i]) < __builtin_popcount(sets[pick])) pick = i;
  std::uint32_t choices = sets[pick];
  while (choices) {
    const std::uint32_t bit = choices & (~choices + 1);
    choices ^= bit;
    std::vector<std::uint32_t> rest;
    for (auto s : sets)
      if (!(s & bit)) rest.push_back(s);
    best = std::min(best, min_cover(std::move(rest), depth + 1, best));
  }
  return best;
}

}  // namespace

HilbertData hilbert(const Ideal& I) {
  if (!I.is_homogeneous()) throw NotHomogeneousError("Hilbert series needs a homogeneous ideal");
  const RingPtr& R = I.ring();
  const int n = static_cast<int>(R->nvars());
  HilbertData h;
  if (I.is_unit()) {
    h.dimension = -1;
    h.codimension = n + 1;
    return h;
  }
  std::vector<Monomial> lead;
  if (!I.is_zero()) lead = I.groebner().leading_monomials();
  h.numerator = monomial_numerator(lead, R->weights());
  if (R->standard_graded()) {
    Series q = h.numerator;
    int k = 0;
    while (!q.empty()) {
      mpz_class at_one = 0;
      for (const auto& c : q) at_one += c;
      if (at_one != 0) break;
      // Divide by (1 - t).
      Series d(q.size() - 1, 0);
      mpz_class acc = 0;
      for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        acc += q[i];
        d[i] = acc;
      }
      q = d;
      ++k;
    }
    h.reduced_numerator = q;
    h.dimension = n - k;
    for (const auto& c : q) h.multiplicity += c;
  } else {
    h.dimension = krull_dimension(I);
  }
  h.codimension = n - h.dimension;
  return h;
}

int krull_dimension(const Ideal& I) {
  const int n = static_cast<int>(I.ring()->nvars());
  if (I.is_zero()) return n;
  if (I.is_unit()) return -1;
  std::vector<std::uint32_t> sets;
  for (const auto& m : minimal_monomials(I.groebner().leading_monomials())) sets.push_back(m.support_mask());
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint32_t> minimal;
  for (auto s : sets)
    if (std::none_of(sets.begin(), sets.end(), [&](std::uint32_t t) { return t != s && (t & s) == t; }))
      minimal.push_back(s);
  return n - min_cover(minimal, 0, n + 1);
}

int codimension(const Ideal& I) { return static_cast<int>(I.ring()->nvars()) - krull_dimension(I); }

Ideal unmixed_part(const Ideal& I) {
  if (!I.is_homogeneous()) throw NotHomogeneousError("unmixed parts need a homogeneous ideal");
  if (I.is_zero() || I.is_unit()) return I;
  const RingPtr& R = I.ring();
  const auto gens = minimal_generators(I);
  const int c = codimension(I);
  int top = 0;
  for (const auto& g : gens) top = std::max(top, g.degree());
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<int> coeff(1, 9);
  const auto linear_form = [&] {
    Polynomial l(R);
    for (std::size_t v = 0; v < R->nvars(); ++v) l += Polynomial::variable(R, v).scaled(Scalar(coeff(rng)));
    return l;
  };
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Polynomial> ci;
    for (int k = 0; k < c; ++k) {
      Polynomial h(R);
      for (const auto& g : gens)
        h += (g * linear_form().pow(static_cast<unsigned>(top - g.degree()))).scaled(Scalar(coeff(rng)));
      ci.push_back(h);
    }
    const Ideal J(R, ci);
    if (codimension(J) != c) continue;
    return tidy(R, quotient(J, quotient(J, I)).generators());
  }
  throw DomainError("no complete intersection of the right codimension found");
}

bool is_unmixed(const Ideal& I) { return I.contains(unmixed_part(I)); }

bool radical_contains(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return true;
  require_same_ring(I.ring(), f.ring());
  if (I.is_zero()) return false;
  if (f.is_constant()) return I.is_unit();
  if (I.is_homogeneous() && f.is_homogeneous()) return raw_saturation(I, f).is_unit();
  const RingPtr& R = I.ring();
  const RingPtr S = with_extra_variables(R, {fresh_name(*R, "w")}, {1}, true);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(remap_by_name(g, S));
  gens.push_back(Polynomial::constant(S, 1) - Polynomial::variable(S, 0) * remap_by_name(f, S));
  return groebner_basis(gens, S->default_order()).is_unit();
}

// ---------------------------------------------------------------------------
// Elimination and ring transfer

Ideal eliminate(const Ideal& I, std::size_t block) {
  const auto& blocks = I.ring()->blocks();
  if (block >= blocks.size()) throw DomainError("no such variable block");
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < blocks[block].size; ++i) vars.push_back(blocks[block].first + i);
  return eliminate_variables(I, vars);
}

Ideal eliminate_variables(const Ideal& I, const std::vector<std::size_t>& vars) {
  const RingPtr& R = I.ring();
  if (I.is_zero()) return I;
  std::vector<int> elim(vars.begin(), vars.end());
  const auto order = MonomialOrder::elimination(R->weights(), elim);
  const auto& gb = I.groebner(order);
  std::uint32_t mask = 0;
  for (auto v : vars) mask |= 1u << v;
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    bool free = true;
    for (const auto& t : g.terms())
      if (t.monomial.support_mask() & mask) {
        free = false;
        break;
      }
    if (free) out.push_back(g.normalized());
  }
  return Ideal(R, std::move(out));
}

Ideal transfer(const Ideal& I, const RingPtr& target) {
  std::vector<Polynomial> out;
  for (const auto& g : I.generators()) out.push_back(remap_by_name(g, target));
  return Ideal(target, std::move(out));
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal irrelevant_ideal(const RingPtr& ring, std::size_t block) {
  const auto& b = ring->blocks().at(block);
  std::vector<Polynomial> gens;
  for (std::size_t i = b.first; i < b.first + b.size; ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

}  // namespace symrees
