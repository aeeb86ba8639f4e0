#include "symrees/groebner.hpp"

#include <algorithm>
#include <map>
#include <variant>

#include "symrees/errors.hpp"

namespace symrees {

// ---------------------------------------------------------------------------
// Deadline

namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> tls_deadline;
}

ScopedDeadline::ScopedDeadline(std::chrono::steady_clock::duration budget) : saved_(tls_deadline) {
  const auto candidate = std::chrono::steady_clock::now() + budget;
  if (!tls_deadline || candidate < *tls_deadline) tls_deadline = candidate;
}

ScopedDeadline::~ScopedDeadline() { tls_deadline = saved_; }

void check_deadline() {
  if (tls_deadline && std::chrono::steady_clock::now() > *tls_deadline) throw DeadlineExceeded();
}

namespace detail {

// ---------------------------------------------------------------------------
// Coefficient domains

struct ZDomain {
  using C = mpz_class;
  static bool is_zero(const C& c) { return c == 0; }
  static bool is_one(const C& c) { return c == 1; }
  static void mul_in_place(C& x, const C& m) { x *= m; }
  static C neg_mul(const C& m, const C& y) {
    C r;
    mpz_mul(r.get_mpz_t(), m.get_mpz_t(), y.get_mpz_t());
    mpz_neg(r.get_mpz_t(), r.get_mpz_t());
    return r;
  }
  static void sub_mul(C& x, const C& m, const C& y) { mpz_submul(x.get_mpz_t(), m.get_mpz_t(), y.get_mpz_t()); }
  // Multipliers with mf*a - mg*b = 0 and mf > 0.
  static void multipliers(const C& a, const C& b, C& mf, C& mg) {
    C g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(mf.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(mg.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    if (mf < 0) {
      mf = -mf;
      mg = -mg;
    }
  }
  C from_scalar(const Scalar& s) const { return s.get_num(); }
  Scalar to_scalar(const C& c) const { return Scalar(c); }
};

struct PDomain {
  using C = std::uint64_t;
  std::uint64_t p = 2;
  static bool is_zero(const C& c) { return c == 0; }
  static bool is_one(const C& c) { return c == 1; }
  void mul_in_place(C& x, const C& m) const { x = x * m % p; }
  C neg_mul(const C& m, const C& y) const {
    const C v = m * y % p;
    return v == 0 ? 0 : p - v;
  }
  void sub_mul(C& x, const C& m, const C& y) const { x = (x + p - m * y % p) % p; }
  C inverse(C a) const {
    C result = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  }
  void multipliers(const C& a, const C& b, C& mf, C& mg) const {
    mf = 1;
    mg = a * inverse(b) % p;
  }
  C from_scalar(const Scalar& s) const { return s.get_num().get_ui(); }
  Scalar to_scalar(const C& c) const { return Scalar(static_cast<unsigned long>(c)); }
};

struct OrderContext {
  MonomialOrder order;
  std::vector<int> weights;
  std::vector<int> shifts;

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (ca != cb) return ca < cb ? 1 : -1;
    return order.compare(a, b);
  }
  int degree(const Monomial& m, std::uint32_t comp) const {
    return m.weighted_degree(weights) + (shifts.empty() ? 0 : shifts[comp]);
  }
};

// ---------------------------------------------------------------------------
// Buchberger engine over one coefficient domain

template <class D>
class Engine {
 public:
  using C = typename D::C;
  struct Term {
    Monomial m;
    std::uint32_t comp;
    C c;
  };
  struct Poly {
    std::vector<Term> t;
    int sugar = 0;
  };

  Engine(D dom, OrderContext ctx, std::size_t rank) : dom_(std::move(dom)), ctx_(std::move(ctx)), rank_(rank) {}

  const OrderContext& context() const { return ctx_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Poly>& basis() const { return basis_; }
  const GroebnerStats& stats() const { return stats_; }

  // Vector of polynomials (length rank) to internal form; content cleared.
  Poly convert(const std::vector<Polynomial>& v) const {
    Poly out;
    mpz_class den = 1;
    for (const auto& p : v)
      for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    for (std::uint32_t comp = 0; comp < v.size(); ++comp) {
      for (const auto& t : v[comp].terms()) {
        Scalar s = t.coeff * den;
        if constexpr (std::is_same_v<D, PDomain>) s = v[comp].ring()->field().reduce(s);
        out.t.push_back(Term{t.monomial, comp, dom_.from_scalar(s)});
      }
    }
    std::sort(out.t.begin(), out.t.end(), [&](const Term& a, const Term& b) { return compare(a, b) > 0; });
    out.sugar = poly_degree(out);
    return out;
  }

  std::vector<Polynomial> export_poly(const Poly& p, const RingPtr& ring, const Scalar& scale, bool monic) const {
    std::vector<std::vector<Polynomial::Term>> comps(rank_);
    Scalar factor = 1 / scale;
    if (monic && !p.t.empty()) factor = ring->field().inverse(dom_.to_scalar(p.t.front().c));
    for (const auto& t : p.t) comps[t.comp].push_back({t.m, dom_.to_scalar(t.c) * factor});
    std::vector<Polynomial> out;
    for (auto& c : comps) out.push_back(Polynomial::from_terms(ring, std::move(c)));
    return out;
  }

  int compare(const Term& a, const Term& b) const { return ctx_.compare(a.m, a.comp, b.m, b.comp); }

  int poly_degree(const Poly& p) const {
    int d = p.t.empty() ? 0 : ctx_.degree(p.t.front().m, p.t.front().comp);
    for (const auto& t : p.t) d = std::max(d, ctx_.degree(t.m, t.comp));
    return d;
  }

  // f <- mf*f - mg*mono*g, cancelling the term f.t[pos].
  void reduce_step(Poly& f, std::size_t pos, const Poly& g, const Monomial& mono, Scalar* scale,
                   std::vector<Term>& buffer) const {
    C mf, mg;
    dom_.multipliers(f.t[pos].c, g.t.front().c, mf, mg);
    const bool scale_f = !D::is_one(mf);
    if (scale && scale_f) *scale *= dom_.to_scalar(mf);
    buffer.clear();
    buffer.reserve(f.t.size() + g.t.size());
    for (std::size_t k = 0; k < pos; ++k) {
      buffer.push_back(std::move(f.t[k]));
      if (scale_f) dom_.mul_in_place(buffer.back().c, mf);
    }
    std::size_t i = pos + 1, j = 1;
    Monomial gm;
    if (j < g.t.size()) gm = g.t[j].m * mono;
    while (i < f.t.size() || j < g.t.size()) {
      int c;
      if (i == f.t.size())
        c = -1;
      else if (j == g.t.size())
        c = 1;
      else
        c = ctx_.compare(f.t[i].m, f.t[i].comp, gm, g.t[j].comp);
      if (c > 0) {
        buffer.push_back(std::move(f.t[i]));
        if (scale_f) dom_.mul_in_place(buffer.back().c, mf);
        ++i;
      } else if (c < 0) {
        buffer.push_back(Term{gm, g.t[j].comp, dom_.neg_mul(mg, g.t[j].c)});
        ++j;
        if (j < g.t.size()) gm = g.t[j].m * mono;
      } else {
        C v = std::move(f.t[i].c);
        if (scale_f) dom_.mul_in_place(v, mf);
        dom_.sub_mul(v, mg, g.t[j].c);
        if (!D::is_zero(v)) buffer.push_back(Term{gm, g.t[j].comp, std::move(v)});
        ++i;
        ++j;
        if (j < g.t.size()) gm = g.t[j].m * mono;
      }
    }
    f.t.swap(buffer);
    f.sugar = std::max(f.sugar, g.sugar + mono.weighted_degree(ctx_.weights));
  }

  void remove_content(Poly& f, Scalar* scale) const {
    if constexpr (std::is_same_v<D, ZDomain>) {
      if (f.t.empty()) return;
      mpz_class g = 0;
      for (const auto& t : f.t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
      }
      if (f.t.front().c < 0) g = -g;
      if (g == 1) return;
      for (auto& t : f.t) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
      if (scale) *scale /= Scalar(g);
    } else {
      (void)f;
      (void)scale;
    }
  }

  // Primitive with positive leading coefficient over Z, monic over F_p.
  void normalize(Poly& f) const {
    if (f.t.empty()) return;
    if constexpr (std::is_same_v<D, ZDomain>) {
      remove_content(f, nullptr);
    } else {
      const C inv = dom_.inverse(f.t.front().c);
      for (auto& t : f.t) dom_.mul_in_place(t.c, inv);
    }
  }

  const Poly* find_divisor(const Term& t, const std::vector<const Poly*>& reducers) const {
    const Poly* best = nullptr;
    const std::uint32_t mask = t.m.support_mask();
    for (const Poly* g : reducers) {
      const Term& lt = g->t.front();
      if (lt.comp != t.comp || (lt.m.support_mask() & ~mask) != 0) continue;
      if (!lt.m.divides(t.m)) continue;
      if (!best || g->t.size() < best->t.size()) best = g;
    }
    return best;
  }

  // Reduces f from position `start`; with `full` every term, otherwise only
  // the leading one.
  void reduce(Poly& f, std::size_t start, bool full, const std::vector<const Poly*>& reducers,
              Scalar* scale) const {
    std::vector<Term> buffer;
    std::size_t pos = start;
    unsigned steps = 0;
    while (pos < f.t.size()) {
      const Poly* g = find_divisor(f.t[pos], reducers);
      if (!g) {
        if (!full) break;
        ++pos;
        continue;
      }
      const Monomial mono = f.t[pos].m / g->t.front().m;
      reduce_step(f, pos, *g, mono, scale, buffer);
      if (++steps % 32 == 0) {
        remove_content(f, scale);
        check_deadline();
      }
    }
    if (scale) remove_content(f, scale);
  }

  Poly s_polynomial(const Poly& a, const Poly& b) const {
    const Monomial l = Monomial::lcm(a.t.front().m, b.t.front().m);
    const Monomial ma = l / a.t.front().m;
    Poly f;
    f.t.reserve(a.t.size());
    for (const auto& t : a.t) f.t.push_back(Term{t.m * ma, t.comp, t.c});
    f.sugar = a.sugar + ma.weighted_degree(ctx_.weights);
    std::vector<Term> buffer;
    reduce_step(f, 0, b, l / b.t.front().m, nullptr, buffer);
    return f;
  }

  void run(std::vector<Poly> inputs) {
    struct Pair {
      int i;
      int j;  // -1: input generator i
      Monomial lcm;
      std::uint32_t comp;
      int sugar;
    };
    const bool ideal_case = rank_ == 1;
    std::vector<Poly> polys;
    std::vector<int> active;
    std::vector<Pair> pairs;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      if (inputs[k].t.empty()) continue;
      normalize(inputs[k]);
      pairs.push_back(Pair{static_cast<int>(k), -1, inputs[k].t.front().m, inputs[k].t.front().comp, inputs[k].sugar});
    }

    auto reducers = [&]() {
      std::vector<const Poly*> out;
      out.reserve(active.size());
      for (int a : active) out.push_back(&polys[a]);
      return out;
    };

    auto update = [&](Poly h) {
      const int hidx = static_cast<int>(polys.size());
      const Monomial hm = h.t.front().m;
      const std::uint32_t hc = h.t.front().comp;
      const int hsugar = h.sugar;
      polys.push_back(std::move(h));

      struct Cand {
        int g;
        Monomial lcm;
        bool coprime;
      };
      std::vector<Cand> cands;
      for (int g : active) {
        const Term& lt = polys[g].t.front();
        if (lt.comp != hc) continue;
        cands.push_back(Cand{g, Monomial::lcm(lt.m, hm), ideal_case && lt.m.coprime(hm)});
      }
      std::vector<Cand> kept;
      for (std::size_t k = 0; k < cands.size(); ++k) {
        const Cand& c = cands[k];
        bool dominated = false;
        if (!c.coprime) {
          for (std::size_t k2 = k + 1; k2 < cands.size() && !dominated; ++k2)
            dominated = cands[k2].lcm.divides(c.lcm);
          for (std::size_t k2 = 0; k2 < kept.size() && !dominated; ++k2) dominated = kept[k2].lcm.divides(c.lcm);
        }
        if (dominated)
          ++stats_.pairs_discarded;
        else
          kept.push_back(c);
      }

      std::vector<Pair> next;
      next.reserve(pairs.size() + kept.size());
      for (auto& p : pairs) {
        if (p.j >= 0 && p.comp == hc && hm.divides(p.lcm)) {
          const Monomial li = Monomial::lcm(polys[p.i].t.front().m, hm);
          const Monomial lj = Monomial::lcm(polys[p.j].t.front().m, hm);
          if (!(li == p.lcm) && !(lj == p.lcm)) {
            ++stats_.pairs_discarded;
            continue;
          }
        }
        next.push_back(std::move(p));
      }
      for (const auto& c : kept) {
        if (c.coprime) {
          ++stats_.pairs_discarded;
          continue;
        }
        const Poly& g = polys[c.g];
        const int sg = g.sugar + (c.lcm / g.t.front().m).weighted_degree(ctx_.weights);
        const int sh = hsugar + (c.lcm / hm).weighted_degree(ctx_.weights);
        next.push_back(Pair{c.g, hidx, c.lcm, hc, std::max(sg, sh)});
      }
      pairs.swap(next);

      std::vector<int> still;
      for (int g : active) {
        const Term& lt = polys[g].t.front();
        if (lt.comp == hc && hm.divides(lt.m)) continue;
        still.push_back(g);
      }
      still.push_back(hidx);
      active.swap(still);
    };

    while (!pairs.empty()) {
      check_deadline();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const Pair& a = pairs[k];
        const Pair& b = pairs[best];
        if (a.sugar != b.sugar) {
          if (a.sugar < b.sugar) best = k;
          continue;
        }
        const int c = ctx_.compare(a.lcm, a.comp, b.lcm, b.comp);
        if (c < 0 || (c == 0 && a.j < 0 && b.j >= 0)) best = k;
      }
      Pair p = std::move(pairs[best]);
      pairs[best] = std::move(pairs.back());
      pairs.pop_back();

      Poly h = p.j < 0 ? std::move(inputs[p.i]) : s_polynomial(polys[p.i], polys[p.j]);
      ++stats_.pairs_processed;
      reduce(h, 0, true, reducers(), nullptr);
      if (h.t.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      normalize(h);
      update(std::move(h));
    }

    std::sort(active.begin(), active.end(), [&](int a, int b) {
      return compare(polys[a].t.front(), polys[b].t.front()) < 0;
    });
    const auto all = reducers();
    basis_.clear();
    for (int a : active) {
      Poly f = polys[a];
      reduce(f, 1, true, all, nullptr);
      normalize(f);
      basis_.push_back(std::move(f));
    }
  }

  std::vector<const Poly*> basis_reducers() const {
    std::vector<const Poly*> out;
    for (const auto& b : basis_) out.push_back(&b);
    return out;
  }

  bool check_criterion() const {
    const auto red = basis_reducers();
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        if (basis_[i].t.front().comp != basis_[j].t.front().comp) continue;
        Poly s = s_polynomial(basis_[i], basis_[j]);
        reduce(s, 0, false, red, nullptr);
        if (!s.t.empty()) return false;
      }
    return true;
  }

 private:
  D dom_;
  OrderContext ctx_;
  std::size_t rank_;
  std::vector<Poly> basis_;
  GroebnerStats stats_;
};

struct BasisImpl {
  RingPtr ring;
  MonomialOrder order;
  std::size_t rank = 1;
  std::vector<Polynomial> generators;
  std::vector<GroebnerBasis::Vector> elements;
  std::variant<Engine<ZDomain>, Engine<PDomain>> engine;

  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit(std::forward<F>(f), engine);
  }
};

namespace {

std::variant<Engine<ZDomain>, Engine<PDomain>> make_engine(const RingPtr& ring, const MonomialOrder& order,
                                                          std::size_t rank, std::vector<int> shifts) {
  OrderContext ctx{order, ring->weights(), std::move(shifts)};
  if (ring->field().is_rational()) return Engine<ZDomain>(ZDomain{}, std::move(ctx), rank);
  return Engine<PDomain>(PDomain{ring->field().characteristic()}, std::move(ctx), rank);
}

std::shared_ptr<const BasisImpl> compute(const RingPtr& ring, std::size_t rank,
                                         std::span<const GroebnerBasis::Vector> gens, const MonomialOrder& order,
                                         std::vector<int> shifts) {
  if (order.nvars() != ring->nvars()) throw DomainError("monomial order does not match the ring");
  if (!shifts.empty() && shifts.size() != rank) throw DomainError("one shift per module component is required");
  auto impl = std::make_shared<BasisImpl>(BasisImpl{ring, order, rank, {}, {}, make_engine(ring, order, rank, shifts)});
  std::visit(
      [&](auto& eng) {
        using E = std::decay_t<decltype(eng)>;
        std::vector<typename E::Poly> inputs;
        for (const auto& v : gens) {
          if (v.size() != rank) throw DomainError("module element has the wrong number of components");
          for (const auto& p : v)
            if (!p.is_zero()) require_same_ring(ring, p.ring());
          inputs.push_back(eng.convert(v));
        }
        eng.run(std::move(inputs));
        for (const auto& b : eng.basis()) impl->elements.push_back(eng.export_poly(b, ring, Scalar(1), true));
      },
      impl->engine);
  if (rank == 1)
    for (const auto& e : impl->elements) impl->generators.push_back(e.front());
  return impl;
}

}  // namespace
}  // namespace detail

GroebnerBasis groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order) {
  RingPtr ring;
  for (const auto& g : gens)
    if (g.ring()) {
      ring = g.ring();
      break;
    }
  if (!ring) throw DomainError("groebner_basis needs at least one polynomial with a ring");
  std::vector<GroebnerBasis::Vector> vecs;
  for (const auto& g : gens) vecs.push_back({g.is_zero() ? Polynomial(ring) : g});
  GroebnerBasis gb;
  gb.impl_ = detail::compute(ring, 1, vecs, order, {});
  return gb;
}

GroebnerBasis module_groebner_basis(const RingPtr& ring, std::size_t rank, std::span<const GroebnerBasis::Vector> gens,
                                    const MonomialOrder& order, std::vector<int> shifts) {
  GroebnerBasis gb;
  gb.impl_ = detail::compute(ring, rank, gens, order, std::move(shifts));
  return gb;
}

const RingPtr& GroebnerBasis::ring() const { return impl_->ring; }
const MonomialOrder& GroebnerBasis::order() const { return impl_->order; }
std::size_t GroebnerBasis::rank() const { return impl_->rank; }
std::size_t GroebnerBasis::size() const { return impl_->elements.size(); }
const std::vector<Polynomial>& GroebnerBasis::generators() const { return impl_->generators; }
const std::vector<GroebnerBasis::Vector>& GroebnerBasis::elements() const { return impl_->elements; }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  return impl_->visit([](const auto& eng) {
    std::vector<Monomial> out;
    for (const auto& b : eng.basis()) out.push_back(b.t.front().m);
    return out;
  });
}

std::vector<std::size_t> GroebnerBasis::leading_components() const {
  return impl_->visit([](const auto& eng) {
    std::vector<std::size_t> out;
    for (const auto& b : eng.basis()) out.push_back(b.t.front().comp);
    return out;
  });
}

GroebnerBasis::Vector GroebnerBasis::normal_form(const Vector& v) const {
  if (v.size() != impl_->rank) throw DomainError("module element has the wrong number of components");
  for (const auto& p : v)
    if (!p.is_zero()) require_same_ring(impl_->ring, p.ring());
  return impl_->visit([&](const auto& eng) {
    auto f = eng.convert(v);
    Scalar scale = 1;
    // convert() cleared denominators; fold that factor into the scale.
    mpz_class den = 1;
    for (const auto& p : v)
      for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    scale = Scalar(den);
    eng.reduce(f, 0, true, eng.basis_reducers(), &scale);
    return eng.export_poly(f, impl_->ring, scale, false);
  });
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (impl_->rank != 1) throw DomainError("normal_form of a polynomial needs an ideal basis");
  return normal_form(Vector{f.is_zero() ? Polynomial(impl_->ring) : f}).front();
}

bool GroebnerBasis::contains(const Vector& v) const {
  if (v.size() != impl_->rank) throw DomainError("module element has the wrong number of components");
  return impl_->visit([&](const auto& eng) {
    auto f = eng.convert(v);
    eng.reduce(f, 0, false, eng.basis_reducers(), nullptr);
    return f.t.empty();
  });
}

bool GroebnerBasis::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return contains(Vector{f});
}

bool GroebnerBasis::is_unit() const {
  return impl_->rank == 1 && impl_->generators.size() == 1 && impl_->generators.front().is_constant() &&
         !impl_->generators.front().is_zero();
}

bool GroebnerBasis::verify_buchberger_criterion() const {
  return impl_->visit([](const auto& eng) { return eng.check_criterion(); });
}

const GroebnerStats& GroebnerBasis::stats() const {
  return impl_->visit([](const auto& eng) -> const GroebnerStats& { return eng.stats(); });
}

// ---------------------------------------------------------------------------
// Degreewise minimalization

int module_degree(const GroebnerBasis::Vector& v, const std::vector<int>& shifts) {
  int d = -1;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c].is_zero()) continue;
    const int dc = v[c].degree() + (shifts.empty() ? 0 : shifts[c]);
    d = std::max(d, dc);
  }
  return d;
}

namespace {

// Sparse vector over (component, monomial) keys; a simple dense-index map
// keeps elimination deterministic.
using SparseVec = std::map<std::pair<std::size_t, std::vector<int>>, Scalar>;

SparseVec to_sparse(const GroebnerBasis::Vector& v, std::size_t nvars) {
  SparseVec out;
  for (std::size_t c = 0; c < v.size(); ++c)
    for (const auto& t : v[c].terms()) {
      std::vector<int> e(nvars);
      for (std::size_t i = 0; i < nvars; ++i) e[i] = t.monomial[i];
      out[{c, e}] = t.coeff;
    }
  return out;
}

// Echelon form keyed by pivot; rows are normalized to pivot coefficient 1.
class Echelon {
 public:
  explicit Echelon(const CoefficientField& field) : field_(field) {}

  // Reduces v; returns true and stores it when it is independent.
  bool insert(SparseVec v) {
    reduce(v);
    if (v.empty()) return false;
    const auto key = v.begin()->first;
    const Scalar inv = field_.inverse(v.begin()->second);
    for (auto& [k, c] : v) {
      c *= inv;
      field_.reduce_in_place(c);
    }
    for (auto& [pk, row] : rows_) {
      auto it = row.find(key);
      if (it == row.end()) continue;
      const Scalar f = it->second;
      axpy(row, v, -f);
    }
    rows_.emplace(key, std::move(v));
    return true;
  }

  void reduce(SparseVec& v) const {
    for (const auto& [key, row] : rows_) {
      auto it = v.find(key);
      if (it == v.end()) continue;
      const Scalar f = it->second;
      axpy(v, row, -f);
    }
  }

 private:
  void axpy(SparseVec& target, const SparseVec& row, const Scalar& f) const {
    for (const auto& [k, c] : row) {
      Scalar& slot = target[k];
      slot += f * c;
      field_.reduce_in_place(slot);
      if (slot == 0) target.erase(k);
    }
  }

  const CoefficientField& field_;
  std::map<SparseVec::key_type, SparseVec> rows_;
};

}  // namespace

std::vector<GroebnerBasis::Vector> minimalize_module(const RingPtr& ring, std::size_t rank,
                                                     std::vector<GroebnerBasis::Vector> gens,
                                                     const std::vector<GroebnerBasis::Vector>& modulo,
                                                     const std::vector<int>& shifts) {
  struct Item {
    GroebnerBasis::Vector v;
    int degree;
    std::size_t terms;
    std::string text;
  };
  auto describe = [](const GroebnerBasis::Vector& v) {
    std::string s;
    for (const auto& p : v) s += p.to_string() + ";";
    return s;
  };
  std::vector<Item> items;
  for (auto& g : gens) {
    const int d = module_degree(g, shifts);
    if (d < 0 && std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    std::size_t n = 0;
    for (const auto& p : g) {
      if (!p.is_zero() && !p.is_homogeneous()) throw NotHomogeneousError("minimalization needs homogeneous input");
      n += p.size();
    }
    items.push_back(Item{std::move(g), d, n, ""});
    items.back().text = describe(items.back().v);
  }
  std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.terms != b.terms) return a.terms < b.terms;
    return a.text < b.text;
  });
  std::vector<std::pair<int, GroebnerBasis::Vector>> mod_items;
  for (const auto& m : modulo) {
    if (std::all_of(m.begin(), m.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    mod_items.push_back({module_degree(m, shifts), m});
  }

  std::vector<GroebnerBasis::Vector> chosen;
  const MonomialOrder order = ring->default_order();
  std::size_t k = 0;
  while (k < items.size()) {
    const int d = items[k].degree;
    std::size_t end = k;
    while (end < items.size() && items[end].degree == d) ++end;
    std::vector<GroebnerBasis::Vector> context = chosen;
    for (const auto& [md, m] : mod_items)
      if (md <= d) context.push_back(m);
    std::optional<GroebnerBasis> gb;
    if (!context.empty()) gb = module_groebner_basis(ring, rank, context, order, shifts);
    Echelon ech(ring->field());
    for (std::size_t i = k; i < end; ++i) {
      check_deadline();
      GroebnerBasis::Vector nf = gb ? gb->normal_form(items[i].v) : items[i].v;
      if (ech.insert(to_sparse(nf, ring->nvars()))) chosen.push_back(items[i].v);
    }
    k = end;
  }
  return chosen;
}

// ---------------------------------------------------------------------------
// Syzygies

namespace {

// Shifts s_i (rows) and u_j (columns) with deg M_ij + s_i = u_j wherever
// M_ij != 0. Returns false if M is not homogeneous in this sense.
bool homogenizing_shifts(const FormMatrix& M, std::vector<int>& s, std::vector<int>& u) {
  const std::size_t r = M.rows(), c = M.cols();
  std::vector<std::optional<int>> rs(r), cs(c);
  for (std::size_t start = 0; start < c; ++start) {
    if (cs[start]) continue;
    cs[start] = 0;
    std::vector<std::pair<bool, std::size_t>> stack{{false, start}};
    while (!stack.empty()) {
      auto [is_row, idx] = stack.back();
      stack.pop_back();
      if (!is_row) {
        for (std::size_t i = 0; i < r; ++i) {
          const Polynomial& e = M(i, idx);
          if (e.is_zero()) continue;
          if (!e.is_homogeneous()) return false;
          const int want = *cs[idx] - e.degree();
          if (!rs[i]) {
            rs[i] = want;
            stack.push_back({true, i});
          } else if (*rs[i] != want) {
            return false;
          }
        }
      } else {
        for (std::size_t j = 0; j < c; ++j) {
          const Polynomial& e = M(idx, j);
          if (e.is_zero()) continue;
          if (!e.is_homogeneous()) return false;
          const int want = *rs[idx] + e.degree();
          if (!cs[j]) {
            cs[j] = want;
            stack.push_back({false, j});
          } else if (*cs[j] != want) {
            return false;
          }
        }
      }
    }
  }
  s.assign(r, 0);
  u.assign(c, 0);
  for (std::size_t i = 0; i < r; ++i) s[i] = rs[i].value_or(0);
  for (std::size_t j = 0; j < c; ++j) u[j] = cs[j].value_or(0);
  if (c > 0) {
    const int lo = *std::min_element(u.begin(), u.end());
    for (auto& x : u) x -= lo;
    for (auto& x : s) x -= lo;
  }
  return true;
}

}  // namespace

FormMatrix syzygies(const FormMatrix& M, std::span<const Polynomial> modulo) {
  const RingPtr& ring = M.ring();
  const std::size_t r = M.rows(), c = M.cols();
  std::vector<int> s, u;
  const bool homogeneous = homogenizing_shifts(M, s, u);
  if (!homogeneous) {
    s.assign(r, 0);
    u.assign(c, 0);
  }
  std::vector<int> shifts = s;
  shifts.insert(shifts.end(), u.begin(), u.end());
  const Polynomial zero(ring);

  std::vector<GroebnerBasis::Vector> gens;
  for (std::size_t j = 0; j < c; ++j) {
    GroebnerBasis::Vector v(r + c, zero);
    for (std::size_t i = 0; i < r; ++i) v[i] = M(i, j);
    v[r + j] = Polynomial::constant(ring, 1);
    gens.push_back(std::move(v));
  }
  for (const auto& h : modulo) {
    if (h.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) {
      GroebnerBasis::Vector v(r + c, zero);
      v[i] = h;
      gens.push_back(std::move(v));
    }
  }
  const GroebnerBasis gb = module_groebner_basis(ring, r + c, gens, ring->default_order(), shifts);
  const auto comps = gb.leading_components();
  std::vector<GroebnerBasis::Vector> kernel;
  for (std::size_t k = 0; k < gb.size(); ++k) {
    if (comps[k] < r) continue;
    const auto& e = gb.elements()[k];
    kernel.emplace_back(e.begin() + r, e.end());
  }
  std::vector<GroebnerBasis::Vector> mod_vecs;
  for (const auto& h : modulo) {
    if (h.is_zero()) continue;
    for (std::size_t j = 0; j < c; ++j) {
      GroebnerBasis::Vector v(c, zero);
      v[j] = h;
      mod_vecs.push_back(std::move(v));
    }
  }
  std::vector<GroebnerBasis::Vector> minimal;
  if (homogeneous)
    minimal = minimalize_module(ring, c, kernel, mod_vecs, u);
  else
    minimal = kernel;
  FormMatrix out = FormMatrix::from_columns(ring, minimal);
  if (minimal.empty()) out = FormMatrix(ring, c, 0);
  std::vector<int> degrees;
  for (const auto& col : minimal) degrees.push_back(homogeneous ? module_degree(col, u) : -1);
  out.declare_column_degrees(degrees);
  return out;
}

}  // namespace symrees
