#include "symrees/rees.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace symrees {

namespace {

int common_degree(const Ideal& I) {
  if (I.is_zero()) throw DomainError("the ideal has no generators");
  const int d = I.generators().front().degree();
  for (const auto& f : I.generators()) {
    if (!f.is_homogeneous()) throw NotHomogeneousError("generators must be forms");
    if (f.degree() != d) throw DomainError("generators have mixed degrees");
  }
  return d;
}

std::vector<std::string> names_with(const PolyRing& source, const std::string& stem, std::size_t count,
                                    bool indexed) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::string name = indexed ? stem + std::to_string(i) : stem;
    while (source.index_of(name)) name += "_";
    out.push_back(name);
  }
  return out;
}

// Eliminates a leading t (weight 1) from `relations` written in ring E and
// moves the result into `out`.
Ideal eliminate_t(const RingPtr& E, std::vector<Polynomial> relations, const RingPtr& out) {
  const Ideal J(E, std::move(relations));
  const Ideal K = eliminate_variables(J, {0});
  return transfer(K, out);
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::vector<std::string> image_names(const PolyRing& source, std::size_t count) {
  return names_with(source, "y", count, true);
}

std::vector<std::string> extra_names(const PolyRing& source, std::size_t count) {
  if (count == 1) return names_with(source, "z", 1, false);
  auto out = names_with(source, "z", count + 1, true);
  out.erase(out.begin());
  return out;
}

ReesPresentation rees_ideal(const Ideal& I) {
  const int d = common_degree(I);
  const RingPtr& R = I.ring();
  const std::size_t n = R->nvars(), m = I.size();
  const auto ynames = image_names(*R, m);

  ReesPresentation P;
  P.source = R;
  P.forms = I.generators();
  P.degree = d;
  P.ambient = PolyRing::make(concat(R->names(), ynames), R->field(), {n, m});
  P.target = PolyRing::make(ynames, R->field());

  std::vector<int> weights(1 + n + m, 1);
  for (std::size_t i = 0; i < m; ++i) weights[1 + n + i] = d + 1;
  const std::string t = fresh_name(*P.ambient, "t");
  const RingPtr E = PolyRing::make(concat({t}, P.ambient->names()), R->field(), {1, n, m}, weights);
  const Polynomial tt = Polynomial::variable(E, 0);
  std::vector<Polynomial> rel;
  for (std::size_t i = 0; i < m; ++i)
    rel.push_back(Polynomial::variable(E, 1 + n + i) - tt * remap_by_name(P.forms[i], E));
  const Ideal K = eliminate_t(E, std::move(rel), P.ambient);

  struct Entry {
    std::pair<int, int> bideg;
    std::string text;
    Polynomial g;
  };
  std::vector<Entry> entries;
  for (auto& g : minimal_generators(K)) {
    g = g.normalized();
    const auto b = bidegree(g);
    entries.push_back({{b[0], b[1]}, g.to_string(), g});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.bideg, a.text) < std::tie(b.bideg, b.text); });
  std::vector<Polynomial> gens;
  for (auto& e : entries) {
    P.bidegrees.push_back(e.bideg);
    gens.push_back(std::move(e.g));
  }
  P.ideal = Ideal(P.ambient, std::move(gens));
  return P;
}

Ideal implicit_ideal(const ReesPresentation& P) {
  const Ideal E = eliminate(P.ideal, 0);
  const Ideal Y = transfer(E, P.target);
  if (Y.is_zero()) return Y;
  return minimalized(Y);
}

JacobianDual jacobian_dual(const ReesPresentation& P) {
  const std::size_t n = P.source->nvars();
  std::vector<std::vector<Polynomial>> rows;
  JacobianDual J;
  for (std::size_t r = 0; r < P.bidegrees.size(); ++r) {
    if (P.bidegrees[r].first != 1) continue;
    const Polynomial& g = P.ideal.generators()[r];
    std::vector<std::vector<Polynomial::Term>> parts(n);
    for (const auto& term : g.terms())
      for (std::size_t i = 0; i < n; ++i)
        if (term.monomial[i] == 1) {
          Monomial m = term.monomial;
          m.set(i, 0);
          parts[i].push_back({m, term.coeff});
          break;
        }
    std::vector<Polynomial> row;
    for (auto& part : parts) {
      // Entries live in k[y]: shift the y exponents down to indices 0..m-1.
      std::vector<Polynomial::Term> shifted;
      for (auto& term : part) {
        Monomial m;
        for (std::size_t j = 0; j < P.target->nvars(); ++j) m.set(j, term.monomial[n + j]);
        shifted.push_back({m, term.coeff});
      }
      row.push_back(Polynomial::from_terms(P.target, std::move(shifted)));
    }
    rows.push_back(std::move(row));
    J.relations.push_back(g);
  }
  if (rows.empty()) throw DomainError("the Rees ideal has no generators linear in x");
  J.psi = FormMatrix::from_rows(P.target, rows);
  return J;
}

RingPtr presentation_ring(const Ideal& I, const std::vector<WeightedForm>& extra) {
  const int d = common_degree(I);
  const RingPtr& R = I.ring();
  const std::size_t n = R->nvars(), m = I.size(), k = extra.size();
  std::vector<int> weights(n, 1);
  weights.insert(weights.end(), m, d);
  for (const auto& e : extra) weights.push_back(e.form.degree());
  std::vector<std::size_t> blocks{n, m};
  if (k) blocks.push_back(k);
  return PolyRing::make(concat(concat(R->names(), image_names(*R, m)), extra_names(*R, k)), R->field(), blocks,
                        weights);
}

SubalgebraPresentation subalgebra_presentation(const Ideal& I, const std::vector<WeightedForm>& extra) {
  const int d = common_degree(I);
  const RingPtr& R = I.ring();
  const std::size_t n = R->nvars(), m = I.size(), k = extra.size();
  for (const auto& e : extra) {
    require_same_ring(R, e.form.ring());
    if (e.form.is_zero() || !e.form.is_homogeneous()) throw NotHomogeneousError("extra generators must be nonzero forms");
    if (e.weight < 1) throw DomainError("extra generators need a positive weight");
  }
  SubalgebraPresentation S;
  S.nx = n;
  S.ny = m;
  S.nz = k;
  S.ring = presentation_ring(I, extra);
  const auto& names = S.ring->names();
  std::vector<std::size_t> blocks{n, m};
  if (k) blocks.push_back(k);

  // Elimination ring: t of weight 1 in front, y and z shifted by their t-degree.
  std::vector<int> ew{1};
  ew.insert(ew.end(), n, 1);
  ew.insert(ew.end(), m, d + 1);
  for (const auto& e : extra) ew.push_back(e.form.degree() + e.weight);
  std::vector<std::size_t> eblocks{1};
  eblocks.insert(eblocks.end(), blocks.begin(), blocks.end());
  const std::string t = fresh_name(*S.ring, "t");
  const RingPtr E = PolyRing::make(concat({t}, names), R->field(), eblocks, ew);
  const Polynomial tt = Polynomial::variable(E, 0);
  std::vector<Polynomial> rel;
  for (std::size_t i = 0; i < m; ++i)
    rel.push_back(Polynomial::variable(E, 1 + n + i) - tt * remap_by_name(I.generators()[i], E));
  for (std::size_t j = 0; j < k; ++j)
    rel.push_back(Polynomial::variable(E, 1 + n + m + j) -
                  tt.pow(static_cast<unsigned>(extra[j].weight)) * remap_by_name(extra[j].form, E));
  const Ideal K = eliminate_t(E, std::move(rel), S.ring);
  std::vector<Polynomial> gens;
  for (auto& g : minimal_generators(K)) gens.push_back(g.normalized());
  S.ideal = Ideal(S.ring, std::move(gens));
  return S;
}

}  // namespace symrees
