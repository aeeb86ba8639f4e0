#include "symrees/cremona.hpp"

#include <algorithm>

namespace symrees {

namespace {

std::vector<int> identity_map(std::size_t n) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i);
  return m;
}

std::optional<InverseData> try_candidate(const ReesPresentation& P, std::vector<Polynomial> g) {
  if (std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_zero(); })) return std::nullopt;
  Polynomial D;
  try {
    D = inversion_factor(P.forms, g);
  } catch (const AlgebraError&) {
    return std::nullopt;
  }
  const Scalar lc = D.leading_coeff();
  const Scalar inv = P.source->field().inverse(lc);
  int deg = -1;
  for (auto& gi : g) {
    gi = gi.scaled(inv);
    deg = std::max(deg, gi.degree());
  }
  return InverseData{std::move(g), D.scaled(inv), deg};
}

std::vector<InverseData> candidates_from(const ReesPresentation& P, const FormMatrix& syz, int degree) {
  std::vector<InverseData> out;
  const auto degs = syz.column_degrees();
  for (std::size_t j = 0; j < syz.cols(); ++j) {
    if (degs[j] != degree) continue;
    if (auto c = try_candidate(P, syz.column(j))) out.push_back(std::move(*c));
  }
  return out;
}

void require_square(const ReesPresentation& P) {
  if (P.forms.size() != P.source->nvars()) throw DomainError("the map must have one form per source variable");
}

}  // namespace

BirationalityResult is_birational(const Ideal& I, int max_inverse_degree) {
  return is_birational(rees_ideal(I), max_inverse_degree);
}

BirationalityResult is_birational(const ReesPresentation& P, int max_inverse_degree) {
  require_square(P);
  BirationalityResult res;
  if (!has_trivial_gcd(P.forms)) {
    res.reason = "the forms have a common factor";
    return res;
  }
  JacobianDual J;
  try {
    J = jacobian_dual(P);
  } catch (const DomainError&) {
    res.reason = "no relations linear in x";
    return res;
  }
  // d' <= d^(n-1) for a Cremona map of P^n.
  int bound = max_inverse_degree;
  if (bound <= 0) {
    bound = 1;
    for (std::size_t i = 1; i + 1 < P.source->nvars(); ++i) bound *= P.degree;
  }
  const FormMatrix syz = syzygies(J.psi);
  const auto degs = syz.column_degrees();
  for (int d = 0; d <= bound; ++d) {
    if (std::find(degs.begin(), degs.end(), d) == degs.end()) continue;
    auto c = candidates_from(P, syz, d);
    if (!c.empty()) {
      res.birational = true;
      res.witness = std::move(c.front());
      return res;
    }
  }
  res.reason = syz.cols() == 0 ? "the weak Jacobian dual has no syzygies"
                               : "no syzygy of the weak Jacobian dual inverts the map";
  return res;
}

std::vector<InverseData> inverse_candidates(const ReesPresentation& P, int degree) {
  require_square(P);
  return candidates_from(P, syzygies(jacobian_dual(P).psi), degree);
}

Polynomial inversion_factor(const std::vector<Polynomial>& forms, const std::vector<Polynomial>& inverse) {
  if (forms.empty()) throw DomainError("the map has no forms");
  const RingPtr& R = forms.front().ring();
  if (inverse.size() != R->nvars()) throw DomainError("the inverse needs one form per source variable");
  std::optional<Polynomial> D;
  for (std::size_t i = 0; i < inverse.size(); ++i) {
    if (inverse[i].is_zero()) throw DomainError("inverse has a zero component");
    if (inverse[i].ring()->nvars() != forms.size()) throw DomainError("inverse ring does not match the map");
    const Polynomial comp = substitute(inverse[i], forms);
    const Polynomial xi = Polynomial::variable(R, i);
    if (!divides(xi, comp)) throw DomainError("composition is not a multiple of the variable");
    const Polynomial q = exact_divide(comp, xi);
    if (q.is_zero()) throw DomainError("composition vanishes");
    if (!D)
      D = q;
    else if (!(*D == q))
      throw DomainError("compositions give different factors");
  }
  return *D;
}

bool plane_composition_oracle(const std::vector<Polynomial>& forms, const std::vector<Polynomial>& inverse) {
  if (forms.empty() || forms.size() != inverse.size()) return false;
  const RingPtr& R = forms.front().ring();
  if (R->nvars() != inverse.size()) return false;
  std::vector<Polynomial> comp;
  for (const auto& g : inverse) comp.push_back(substitute(g, forms));
  if (std::all_of(comp.begin(), comp.end(), [](const Polynomial& c) { return c.is_zero(); })) return false;
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = i + 1; j < comp.size(); ++j)
      if (!(comp[i] * Polynomial::variable(R, j) == comp[j] * Polynomial::variable(R, i))) return false;
  return true;
}

bool check_graph_identification(const Ideal& I, const Ideal& Iprime) {
  const ReesPresentation P = rees_ideal(I), Q = rees_ideal(Iprime);
  require_square(P);
  require_square(Q);
  const std::size_t n = P.source->nvars();
  if (Q.source->nvars() != n) return false;
  std::vector<int> swap(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = static_cast<int>(n + i);
    swap[n + i] = static_cast<int>(i);
  }
  std::vector<Polynomial> moved;
  for (const auto& g : Q.ideal.generators()) moved.push_back(remap(g, P.ambient, swap));
  const Ideal M(P.ambient, moved);
  return P.ideal.contains(M) && M.contains(P.ideal);
}

bool projectively_equal(const std::vector<Polynomial>& f, const std::vector<Polynomial>& h) {
  if (f.empty() || f.size() != h.size()) return false;
  const RingPtr& R = f.front().ring();
  std::vector<Polynomial> hh;
  for (const auto& p : h) {
    if (p.ring()->nvars() != R->nvars()) return false;
    hh.push_back(remap(p, R, identity_map(R->nvars())));
  }
  const bool fz = std::all_of(f.begin(), f.end(), [](const Polynomial& p) { return p.is_zero(); });
  const bool hz = std::all_of(hh.begin(), hh.end(), [](const Polynomial& p) { return p.is_zero(); });
  if (fz || hz) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!(f[i] * hh[j] == f[j] * hh[i])) return false;
  return true;
}

bool has_trivial_gcd(const std::vector<Polynomial>& forms) {
  if (forms.empty()) return false;
  const Ideal I(forms.front().ring(), forms);
  if (I.is_zero()) return false;
  if (I.is_unit()) return true;
  return codimension(I) >= 2;
}

}  // namespace symrees
