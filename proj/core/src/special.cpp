#include "symrees/special.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace symrees {

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      m.set(i, left);
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, e);
      rec(i + 1, left - e);
    }
  };
  if (n) rec(0, d);
  return out;
}

Polynomial random_form(const RingPtr& R, int d, std::mt19937_64& gen) {
  std::vector<Polynomial::Term> terms;
  for (const auto& m : monomials_of_degree(R->nvars(), d)) {
    const int c = static_cast<int>(gen() % 11) - 5;
    if (c) terms.push_back({m, Scalar(c)});
  }
  return Polynomial::from_terms(R, std::move(terms));
}

FormMatrix random_template(int n, int r, std::uint64_t seed) {
  const RingPtr R = template_ring(n);
  std::mt19937_64 gen(seed);
  FormMatrix phi(R, static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < n; ++j) phi(i, j) = random_form(R, j + 1 < n ? 1 : r, gen);
  return phi;
}

Polynomial linear_combination(const RingPtr& A, std::size_t first, const std::vector<Polynomial>& coeffs) {
  Polynomial out = Polynomial::constant(A, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += Polynomial::variable(A, first + i) * coeffs[i];
  return out;
}

bool pure_power_free_quadric(const Polynomial& f) {
  if (f.is_zero()) return true;
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() != 2) return false;
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
      if (t.monomial[i] > 1) return false;
  }
  return true;
}

}  // namespace

mpz_class template_multiplicity(int n, int r) {
  return mpz_class(r) * r + mpz_class(n - 1) * r + mpz_class(n) * (n - 1) / 2;
}

RingPtr template_ring(int n) {
  return PolyRing::make(PolyRing::indexed_names("x", static_cast<std::size_t>(n), 1));
}

TemplateInstance template_from_matrix(const FormMatrix& phi, int r) {
  if (phi.rows() != phi.cols() + 1 || phi.cols() < 2) throw DomainError("the template matrix must be (n+1) x n, n >= 2");
  TemplateInstance T;
  T.n = static_cast<int>(phi.cols());
  T.r = r;
  T.phi = phi;
  T.ideal = Ideal(phi.ring(), signed_maximal_minors(phi));
  const HilbertData h = hilbert(T.ideal);
  T.codimension = h.codimension;
  T.multiplicity = h.multiplicity;
  if (T.n == 3) {
    std::vector<std::size_t> rows{0, 1, 2, 3}, cols{0, 1};
    T.linear_part_primary = codimension(minors(phi.submatrix(rows, cols), 2)) == 3;
  }
  return T;
}

TemplateInstance template_ideal(int n, int r, std::uint64_t seed, int retries) {
  if (n < 2 || r < 1) throw DomainError("templates need n >= 2 and r >= 1");
  std::vector<std::string> log;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    TemplateInstance T = template_from_matrix(random_template(n, r, s), r);
    T.seed = s;
    std::string why;
    if (T.codimension < 2)
      why = "codimension " + std::to_string(T.codimension);
    else if (minimal_generators(T.ideal).size() != static_cast<std::size_t>(n) + 1)
      why = "fewer than n+1 minimal generators";
    else if (n == 3 && !T.linear_part_primary)
      why = "linear part not (x)-primary";
    if (why.empty()) {
      T.rejections = std::move(log);
      return T;
    }
    log.push_back("seed " + std::to_string(s) + ": " + why);
  }
  throw DomainError("no valid template instance: " + log.back());
}

int implicit_degree(const ReesPresentation& P) {
  const Ideal E = implicit_ideal(P);
  if (E.size() != 1) throw DomainError("the image is not a hypersurface");
  return E.generators().front().degree();
}

Polynomial sylvester_form(const std::vector<Polynomial>& h, const std::vector<std::size_t>& vars) {
  if (h.empty() || h.size() != vars.size()) throw DomainError("a Sylvester form needs one form per variable");
  const RingPtr& R = h.front().ring();
  std::vector<std::vector<Polynomial>> C;
  for (const auto& f : h) {
    require_same_ring(R, f.ring());
    std::vector<Polynomial::Term> rest = f.terms();
    std::vector<Polynomial> row;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const std::size_t v = vars[k];
      std::vector<Polynomial::Term> taken, left;
      for (auto& t : rest) {
        if (t.monomial[v] > 0) {
          Monomial m = t.monomial;
          m.set(v, m[v] - 1);
          taken.push_back({m, t.coeff});
        } else {
          left.push_back(t);
        }
      }
      row.push_back(Polynomial::from_terms(R, std::move(taken)));
      rest = std::move(left);
    }
    if (!rest.empty()) throw DomainError("a form is not in the ideal of the variables");
    C.push_back(std::move(row));
  }
  return FormMatrix::from_rows(R, C).determinant();
}

SylvesterChain sylvester_chain(const TemplateInstance& T) {
  if (T.n != 3) throw DomainError("Sylvester chains are built for n = 3");
  if (!T.linear_part_primary) throw DomainError("the 2-minors of the linear part are not (x)-primary");
  SylvesterChain S;
  S.rees = rees_ideal(T.ideal);
  const RingPtr& A = S.rees.ambient;
  const std::size_t n = 3;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Polynomial> col;
    for (std::size_t i = 0; i <= n; ++i) col.push_back(remap_by_name(T.phi(i, j), A));
    S.symmetric.push_back(linear_combination(A, n, col));
  }
  Polynomial f = S.symmetric.back();
  for (int i = 1; i <= T.r; ++i) {
    f = sylvester_form({S.symmetric[0], S.symmetric[1], f}, {0, 1, 2});
    S.chain.push_back(f);
    if (f.is_zero()) {
      S.bidegrees.push_back({-1, -1});
      continue;
    }
    const auto b = bidegree(f);
    S.bidegrees.push_back({b[0], b[1]});
  }
  std::vector<Polynomial> gens = S.symmetric;
  gens.insert(gens.end(), S.chain.begin(), S.chain.end());
  const Ideal G(A, gens);
  S.in_rees = S.rees.ideal.contains(G);
  S.equals_rees = S.in_rees && G.contains(S.rees.ideal);
  return S;
}

std::vector<InverseData> linear_inverses(const ReesPresentation& P) {
  const std::size_t n = P.source->nvars();
  const JacobianDual J = jacobian_dual(P);
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < J.relations.size(); ++r)
    if (bidegree(J.relations[r])[1] == 1) rows.push_back(r);
  std::vector<InverseData> out;
  for (const auto& pick : subsets(rows.size(), n - 1)) {
    std::vector<std::vector<Polynomial>> cols;
    for (auto k : pick) cols.push_back(J.psi.row(rows[k]));
    std::vector<Polynomial> g = signed_maximal_minors(FormMatrix::from_columns(P.target, cols));
    if (std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_zero(); })) continue;
    Polynomial D;
    try {
      D = inversion_factor(P.forms, g);
    } catch (const AlgebraError&) {
      continue;
    }
    if (std::any_of(out.begin(), out.end(), [&](const InverseData& o) { return projectively_equal(o.inverse, g); }))
      continue;
    const Scalar s = P.source->field().inverse(D.leading_coeff());
    int deg = -1;
    for (auto& gi : g) {
      gi = gi.scaled(s);
      deg = std::max(deg, gi.degree());
    }
    out.push_back({std::move(g), D.scaled(s), deg});
  }
  return out;
}

AppendixData appendix_construct(const FormMatrix& phi) {
  if (phi.rows() != 3 || phi.cols() != 2 || phi.ring()->nvars() != 3)
    throw DomainError("the syzygy matrix must be 3 x 2 over three variables");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (!pure_power_free_quadric(phi(i, j)))
        throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not a quadric free of pure powers");
  AppendixData D;
  D.phi = phi;
  D.base = signed_maximal_minors(phi);
  for (const auto& f : D.base)
    if (f.is_zero()) throw DomainError("a maximal minor of the syzygy matrix vanishes");
  D.rees = rees_ideal(Ideal(phi.ring(), D.base));
  const RingPtr& A = D.rees.ambient;
  const auto x = [&](std::size_t i) { return Polynomial::variable(A, i); };
  const Polynomial zero = Polynomial::constant(A, 0);

  // sums[j] = (sum a_ij y_i, sum b_ij y_i, sum c_ij y_i) for column j.
  const Monomial x0x1 = Monomial::variable(0) * Monomial::variable(1);
  const Monomial x0x2 = Monomial::variable(0) * Monomial::variable(2);
  const Monomial x1x2 = Monomial::variable(1) * Monomial::variable(2);
  std::array<std::array<Polynomial, 3>, 2> sums;
  for (std::size_t j = 0; j < 2; ++j) {
    std::size_t k = 0;
    for (const Monomial& m : {x0x1, x0x2, x1x2}) {
      std::vector<Polynomial> c;
      for (std::size_t i = 0; i < 3; ++i) c.push_back(Polynomial::constant(A, phi(i, j).coefficient(m)));
      sums[j][k++] = linear_combination(A, 3, c);
    }
  }
  const auto& [a1, b1, c1] = sums[0];
  const auto& [a2, b2, c2] = sums[1];
  D.B = FormMatrix::from_rows(A, {{a1, b1, c1}, {a2, b2, c2}, {-x(2), x(1), zero}, {-x(2), zero, x(0)}});
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != k) rows.push_back(i);
    D.delta[k] = D.B.submatrix(rows, {0, 1, 2}).determinant();
  }
  const Polynomial q1 = b1 * c2 - b2 * c1, q2 = a1 * c2 - a2 * c1, q3 = a1 * b2 - a2 * b1;
  D.q = {remap_by_name(q1, D.rees.target), remap_by_name(q2, D.rees.target), remap_by_name(q3, D.rees.target)};

  std::array<Polynomial, 2> ycol;
  for (std::size_t j = 0; j < 2; ++j) {
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < 3; ++i) c.push_back(remap_by_name(phi(i, j), A));
    ycol[j] = linear_combination(A, 3, c);
  }
  const Polynomial delta3 = q3 * x(0) - q1 * x(2), delta4 = -(q2 * x(1)) - q1 * x(2);
  D.delta_formulas =
      D.delta[1] == ycol[0] && D.delta[0] == ycol[1] && D.delta[2] == delta3 && D.delta[3] == delta4;
  D.eq3 = b2 * D.delta[1] - b1 * D.delta[0] == delta3 * x(1);
  D.eq4 = c1 * D.delta[0] - c2 * D.delta[1] == delta4 * x(0);
  D.eq4_opposite = c2 * D.delta[1] - c1 * D.delta[0] == delta4 * x(0);
  D.q_nonzero = std::none_of(D.q.begin(), D.q.end(), [](const Polynomial& p) { return p.is_zero(); });

  const Ideal IB(A, {D.delta.begin(), D.delta.end()});
  D.minors_equal_rees = IB.contains(D.rees.ideal) && D.rees.ideal.contains(IB);
  D.codim_B = codimension(IB);

  const RingPtr& Y = D.rees.target;
  const Polynomial yz = Polynomial::constant(Y, 0);
  D.phi_prime = FormMatrix::from_rows(Y, {{D.q[2], yz}, {yz, -D.q[1]}, {-D.q[0], -D.q[0]}});
  D.codim_phi_prime = codimension(minors(D.phi_prime, 2));
  D.inverse = signed_maximal_minors(D.phi_prime);
  for (const auto& g : D.inverse) D.inverse_degree = std::max(D.inverse_degree, g.degree());
  D.inverse_gcd_one = has_trivial_gcd(D.inverse);
  try {
    const Polynomial F = inversion_factor(D.base, D.inverse);
    const Scalar s = phi.ring()->field().inverse(F.leading_coeff());
    for (auto& g : D.inverse) g = g.scaled(s);
    D.factor = F.scaled(s);
  } catch (const AlgebraError&) {
  }
  return D;
}

}  // namespace symrees
