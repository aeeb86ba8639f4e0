#include "fixtures.hpp"

namespace fixture {

using namespace symrees;

RingPtr ring(std::size_t n) { return PolyRing::make(PolyRing::indexed_names("x", n)); }

Polynomial poly(const std::string& text, const RingPtr& R) { return parse_polynomial(text, R); }

Ideal ideal(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (auto g : gens) out.push_back(poly(g, R));
  return Ideal(R, out);
}

FormMatrix matrix(const RingPtr& R, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Polynomial>> out;
  for (const auto& row : rows) {
    std::vector<Polynomial> r;
    for (auto e : row) r.push_back(poly(e, R));
    out.push_back(std::move(r));
  }
  return FormMatrix::from_rows(R, out);
}

Ideal standard_quadratic() { return ideal(ring(3), {"x1*x2", "x0*x2", "x0*x1"}); }

Ideal p4_monomial() { return ideal(ring(5), {"x0*x1", "x1*x2", "x0*x2", "x2*x3", "x3*x4"}); }

Ideal sub_hankel() { return ideal(ring(4), {"x3^2", "x2*x3", "-3*x2^2+2*x1*x3", "x1*x2-x0*x3"}); }

FormMatrix noether_matrix() {
  return matrix(ring(4), {{"0", "-x1", "-x1"}, {"-x0", "x0", "x1"}, {"x0", "0", "0"}, {"x2", "0", "x3"}});
}

Ideal noether() { return minors(noether_matrix(), 3); }

FormMatrix noname_matrix() {
  return matrix(ring(4), {{"2*x0", "0", "0"}, {"x1", "2*x0", "0"}, {"0", "3/2*x1", "2*x0"}, {"-x3", "x2", "x1"}});
}

Ideal noname() { return minors(noname_matrix(), 3); }

Ideal de_jonquieres_cubic() {
  return ideal(ring(3), {"x0*(x0*x2+x1^2)", "x1*(x0*x2+x1^2)", "x1^2*x2+x0^3"});
}

PolarQuartic polar_quartic() {
  PolarQuartic p;
  p.R = ring(4);
  p.c = poly("x2^2*x3", p.R);
  p.q = poly("x1^2-x0*x2", p.R);
  const Polynomial f = poly("(x1^2-x0*x2)*x2*x3", p.R);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < 4; ++i) gens.push_back(derivative(f, i));
  p.I = Ideal(p.R, gens);
  p.element = poly("x1^2+x2^2+x0*x3", p.R);
  p.a = Ideal(p.R, {p.element, poly("x1*x2*x3", p.R)});
  const Polynomial x1 = poly("x1", p.R), x2 = poly("x2", p.R), x3 = poly("x3", p.R);
  p.extras = {{p.c * p.q, 2}, {x2 * x3 * p.c, 2}, {x1 * p.c * p.q.pow(2), 3}, {x2 * p.c * p.q.pow(3), 4}};
  return p;
}

FormMatrix alberich_syzygies() {
  return matrix(ring(3), {{"-x2*(x0-2*x1)", "0"}, {"x1*(x0-x2)", "x1*(x0-x2)"}, {"0", "x0*(x1-x2)"}});
}

Ideal alberich() {
  return ideal(ring(3), {"x0*x1*(x1-x2)*(x0-x2)", "x0*x2*(x1-x2)*(x0-2*x1)", "x1*x2*(x0-x2)*(x0-2*x1)"});
}

}  // namespace fixture
