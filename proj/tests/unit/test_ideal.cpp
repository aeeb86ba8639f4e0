#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symrees/ideal.hpp"

using namespace symrees;

namespace {

RingPtr qq(std::size_t n) { return PolyRing::make(PolyRing::indexed_names("x", n)); }
Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }
Ideal I_(std::initializer_list<const char*> xs, const RingPtr& r) {
  std::vector<Polynomial> out;
  for (auto x : xs) out.push_back(P(x, r));
  return Ideal(r, out);
}

Ideal partials(const Polynomial& f) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) gens.push_back(derivative(f, i));
  return Ideal(f.ring(), gens);
}

Ideal polar_quartic(const RingPtr& R) { return partials(P("(x1^2-x0*x2)*x2*x3", R)); }

// Coefficient of t^d in numerator / (1-t)^n.
mpz_class series_coefficient(const std::vector<mpz_class>& num, int n, int d) {
  mpz_class total = 0;
  for (int i = 0; i <= d && i < static_cast<int>(num.size()); ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d - i + n - 1), static_cast<unsigned long>(n - 1));
    total += num[i] * binom;
  }
  return total;
}

std::size_t dim_R(const RingPtr& R, int d) { return oracle::monomials_of_degree(R, d).size(); }

}  // namespace

TEST_CASE("powers") {
  auto R = qq(3);
  CHECK(same_ideal(power(I_({"x0", "x1"}, R), 2), I_({"x0^2", "x0*x1", "x1^2"}, R)));
  CHECK(power(I_({"x0", "x1"}, R), 2).size() == 3);
  CHECK(power(I_({"x0"}, R), 3).generators() == I_({"x0^3"}, R).generators());
  CHECK(power(I_({"x0"}, R), 0).is_unit());
}

TEST_CASE("square of the polar quartic ideal has the expected number of generators") {
  auto R = qq(4);
  const Ideal I = polar_quartic(R);
  const Ideal I2 = power(I, 2);
  std::vector<Polynomial> products;
  for (const auto& f : I.generators())
    for (const auto& g : I.generators()) products.push_back(f * g);
  CHECK(I2.size() == oracle::component_dimension(products, 6));
  CHECK(I2.size() == 10);
}

TEST_CASE("power products land in the higher power") {
  auto R = qq(3);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 5; ++it) {
    Ideal I(R, {oracle::random_form(R, 2, rng), oracle::random_form(R, 2, rng)});
    const Ideal A = power(I, 1 + it % 2), B = power(I, 2), C = power(I, 3 + it % 2);
    for (const auto& a : A.generators())
      for (const auto& b : B.generators()) CHECK(C.contains(a * b));
  }
}

TEST_CASE("quotients") {
  auto R = qq(3);
  CHECK(same_ideal(quotient(I_({"x0^2"}, R), I_({"x0"}, R)), I_({"x0"}, R)));
  CHECK(same_ideal(quotient(I_({"x0*x1"}, R), I_({"x2"}, R)), I_({"x0*x1"}, R)));
  CHECK(quotient(I_({"x0"}, R), I_({"x0", "x0*x1"}, R)).is_unit());
  CHECK(same_ideal(quotient(I_({"x0^2", "x0*x1"}, R), P("x0+x1", R)), I_({"x0"}, R)));
  CHECK_THROWS_AS(quotient(I_({"x0"}, R), Ideal::zero(R)), DomainError);
}

TEST_CASE("sub-Hankel ideal has positive depth") {
  auto R = qq(4);
  const Ideal I = I_({"x3^2", "x2*x3", "-3*x2^2+2*x1*x3", "x1*x2-x0*x3"}, R);
  const Ideal m = irrelevant_ideal(R);
  CHECK(same_ideal(quotient(I, m), I));
  const auto sat = saturate(I, m);
  CHECK(sat.exponent == 0);
  CHECK(same_ideal(sat.ideal, I));
  // Q = (x1, x2, x3) is embedded, so colon by x1 grows.
  CHECK_FALSE(same_ideal(saturate(I, P("x1", R)).ideal, I));
}

TEST_CASE("quotient by a form agrees with the intersection route") {
  auto R = qq(3);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 8; ++it) {
    Ideal I(R, {oracle::random_form(R, 2, rng), oracle::random_form(R, 3, rng) * P("x0", R)});
    const auto f = it % 2 ? P("x0", R) : oracle::random_form(R, 1, rng);
    const Ideal a = quotient(I, f);
    const Ideal b = quotient_by_intersection(I, f);
    CHECK(same_ideal(a, b));
    for (const auto& g : a.generators()) CHECK(I.contains(g * f));
  }
}

TEST_CASE("saturation") {
  auto R = qq(3);
  CHECK(same_ideal(quotient(I_({"x0^2", "x0*x1"}, R), P("x0", R)), I_({"x0", "x1"}, R)));
  // x0 lies in the colon, so the saturation is the whole ring.
  auto s = saturate(I_({"x0^2", "x0*x1"}, R), P("x0", R));
  CHECK(s.ideal.is_unit());
  CHECK(s.exponent == 2);
  s = saturate(I_({"x0^2", "x0*x1"}, R), P("x1", R));
  CHECK(same_ideal(s.ideal, I_({"x0"}, R)));
  CHECK(s.exponent == 1);
  s = saturate(I_({"x0^2", "x1^2"}, R), P("x2", R));
  CHECK(s.exponent == 0);
  CHECK(same_ideal(s.ideal, I_({"x0^2", "x1^2"}, R)));
  s = saturate(I_({"x0^3*x1", "x2^2*x0"}, R), I_({"x0", "x2"}, R));
  CHECK(same_ideal(s.ideal, I_({"x0*x1", "x0*x2^2"}, R)));
  CHECK(s.exponent == 3);
  const auto it = saturate_iterated(I_({"x0^3*x1", "x2^2*x0"}, R), I_({"x0", "x2"}, R));
  CHECK(same_ideal(s.ideal, it.ideal));
  CHECK(it.exponent == 3);
}

TEST_CASE("saturation routes agree on random ideals") {
  auto R = qq(3);
  std::mt19937_64 rng(17);
  for (int it = 0; it < 6; ++it) {
    const auto a = oracle::random_form(R, 1, rng), b = oracle::random_form(R, 1, rng);
    Ideal I(R, {a * a * oracle::random_form(R, 1, rng), a * b * oracle::random_form(R, 1, rng),
                oracle::random_form(R, 3, rng) * P("x0", R)});
    const Ideal J(R, {P("x0", R), P("x1", R)});
    const auto s = saturate(I, J);
    const auto t = saturate_iterated(I, J);
    CHECK(same_ideal(s.ideal, t.ideal));
    CHECK(s.exponent == t.exponent);
    CHECK(s.ideal.contains(I));
    const auto again = saturate(s.ideal, J);
    CHECK(again.exponent == 0);
    CHECK(same_ideal(again.ideal, s.ideal));
  }
}

TEST_CASE("polar quartic second symbolic power") {
  auto R = qq(4);
  const Ideal I = polar_quartic(R);
  const Ideal I2 = power(I, 2);
  const Polynomial q = P("x1^2-x0*x2", R), c = P("x2^2*x3", R);
  const auto by_element = saturate(I2, P("x1^2+x2^2+x0*x3", R));
  const auto fresh = minimal_generators_modulo(by_element.ideal, I2);
  REQUIRE(fresh.size() == 2);
  for (const auto& g : fresh) CHECK(g.degree() == 5);
  CHECK(same_ideal(by_element.ideal, sum(I2, Ideal(R, {c * q, P("x2*x3", R) * c}))));

  const auto by_ideal = saturate(I2, I_({"x1", "x2", "x0*x3"}, R));
  CHECK(same_ideal(by_ideal.ideal, by_element.ideal));

  // The annihilator of I^(2)/I^2.
  const Ideal ann = quotient(I2, by_element.ideal);
  CHECK(same_ideal(ann, I_({"x1", "x2", "x0*x3"}, R)));
  CHECK(codimension(ann) == 3);
  CHECK_FALSE(radical_contains(ann, P("x0", R)));
  CHECK_FALSE(radical_contains(ann, P("x3", R)));
  CHECK(radical_contains(ann, P("x1", R)));
}

TEST_CASE("intersections") {
  auto R = qq(3);
  CHECK(same_ideal(intersect(I_({"x0"}, R), I_({"x1"}, R)), I_({"x0*x1"}, R)));
  CHECK(same_ideal(intersect(I_({"x0", "x1"}, R), I_({"x2"}, R)), I_({"x0*x2", "x1*x2"}, R)));
  std::mt19937_64 rng(23);
  for (int it = 0; it < 10; ++it) {
    Ideal a(R, {oracle::random_form(R, 1 + it % 2, rng), oracle::random_form(R, 2, rng)});
    Ideal b(R, {oracle::random_form(R, 2, rng)});
    const Ideal c = intersect(a, b);
    CHECK(a.contains(c));
    CHECK(b.contains(c));
    // Quotient/intersection duality.
    const auto f = b.generators().front();
    const Ideal af = intersect(a, Ideal(R, {f}));
    for (const auto& g : af.generators()) CHECK(divides(f, g));
    CHECK(same_ideal(quotient(a, f), quotient_by_intersection(a, f)));
  }
}

TEST_CASE("intersection of non-homogeneous ideals") {
  auto R = qq(2);
  const Ideal c = intersect(I_({"x0-1"}, R), I_({"x1-1"}, R));
  CHECK(same_ideal(c, I_({"(x0-1)*(x1-1)"}, R)));
}

TEST_CASE("minimal generators") {
  auto R = qq(4);
  CHECK(minimal_generators(I_({"x0^2", "x0^3"}, R)) == I_({"x0^2"}, R).generators());
  const auto mg = minimal_generators(polar_quartic(R));
  CHECK(mg.size() == 4);
  for (const auto& g : mg) CHECK(g.degree() == 3);
  CHECK_THROWS_AS(minimal_generators(I_({"x0^2+x1"}, R)), NotHomogeneousError);
}

TEST_CASE("minimal generators regenerate and are irredundant") {
  auto R = qq(3);
  std::mt19937_64 rng(29);
  for (int it = 0; it < 10; ++it) {
    std::vector<Polynomial> gens{oracle::random_form(R, 2, rng), oracle::random_form(R, 2, rng)};
    gens.push_back(gens[0] * oracle::random_form(R, 1, rng) + gens[1] * oracle::random_form(R, 1, rng));
    gens.push_back(oracle::random_form(R, 3, rng));
    const Ideal I(R, gens);
    const auto mg = minimal_generators(I);
    CHECK(same_ideal(Ideal(R, mg), I));
    CHECK(mg.size() <= 3);
    const Ideal m = irrelevant_ideal(R);
    for (std::size_t k = 0; k < mg.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < mg.size(); ++j)
        if (j != k) others.push_back(mg[j]);
      const Ideal rest = sum(product(m, I), Ideal(R, others));
      CHECK_FALSE(rest.contains(mg[k]));
    }
  }
}

TEST_CASE("minors") {
  auto R = qq(3);
  auto M = FormMatrix::from_rows(R, {{P("x0", R), P("x1", R)}, {P("x1", R), P("x2", R)}});
  const Ideal I = minors(M, 2);
  CHECK(I.size() == 1);
  CHECK(same_ideal(I, I_({"x0*x2-x1^2", }, R)));
  CHECK(minors(M, 1).size() == 3);
  CHECK_THROWS_AS(minors(M, 3), DomainError);
  CHECK_THROWS_AS(minors(M, 0), DomainError);
}

TEST_CASE("Hilbert data") {
  auto R = qq(3);
  auto h = hilbert(Ideal::zero(R));
  CHECK(h.numerator == std::vector<mpz_class>{1});
  CHECK(h.dimension == 3);
  CHECK(h.codimension == 0);
  CHECK(h.multiplicity == 1);

  auto R4 = qq(4);
  h = hilbert(I_({"x1", "x2", "x0*x3"}, R4));
  CHECK(h.codimension == 3);
  CHECK(h.dimension == 1);
  CHECK(h.multiplicity == 2);

  h = hilbert(Ideal::unit(R));
  CHECK(h.dimension + h.codimension == 3);
  CHECK_THROWS_AS(hilbert(I_({"x0+1"}, R)), NotHomogeneousError);
}

TEST_CASE("complete intersections have multiplicity the product of degrees") {
  auto R = qq(4);
  std::mt19937_64 rng(31);
  const int degs[][3] = {{1, 2, 2}, {2, 2, 3}, {1, 1, 3}, {2, 3, 1}};
  for (const auto& d : degs) {
    Ideal I(R, {oracle::random_form(R, d[0], rng, -5, 5, 1.0), oracle::random_form(R, d[1], rng, -5, 5, 1.0),
                oracle::random_form(R, d[2], rng, -5, 5, 1.0)});
    const auto h = hilbert(I);
    CHECK(h.dimension == 1);
    CHECK(h.multiplicity == d[0] * d[1] * d[2]);
  }
}

TEST_CASE("Hilbert series agrees with degreewise dimensions") {
  auto R = qq(4);
  std::mt19937_64 rng(37);
  for (int it = 0; it < 10; ++it) {
    std::vector<Polynomial> gens{oracle::random_form(R, 2, rng, -3, 3, 0.4), oracle::random_form(R, 2, rng, -3, 3, 0.3),
                                 oracle::random_form(R, 3, rng, -3, 3, 0.3)};
    const Ideal I(R, gens);
    const auto h = hilbert(I);
    for (int d = 0; d <= 5; ++d)
      CHECK(series_coefficient(h.numerator, 4, d) == dim_R(R, d) - oracle::component_dimension(gens, d));
    CHECK(h.dimension == krull_dimension(I));
    CHECK(h.dimension + h.codimension == 4);
  }
}

TEST_CASE("weighted Krull dimension") {
  auto R = PolyRing::make({"x", "y", "z"}, CoefficientField::rationals(), {}, {1, 2, 3});
  CHECK(krull_dimension(Ideal(R, {P("y-x^2", R)})) == 2);
  CHECK(krull_dimension(Ideal(R, {P("y-x^2", R), P("z-x*y", R)})) == 1);
  const auto h = hilbert(Ideal(R, {P("y-x^2", R), P("z-x*y", R)}));
  CHECK(h.dimension == 1);
  CHECK(h.codimension == 2);
}

TEST_CASE("radical membership") {
  auto R = qq(3);
  CHECK(radical_contains(I_({"x0^2"}, R), P("x0", R)));
  CHECK_FALSE(radical_contains(I_({"x0"}, R), P("x1", R)));
  CHECK(radical_contains(I_({"x0^2", "x1^3"}, R), P("x0+x1", R)));
  CHECK(radical_contains(I_({"x0^2-x1"}, R), P("x0^4-x1^2", R)));
  CHECK_FALSE(radical_contains(I_({"x0^2-x1"}, R), P("x0", R)));
  CHECK(radical_contains(I_({"x0"}, R), Polynomial(R)));
}

TEST_CASE("elimination") {
  auto R = PolyRing::make({"t", "x", "y"}, CoefficientField::rationals(), {1, 2});
  const Ideal I(R, {P("x-t^2", R), P("y-t^3", R)});
  const Ideal E = eliminate(I, 0);
  CHECK(same_ideal(E, Ideal(R, {P("x^3-y^2", R)})));
  const Ideal E2 = eliminate_variables(I, {0});
  CHECK(same_ideal(E, E2));
}

TEST_CASE("cached bases generate the same ideal") {
  auto R = qq(3);
  const Ideal I = I_({"x0^2-x1*x2", "x1^2-x0*x2"}, R);
  const auto& a = I.groebner();
  const auto& b = I.groebner(MonomialOrder::lex(3));
  const Ideal copy = I;
  CHECK(&copy.groebner() == &a);
  CHECK(I.cached_bases().size() == 2);
  CHECK(same_ideal(Ideal(R, a.generators()), Ideal(R, b.generators())));
}

TEST_CASE("unmixed part drops embedded and lower-dimensional components") {
  const auto R = qq(3);
  const Ideal I = I_({"x0^2", "x0*x1"}, R);
  CHECK(same_ideal(unmixed_part(I), I_({"x0"}, R)));
  CHECK_FALSE(is_unmixed(I));
  const Ideal J = I_({"x0*x1", "x0*x2", "x1*x2"}, R);
  CHECK(same_ideal(unmixed_part(J), J));
  CHECK(is_unmixed(J));
  // (x0, x1)^2 is primary, so it is its own unmixed part.
  const Ideal K = I_({"x0^2", "x0*x1", "x1^2"}, R);
  CHECK(same_ideal(unmixed_part(K), K));
  CHECK_THROWS_AS(unmixed_part(I_({"x0+x1^2"}, R)), NotHomogeneousError);
}
