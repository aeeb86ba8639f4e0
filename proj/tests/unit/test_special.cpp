#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "symrees/special.hpp"

using namespace symrees;
using fixture::poly;

namespace {

// Random 3 x 2 matrix of quadrics with no x_i^2 terms.
FormMatrix random_appendix_matrix(std::uint64_t seed) {
  const auto R = fixture::ring(3);
  const std::vector<std::string> mons{"x0*x1", "x0*x2", "x1*x2"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-4, 4);
  FormMatrix M(R, 3, 2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Polynomial e(R);
      for (const auto& m : mons) e += poly(m, R).scaled(Scalar(coeff(rng)));
      M(i, j) = e;
    }
  return M;
}

}  // namespace

TEST_CASE("template multiplicities") {
  CHECK(template_multiplicity(3, 1) == 6);
  CHECK(template_multiplicity(3, 2) == 11);
  CHECK(template_multiplicity(3, 3) == 18);
  CHECK(template_multiplicity(2, 4) == 21);
  CHECK(template_multiplicity(4, 1) == 10);
}

TEST_CASE("template instances have the expected numerology") {
  for (int r = 1; r <= 2; ++r) {
    const TemplateInstance T = template_ideal(3, r, 1000 * r + 1);
    CHECK(T.codimension == 2);
    CHECK(T.multiplicity == template_multiplicity(3, r));
    CHECK(hilbert(T.ideal).multiplicity == template_multiplicity(3, r));
    CHECK(T.ideal.size() == 4);
    CHECK(T.linear_part_primary);
    CHECK(implicit_degree(rees_ideal(T.ideal)) == 2 * r + 1);
    // The columns of phi are syzygies of the minors.
    const auto f = signed_maximal_minors(T.phi);
    for (std::size_t j = 0; j < T.phi.cols(); ++j) {
      Polynomial s(T.ideal.ring());
      for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * T.phi(i, j);
      CHECK(s.is_zero());
    }
  }
  CHECK_THROWS_AS(template_ideal(1, 1, 0), DomainError);
  CHECK_THROWS_AS(template_ideal(3, 0, 0), DomainError);
}

TEST_CASE("a degenerate template matrix is reported") {
  const auto R = template_ring(3);
  const FormMatrix phi =
      fixture::matrix(R, {{"x1", "x2", "x3"}, {"x2", "x3", "x1"}, {"x3", "x1", "x2"}, {"0", "0", "0"}});
  const TemplateInstance T = template_from_matrix(phi, 1);
  CHECK(T.codimension < 2);
}

TEST_CASE("Sylvester forms") {
  const auto A = PolyRing::make({"x0", "x1", "y0", "y1", "y2", "y3"});
  SUBCASE("the variables themselves give 1") {
    CHECK(sylvester_form({poly("x0", A), poly("x1", A)}, {0, 1}) == poly("1", A));
  }
  SUBCASE("2 x 2 content matrix") {
    const std::vector<Polynomial> h{poly("x0*y0+x1*y1", A), poly("x0*y2+x1*y3", A)};
    CHECK(sylvester_form(h, {0, 1}) == poly("y0*y3-y1*y2", A));
  }
  SUBCASE("terms divisible by both variables go to the first") {
    const std::vector<Polynomial> h{poly("x0*x1+x1*y1", A), poly("x0*y2", A)};
    // C = [[x1, y1], [y2, 0]]
    CHECK(sylvester_form(h, {0, 1}) == poly("-y1*y2", A));
  }
  SUBCASE("proportional rows give 0") {
    const std::vector<Polynomial> h{poly("x0*y0+x1*y1", A), poly("2*x0*y0+2*x1*y1", A)};
    CHECK(sylvester_form(h, {0, 1}).is_zero());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(sylvester_form({poly("x0+y0", A), poly("x1", A)}, {0, 1}), DomainError);
    CHECK_THROWS_AS(sylvester_form({poly("x0", A)}, {0, 1}), DomainError);
  }
}

TEST_CASE("Sylvester forms of Rees ideal elements stay in the Rees ideal") {
  const TemplateInstance T = template_ideal(3, 1, 1001);
  const SylvesterChain S = sylvester_chain(T);
  const auto R = S.rees.ambient;
  // Any 3 elements of the Rees ideal in (x) give a Sylvester form in the Rees ideal.
  const std::vector<Polynomial> h{S.symmetric[0], S.symmetric[1], S.symmetric[0] * poly("y0", R)};
  CHECK(S.rees.ideal.contains(sylvester_form(h, {0, 1, 2})));
}

TEST_CASE("Sylvester chain for r = 1 reaches the implicit cubic") {
  const TemplateInstance T = template_ideal(3, 1, 1001);
  const SylvesterChain S = sylvester_chain(T);
  REQUIRE(S.chain.size() == 1);
  CHECK(S.bidegrees.front() == std::pair{0, 3});
  const Ideal E = implicit_ideal(S.rees);
  REQUIRE(E.size() == 1);
  CHECK(projectively_equal({transfer(Ideal(S.rees.ambient, {S.chain.front()}), E.ring()).generators().front()},
                           {E.generators().front()}));
  CHECK(S.in_rees);
  CHECK(S.equals_rees);
}

TEST_CASE("Sylvester chain for r = 2") {
  const TemplateInstance T = template_ideal(3, 2, 2001);
  const SylvesterChain S = sylvester_chain(T);
  REQUIRE(S.chain.size() == 2);
  for (int i = 1; i <= 2; ++i) CHECK(S.bidegrees[i - 1] == std::pair{2 - i, 2 * i + 1});
  for (const auto& f : S.chain) CHECK(S.rees.ideal.contains(f));
  CHECK(S.in_rees);
  CHECK(S.equals_rees);
}

TEST_CASE("Sylvester chain preconditions") {
  CHECK_THROWS_AS(sylvester_chain(template_ideal(2, 1, 1)), DomainError);
  const auto R = template_ring(3);
  const FormMatrix phi =
      fixture::matrix(R, {{"x1", "0", "x2"}, {"x2", "x1", "x3"}, {"0", "x2", "x1"}, {"0", "0", "x3"}});
  const TemplateInstance T = template_from_matrix(phi, 1);
  CHECK_FALSE(T.linear_part_primary);
  CHECK_THROWS_AS(sylvester_chain(T), DomainError);
}

TEST_CASE("degree 2 inverses of the template maps") {
  SUBCASE("r = 1 has three") {
    const TemplateInstance T = template_ideal(3, 1, 1001);
    const auto P = rees_ideal(T.ideal);
    const auto inv = linear_inverses(P);
    CHECK(inv.size() == 3);
    for (const auto& w : inv) {
      CHECK(w.inverse_degree == 2);
      CHECK(w.factor.degree() == 5);
      CHECK(inversion_factor(P.forms, w.inverse) == w.factor);
    }
  }
  SUBCASE("r = 2 has one") {
    const TemplateInstance T = template_ideal(3, 2, 2001);
    CHECK(linear_inverses(rees_ideal(T.ideal)).size() == 1);
  }
}

TEST_CASE("appendix construction on the alberich matrix") {
  const AppendixData A = appendix_construct(fixture::alberich_syzygies());
  CHECK(same_ideal(Ideal(A.base.front().ring(), A.base), fixture::alberich()));
  CHECK(A.delta_formulas);
  CHECK(A.eq3);
  CHECK(A.eq4);
  CHECK_FALSE(A.eq4_opposite);
  CHECK(A.q_nonzero);
  CHECK(A.minors_equal_rees);
  CHECK(A.codim_B == 2);
  CHECK(A.codim_phi_prime == 2);
  CHECK(A.inverse_gcd_one);
  CHECK(A.inverse_degree == 4);
  REQUIRE(A.factor.has_value());
  CHECK(A.factor->degree() == 15);
  CHECK(plane_composition_oracle(A.base, A.inverse));
}

TEST_CASE("appendix identities on random valid matrices") {
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 3 && seed < 20; ++seed) {
    AppendixData A;
    try {
      A = appendix_construct(random_appendix_matrix(seed));
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
    CHECK(A.delta_formulas);
    CHECK(A.eq3);
    CHECK(A.eq4);
    CHECK_FALSE(A.eq4_opposite);
  }
  CHECK(checked == 3);
}

TEST_CASE("appendix construction rejects pure powers") {
  const auto R = fixture::ring(3);
  FormMatrix M = fixture::alberich_syzygies();
  M(0, 1) = poly("x0^2", R);
  CHECK_THROWS_AS(appendix_construct(M), DomainError);
  CHECK_THROWS_AS(appendix_construct(fixture::matrix(R, {{"x0*x1"}, {"x1*x2"}, {"x0*x2"}})), DomainError);
}
