#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "symrees/cremona.hpp"

using namespace symrees;
using fixture::poly;

namespace {

// g(f) = x D for every coordinate, computed by direct substitution.
bool composes_to_identity(const std::vector<Polynomial>& f, const InverseData& inv) {
  const auto R = f.front().ring();
  for (std::size_t i = 0; i < inv.inverse.size(); ++i) {
    const Polynomial lhs = substitute(inv.inverse[i], f);
    const Polynomial rhs = Polynomial::variable(R, i) * remap_by_name(inv.factor, R);
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<Ideal> cremona_fixtures() {
  return {fixture::standard_quadratic(), fixture::p4_monomial(), fixture::sub_hankel(), fixture::noether(),
          fixture::noname(), fixture::de_jonquieres_cubic(), fixture::polar_quartic().I};
}

}  // namespace

TEST_CASE("standard quadratic map is its own inverse with D = x0 x1 x2") {
  const Ideal I = fixture::standard_quadratic();
  const auto res = is_birational(I);
  REQUIRE(res.birational);
  const InverseData& w = *res.witness;
  CHECK(w.inverse_degree == 2);
  CHECK(w.factor.degree() == 3);
  CHECK(remap_by_name(w.factor, I.ring()) == poly("x0*x1*x2", I.ring()));
  CHECK(composes_to_identity(I.generators(), w));
  CHECK(res.reason.empty());
}

TEST_CASE("identity map has inverse of degree 1 and D = 1") {
  const auto R = fixture::ring(3);
  const Ideal I = fixture::ideal(R, {"x0", "x1", "x2"});
  const auto res = is_birational(I);
  REQUIRE(res.birational);
  CHECK(res.witness->inverse_degree == 1);
  CHECK(res.witness->factor.is_constant());
}

TEST_CASE("known inversion factors") {
  SUBCASE("P4 monomial map") {
    const Ideal I = fixture::p4_monomial();
    const auto res = is_birational(I);
    REQUIRE(res.birational);
    CHECK(res.witness->inverse_degree == 3);
    CHECK(remap_by_name(res.witness->factor, I.ring()) == poly("x0*x1*x2^2*x3", I.ring()));
  }
  SUBCASE("sub-Hankel map") {
    const Ideal I = fixture::sub_hankel();
    const auto res = is_birational(I);
    REQUIRE(res.birational);
    CHECK(res.witness->inverse_degree == 3);
    CHECK(remap_by_name(res.witness->factor, I.ring()) == poly("x3^5", I.ring()));
  }
}

TEST_CASE("non-birational maps are rejected") {
  const auto R = fixture::ring(3);
  const auto res = is_birational(fixture::ideal(R, {"x0^2", "x1^2", "x2^2"}));
  CHECK_FALSE(res.birational);
  CHECK_FALSE(res.witness);
  CHECK_FALSE(res.reason.empty());

  std::mt19937_64 rng(7);
  std::vector<Polynomial> f;
  for (int i = 0; i < 3; ++i) f.push_back(oracle::random_form(R, 2, rng));
  CHECK_FALSE(is_birational(Ideal(R, f)).birational);
}

TEST_CASE("every fixture inverse composes to x D with deg D = d d' - 1") {
  for (const auto& I : cremona_fixtures()) {
    const auto P = rees_ideal(I);
    const auto res = is_birational(P);
    REQUIRE(res.birational);
    const InverseData& w = *res.witness;
    CHECK(composes_to_identity(P.forms, w));
    CHECK(w.factor.degree() == P.degree * w.inverse_degree - 1);
    CHECK(has_trivial_gcd(w.inverse));
    CHECK(inversion_factor(P.forms, w.inverse) == w.factor);
    CHECK(plane_composition_oracle(P.forms, w.inverse));
  }
}

TEST_CASE("inverse of the inverse is the map") {
  for (const auto& I : cremona_fixtures()) {
    const auto res = is_birational(I);
    REQUIRE(res.birational);
    const Ideal J(res.witness->inverse.front().ring(), res.witness->inverse);
    const auto back = is_birational(J);
    REQUIRE(back.birational);
    CHECK(projectively_equal(back.witness->inverse, I.generators()));
  }
}

TEST_CASE("Noether map and its inverse have exchanged Rees ideals") {
  const Ideal I = fixture::noether();
  const auto res = is_birational(I);
  REQUIRE(res.birational);
  const Ideal J(res.witness->inverse.front().ring(), res.witness->inverse);
  CHECK(check_graph_identification(I, J));
  CHECK_FALSE(check_graph_identification(I, fixture::standard_quadratic()));
}

TEST_CASE("rescaling the forms rescales D") {
  const Ideal I = fixture::sub_hankel();
  std::vector<Polynomial> scaled;
  int k = 2;
  for (const auto& f : I.generators()) scaled.push_back(f.scaled(Scalar(k++)));
  const auto a = is_birational(I), b = is_birational(Ideal(I.ring(), scaled));
  REQUIRE(a.birational);
  REQUIRE(b.birational);
  CHECK(a.witness->inverse_degree == b.witness->inverse_degree);
  CHECK(composes_to_identity(scaled, *b.witness));
  CHECK(a.witness->factor.monic() == b.witness->factor.monic());
}

TEST_CASE("inversion_factor rejects a non-inverse") {
  const Ideal I = fixture::standard_quadratic();
  const auto Y = PolyRing::make({"y0", "y1", "y2"});
  const std::vector<Polynomial> bad{poly("y0^2", Y), poly("y1^2", Y), poly("y2^2", Y)};
  CHECK_THROWS_AS(inversion_factor(I.generators(), bad), DomainError);
  CHECK_FALSE(plane_composition_oracle(I.generators(), bad));
  CHECK_THROWS_AS(inversion_factor(I.generators(), {poly("y0", Y)}), DomainError);
}

TEST_CASE("gcd and projective equality helpers") {
  const auto R = fixture::ring(3);
  CHECK(has_trivial_gcd({poly("x0*x1", R), poly("x0*x2", R), poly("x1*x2", R)}));
  CHECK_FALSE(has_trivial_gcd({poly("x0*x1", R), poly("x0*x2", R), poly("x0^2", R)}));
  CHECK(projectively_equal({poly("x0", R), poly("x1", R)}, {poly("2*x0", R), poly("2*x1", R)}));
  CHECK_FALSE(projectively_equal({poly("x0", R), poly("x1", R)}, {poly("x1", R), poly("x0", R)}));
}

TEST_CASE("inverse_candidates of the standard quadratic map") {
  const auto P = rees_ideal(fixture::standard_quadratic());
  CHECK(inverse_candidates(P, 1).empty());
  const auto c = inverse_candidates(P, 2);
  REQUIRE(!c.empty());
  for (const auto& w : c) {
    CHECK(composes_to_identity(P.forms, w));
    CHECK(w.factor.leading_coeff() == Scalar(1));
  }
}
