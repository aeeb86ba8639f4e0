#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "symrees/symbolic.hpp"

using namespace symrees;
using fixture::poly;

namespace {

// f is a minimal generator of J: f in J but not in m J.
bool is_minimal_generator(const Polynomial& f, const Ideal& J) {
  return J.contains(f) && !product(irrelevant_ideal(J.ring()), J).contains(f);
}

InverseData inverse_of(const Ideal& I) {
  const auto res = is_birational(I);
  REQUIRE(res.birational);
  return *res.witness;
}

}  // namespace

TEST_CASE("complete intersections have trivial symbolic powers") {
  const auto R = fixture::ring(3);
  SymbolicFiltration F(fixture::ideal(R, {"x0", "x1"}));
  for (int l = 1; l <= 3; ++l) {
    CHECK(same_ideal(F.symbolic(l), F.power(l)));
    CHECK(F.fresh(l).empty());
  }
  CHECK(F.essential(2).empty());
  CHECK(F.essential(3).empty());
  for (const auto& rec : condition_i(F, 3)) CHECK(rec.verdict == ConditionRecord::Verdict::Zero);
}

TEST_CASE("sub-Hankel: I^(2) = I^2 and the expected form holds") {
  const Ideal I = fixture::sub_hankel();
  SymbolicFiltration F(I);
  CHECK(same_ideal(F.symbolic(2), F.power(2)));
  CHECK(depth_positive(I));
  for (const auto& rec : condition_i(F, 3)) CHECK(rec.verdict != ConditionRecord::Verdict::Fails);

  const auto inv = inverse_of(I);
  const Polynomial D = remap_by_name(inv.factor, I.ring());
  CHECK(D == poly("x3^5", I.ring()));
  const auto report = expected_form_check(F, D, inv.inverse_degree, 4);
  CHECK(report.precondition);
  REQUIRE(report.levels.size() == 4);
  for (const auto& [l, ok] : report.levels) CHECK_MESSAGE(ok, "level " << l);
}

TEST_CASE("sub-Hankel symbolic presentation matches the subalgebra presentation") {
  const Ideal I = fixture::sub_hankel();
  const auto P = rees_ideal(I);
  const auto inv = inverse_of(I);
  const Ideal S = symbolic_presentation(P, inv);
  const Polynomial D = remap_by_name(inv.factor, I.ring());
  const auto A = subalgebra_presentation(I, {{D, inv.inverse_degree}});
  CHECK(same_ideal(S, transfer(A.ideal, S.ring())));
}

TEST_CASE("standard quadratic symbolic presentation") {
  const Ideal I = fixture::standard_quadratic();
  const auto P = rees_ideal(I);
  const Ideal S = symbolic_presentation(P, inverse_of(I));
  CHECK(S.contains(parse_polynomial("x0*z-y1*y2", S.ring())));
  CHECK(is_regular_sequence(S, {parse_polynomial("x2", S.ring()), parse_polynomial("x0+x1", S.ring())}));
  CHECK_FALSE(is_regular_sequence(S, {parse_polynomial("x2", S.ring()), parse_polynomial("x0", S.ring())}));
}

TEST_CASE("de Jonquieres cubic: x2 then x0 is regular on the symbolic presentation") {
  const Ideal I = fixture::de_jonquieres_cubic();
  const auto P = rees_ideal(I);
  const auto inv = inverse_of(I);
  CHECK(inv.inverse_degree == 3);
  const Ideal S = symbolic_presentation(P, inv);
  CHECK(is_regular_sequence(S, {parse_polynomial("x2", S.ring()), parse_polynomial("x0", S.ring())}));
}

TEST_CASE("P4 monomial map with minimal-prime symbolic powers") {
  const Ideal I = fixture::p4_monomial();
  const auto R = I.ring();
  CHECK(monomial_minimal_primes(I).size() >= 2);
  SymbolicFiltration F(I, SaturationTarget::minimal_primes());
  const Polynomial m = poly("x0*x1*x2", R);
  CHECK(is_minimal_generator(m, F.symbolic(2)));
  CHECK_FALSE(F.power(2).contains(m));
  const auto fresh2 = F.fresh(2);
  REQUIRE(fresh2.size() == 1);
  CHECK(fresh2.front() == m);

  const Polynomial D = poly("x0*x1*x2^2*x3", R);
  CHECK(F.symbolic(3).contains(D));
  CHECK_FALSE(F.power(3).contains(D));
  CHECK(F.products_below(3).contains(D));
  CHECK(F.essential(3).empty());
  CHECK(F.saturation_exponent(2) == 0);
}

TEST_CASE("minimal primes of squarefree monomial ideals") {
  const auto R = fixture::ring(3);
  const auto primes = monomial_minimal_primes(fixture::standard_quadratic());
  CHECK(primes == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(same_ideal(monomial_symbolic_power(fixture::standard_quadratic(), 2),
                   Ideal(R, {poly("x0*x1*x2", R), poly("x0^2*x1^2", R), poly("x0^2*x2^2", R),
                             poly("x1^2*x2^2", R)})));
  CHECK_THROWS_AS(monomial_symbolic_power(fixture::ideal(R, {"x0^2"}), 2), DomainError);
  CHECK_THROWS_AS(SaturationTarget::minimal_primes().saturate(fixture::standard_quadratic()), DomainError);
}

TEST_CASE("polar quartic: condition (i) fails at l = 2") {
  const auto pq = fixture::polar_quartic();
  SymbolicFiltration F(pq.I, SaturationTarget::from_element(pq.element));
  const auto recs = condition_i(F, 2);
  REQUIRE(recs.size() == 2);
  CHECK(recs[1].verdict == ConditionRecord::Verdict::Fails);
  CHECK(recs[1].witness.has_value());
  CHECK(same_ideal(recs[1].annihilator, fixture::ideal(pq.R, {"x1", "x2", "x0*x3"})));
}

TEST_CASE("polar quartic: fresh and essential generators with the element target") {
  const auto pq = fixture::polar_quartic();
  SymbolicFiltration F(pq.I, SaturationTarget::from_element(pq.element));
  const Polynomial cq = pq.c * pq.q, x2x3c = poly("x2*x3", pq.R) * pq.c;

  const auto fresh2 = F.fresh(2);
  REQUIRE(fresh2.size() == 2);
  for (const auto& g : fresh2) CHECK(g.degree() == 5);
  CHECK(same_ideal(F.symbolic(2), sum(F.power(2), Ideal(pq.R, {cq, x2x3c}))));

  const auto ess3 = F.essential(3);
  REQUIRE(ess3.size() == 1);
  CHECK(ess3.front().degree() == 8);
  CHECK(same_ideal(F.symbolic(3), sum(F.products_below(3), Ideal(pq.R, {poly("x1", pq.R) * cq * pq.q}))));

  const Polynomial D = pq.c.pow(2) * pq.q;
  CHECK(product(pq.I, F.symbolic(2)).contains(D));
  const auto report = expected_form_check(F, D, 3, 2);
  CHECK(report.precondition);
  REQUIRE(report.levels.size() == 2);
  CHECK(report.levels[1].second == false);
}

TEST_CASE("polar quartic: element and unmixed targets agree at l = 2") {
  const auto pq = fixture::polar_quartic();
  SymbolicFiltration Fe(pq.I, SaturationTarget::from_element(pq.element));
  SymbolicFiltration Fu(pq.I, SaturationTarget::unmixed());
  CHECK(is_unmixed(pq.I));
  CHECK(same_ideal(Fe.symbolic(2), Fu.symbolic(2)));
  CHECK(target_preserves_top_components(pq.I, SaturationTarget::from_element(pq.element)));
}

TEST_CASE("depth_positive") {
  const auto R = fixture::ring(3);
  CHECK(depth_positive(fixture::ideal(R, {"x0*x1", "x0*x2"})));
  CHECK(depth_positive(fixture::ideal(R, {"x0^2", "x0*x1"})));
  const auto R2 = fixture::ring(2);
  CHECK_FALSE(depth_positive(fixture::ideal(R2, {"x0^2", "x0*x1"})));
  CHECK(depth_positive(fixture::sub_hankel()));
}

TEST_CASE("filtration axioms on the fixtures") {
  const std::vector<Ideal> ideals{fixture::standard_quadratic(), fixture::sub_hankel(), fixture::de_jonquieres_cubic()};
  for (const auto& I : ideals) {
    SymbolicFiltration F(I);
    CHECK(same_ideal(F.symbolic(1), I));
    for (int a = 1; a <= 2; ++a)
      for (int b = a; a + b <= 3; ++b) CHECK(F.symbolic(a + b).contains(product(F.symbolic(a), F.symbolic(b))));
    for (int l = 1; l <= 3; ++l) {
      CHECK(F.symbolic(l).contains(F.power(l)));
      // essential implies fresh implies outside I^l
      if (l > 1)
        for (const auto& g : F.essential(l)) CHECK_FALSE(F.power(l).contains(g));
      for (const auto& g : F.fresh(l)) CHECK_FALSE(F.power(l).contains(g));
    }
  }
}

TEST_CASE("inverse degree 2: D is a minimal generator of I^(2) outside I^2") {
  for (const auto& I : {fixture::noether(), fixture::noname()}) {
    const auto inv = inverse_of(I);
    REQUIRE(inv.inverse_degree == 2);
    const Polynomial D = remap_by_name(inv.factor, I.ring());
    SymbolicFiltration F(I);
    CHECK(is_minimal_generator(D, F.symbolic(2)));
    CHECK_FALSE(F.power(2).contains(D));
    CHECK_FALSE(power(I, 3).contains(product(Ideal(I.ring(), {D}), I)));
    const auto recs = condition_i(F, 2);
    CHECK(recs[1].verdict == ConditionRecord::Verdict::Primary);
  }
}

TEST_CASE("expected form precondition failure") {
  const Ideal I = fixture::standard_quadratic();
  SymbolicFiltration F(I);
  const auto report = expected_form_check(F, poly("x0", I.ring()), 2, 3);
  CHECK_FALSE(report.precondition);
  CHECK(report.levels.empty());
}

TEST_CASE("canonical_modulo is stable under reordering") {
  const auto R = fixture::ring(3);
  const Ideal K = fixture::ideal(R, {"x0^2"});
  const std::vector<Polynomial> a{poly("x0^2+x1^2", R), poly("x1*x2", R)}, b{poly("x1*x2", R), poly("x1^2", R)};
  CHECK(canonical_modulo(a, K) == canonical_modulo(b, K));
}

TEST_CASE("regular sequences") {
  const auto R = fixture::ring(3);
  CHECK(is_regular_sequence(Ideal::zero(R), {poly("x0", R), poly("x1", R)}));
  CHECK_FALSE(is_regular_sequence(fixture::ideal(R, {"x0*x1"}), {poly("x0", R)}));
}

TEST_CASE("target descriptions") {
  CHECK(SaturationTarget::irrelevant().describe() == "m");
  CHECK(SaturationTarget::minimal_primes().describe() == "min");
  CHECK(SaturationTarget::unmixed().describe() == "unm");
}
