#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "symrees/groebner.hpp"

using namespace symrees;

namespace {

RingPtr qq(std::size_t n) { return PolyRing::make(PolyRing::indexed_names("x", n)); }
Polynomial P(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }
std::vector<Polynomial> Ps(std::initializer_list<const char*> xs, const RingPtr& r) {
  std::vector<Polynomial> out;
  for (auto x : xs) out.push_back(P(x, r));
  return out;
}

}  // namespace

TEST_CASE("small bases") {
  auto R = qq(3);
  auto gb = groebner_basis(Ps({"x0"}, R), R->default_order());
  CHECK(gb.generators() == Ps({"x0"}, R));
  gb = groebner_basis(Ps({"x0+x1", "x0-x1"}, R), R->default_order());
  CHECK(gb.generators() == Ps({"x1", "x0"}, R));
  CHECK(gb.normal_form(P("x0^2", R)).is_zero());
  CHECK(gb.normal_form(P("x2", R)) == P("x2", R));
  auto one = groebner_basis(Ps({"x0", "x0+1"}, R), R->default_order());
  CHECK(one.is_unit());
}

TEST_CASE("sub-Hankel membership") {
  auto R = qq(4);
  auto gens = Ps({"x3^2", "x2*x3", "-3*x2^2+2*x1*x3", "x1*x2-x0*x3"}, R);
  auto gb = groebner_basis(gens, R->default_order());
  CHECK(gb.contains(P("x1^2*x2^2", R)));
  CHECK(oracle::member(P("x1^2*x2^2", R), gens));
  CHECK_FALSE(gb.contains(P("x1^3", R)));
  CHECK(gb.verify_buchberger_criterion());
}

TEST_CASE("normal form with rational coefficients") {
  auto R = qq(2);
  auto gb = groebner_basis(Ps({"2*x0-3*x1"}, R), MonomialOrder::lex(2));
  // x0 = 3/2 x1 modulo the ideal.
  CHECK(gb.normal_form(P("x0^2", R)) == P("9/4*x1^2", R));
  CHECK(gb.normal_form(P("1/5*x0", R)) == P("3/10*x1", R));
}

TEST_CASE("normal form is idempotent and stays in the coset") {
  auto R = qq(3);
  std::mt19937_64 rng(5);
  auto gens = std::vector<Polynomial>{oracle::random_form(R, 2, rng), oracle::random_form(R, 2, rng),
                                      oracle::random_form(R, 3, rng)};
  auto gb = groebner_basis(gens, R->default_order());
  for (int it = 0; it < 100; ++it) {
    const auto f = oracle::random_form(R, 1 + it % 4, rng);
    const auto r = gb.normal_form(f);
    CHECK(gb.normal_form(r) == r);
    CHECK(gb.contains(f - r));
    for (const auto& t : r.terms())
      for (const auto& lm : gb.leading_monomials()) CHECK_FALSE(lm.divides(t.monomial));
  }
}

TEST_CASE("membership agrees with the linear-algebra oracle") {
  std::mt19937_64 rng(2024);
  int agreements = 0, total = 0;
  for (int inst = 0; inst < 50; ++inst) {
    const std::size_t n = 2 + inst % 2;
    auto R = qq(n);
    std::vector<Polynomial> gens;
    const int ngens = 1 + inst % 3;
    for (int k = 0; k < ngens; ++k) gens.push_back(oracle::random_form(R, 1 + (inst + k) % 4, rng, -3, 3, 0.5));
    std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
    if (gens.empty()) continue;
    auto gb = groebner_basis(gens, R->default_order());
    CHECK(gb.verify_buchberger_criterion());
    for (int t = 0; t < 4; ++t) {
      const int d = 1 + (inst + t) % 8;
      // Half the probes are ideal elements, half random forms.
      Polynomial f = oracle::random_form(R, d, rng);
      if (t % 2 == 0) {
        f = Polynomial(R);
        for (const auto& g : gens)
          if (g.degree() <= d) f += g * oracle::random_form(R, d - g.degree(), rng);
      }
      ++total;
      agreements += gb.contains(f) == oracle::member(f, gens);
    }
  }
  CHECK(agreements == total);
}

TEST_CASE("prime field bases") {
  auto F = PolyRing::make(PolyRing::indexed_names("x", 3), CoefficientField::prime(31991));
  auto gb = groebner_basis(Ps({"x0^2-x1*x2", "x1^2-x0*x2", "x2^2-x0*x1"}, F), F->default_order());
  CHECK(gb.verify_buchberger_criterion());
  CHECK(gb.contains(P("x0^3-x1^3", F)));
  CHECK_FALSE(gb.contains(P("x0^2", F)));
  CHECK(gb.contains(P("x0*(x0^2-x1*x2)+x2*(x1^2-x0*x2)", F)));
}

TEST_CASE("elimination order") {
  auto R = PolyRing::make({"t", "x0", "y"}, CoefficientField::rationals(), {1, 2});
  auto order = MonomialOrder::block_elimination({1, 2});
  auto gb = groebner_basis(Ps({"t-x0", "y-t"}, R), order);
  bool found = false;
  for (const auto& g : gb.generators())
    if (g.leading_monomial()[0] == 0) {
      found = true;
      CHECK((g == P("y-x0", R) || g == P("x0-y", R)));
    }
  CHECK(found);
}

TEST_CASE("syzygies") {
  auto R = qq(3);
  auto M = FormMatrix::from_rows(R, {Ps({"x0", "x1"}, R)});
  auto S = syzygies(M);
  REQUIRE(S.cols() == 1);
  CHECK((M * S).is_zero());
  const auto col = S.column(0);
  CHECK((col == Ps({"x1", "-x0"}, R) || col == Ps({"-x1", "x0"}, R)));

  // Koszul relations of three variables: three syzygies of degree 1.
  auto M3 = FormMatrix::from_rows(R, {Ps({"x0", "x1", "x2"}, R)});
  auto S3 = syzygies(M3);
  CHECK(S3.cols() == 3);
  CHECK((M3 * S3).is_zero());
  CHECK(S3.column_degrees() == std::vector<int>{1, 1, 1});
}

TEST_CASE("syzygies contain every truncated kernel element") {
  auto R = qq(3);
  std::mt19937_64 rng(99);
  for (int it = 0; it < 5; ++it) {
    auto M = FormMatrix::from_rows(R, {{oracle::random_form(R, 1, rng), oracle::random_form(R, 1, rng),
                                        oracle::random_form(R, 2, rng), oracle::random_form(R, 2, rng)}});
    if (M(0, 0).is_zero() || M(0, 1).is_zero() || M(0, 2).is_zero() || M(0, 3).is_zero()) continue;
    // Give all columns degree 2 so the oracle's uniform-degree kernel applies.
    auto N = FormMatrix::from_rows(R, {{M(0, 0) * P("x0", R), M(0, 1) * P("x1", R), M(0, 2), M(0, 3)}});
    auto S = syzygies(N);
    CHECK((N * S).is_zero());
    std::vector<GroebnerBasis::Vector> cols;
    for (std::size_t j = 0; j < S.cols(); ++j) cols.push_back(S.column(j));
    auto gb = module_groebner_basis(R, N.cols(), cols, R->default_order());
    for (int e = 0; e <= 4; ++e)
      for (const auto& a : oracle::kernel_in_degree(N, e)) CHECK(gb.contains(a));
  }
}

TEST_CASE("syzygies modulo an ideal") {
  auto R = qq(2);
  // (x0) * a in (x0 x1): kernel is generated by x1 modulo (x0 x1).
  auto M = FormMatrix::from_rows(R, {Ps({"x0"}, R)});
  const std::vector<Polynomial> mod = {P("x0*x1", R)};
  auto S = syzygies(M, mod);
  REQUIRE(S.cols() == 1);
  CHECK(S(0, 0) == P("x1", R));
}

TEST_CASE("deadline") {
  auto R = qq(4);
  ScopedDeadline dl(std::chrono::nanoseconds(1));
  std::vector<Polynomial> gens = Ps({"x0^3-x1*x2*x3", "x1^3-x0*x2*x3", "x2^3-x0*x1*x3", "x3^3-x0*x1*x2"}, R);
  CHECK_THROWS_AS(groebner_basis(gens, R->default_order()), DeadlineExceeded);
}
