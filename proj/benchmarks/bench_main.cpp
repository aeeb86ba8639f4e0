#include <benchmark/benchmark.h>

#include "symrees/cremona.hpp"
#include "symrees/groebner.hpp"
#include "symrees/rees.hpp"
#include "symrees/symbolic.hpp"

using namespace symrees;

namespace {

Ideal ideal_of(std::size_t n, std::initializer_list<const char*> gens, CoefficientField field = CoefficientField::rationals()) {
  const auto R = PolyRing::make(PolyRing::indexed_names("x", n), field);
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, R));
  return Ideal(R, ps);
}

Ideal sub_hankel(CoefficientField field = CoefficientField::rationals()) {
  return ideal_of(4, {"x3^2", "x2*x3", "-3*x2^2 + 2*x1*x3", "x1*x2 - x0*x3"}, field);
}

Ideal polar_quartic() {
  return ideal_of(4, {"-x2^2*x3", "2*x1*x2*x3", "x1^2*x3 - 2*x0*x2*x3", "x1^2*x2 - x0*x2^2"});
}

// Cyclic-4, a standard non-homogeneous Groebner workload.
void BM_groebner_cyclic4(benchmark::State& state) {
  const Ideal I = ideal_of(4, {"x0+x1+x2+x3", "x0*x1+x1*x2+x2*x3+x3*x0", "x0*x1*x2+x1*x2*x3+x2*x3*x0+x3*x0*x1",
                               "x0*x1*x2*x3-1"});
  const auto order = MonomialOrder::grevlex(4);
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(I.generators(), order).size());
}
BENCHMARK(BM_groebner_cyclic4)->Unit(benchmark::kMillisecond);

void BM_groebner_power(benchmark::State& state) {
  const Ideal I = polar_quartic();
  const Ideal P = power(I, static_cast<int>(state.range(0)));
  const auto order = MonomialOrder::grevlex(4);
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(P.generators(), order).size());
}
BENCHMARK(BM_groebner_power)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_rees_ideal(benchmark::State& state) {
  const Ideal I = state.range(0) == 0 ? sub_hankel() : polar_quartic();
  for (auto _ : state) benchmark::DoNotOptimize(rees_ideal(Ideal(I.ring(), I.generators())).ideal.size());
}
BENCHMARK(BM_rees_ideal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_inverse(benchmark::State& state) {
  const Ideal I = state.range(0) == 0 ? sub_hankel() : sub_hankel(CoefficientField::prime(31991));
  for (auto _ : state) benchmark::DoNotOptimize(is_birational(Ideal(I.ring(), I.generators())).birational);
}
BENCHMARK(BM_inverse)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_symbolic_power(benchmark::State& state) {
  const Ideal I = sub_hankel();
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SymbolicFiltration F(Ideal(I.ring(), I.generators()));
    benchmark::DoNotOptimize(F.symbolic(l).size());
  }
}
BENCHMARK(BM_symbolic_power)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
