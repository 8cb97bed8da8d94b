#include <benchmark/benchmark.h>

#include <random>

#include "cyclok2/algebra.hpp"
#include "cyclok2/arith/number_theory.hpp"
#include "cyclok2/cyclo/cyclotomic.hpp"
#include "cyclok2/factorx/fp.hpp"
#include "cyclok2/factorx/q.hpp"
#include "cyclok2/genus/genus.hpp"
#include "cyclok2/k2tame/bruteforce.hpp"
#include "cyclok2/k2tame/nonclosure.hpp"
#include "cyclok2/numfield/numfield.hpp"

using namespace cyclok2;
using algebra::FpPoly;
using algebra::PrimeField;
using M = moebius::Mat2<PrimeField>;

namespace {

FpPoly random_fp(const PrimeField& f, std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<std::uint64_t> coef(0, f.modulus() - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = coef(rng);
  c.back() = 1;
  return FpPoly(f, c);
}

void BM_CyclotomicForm(benchmark::State& st) {
  const PrimeField f3(3);
  std::mt19937_64 rng(0);
  const FpPoly f = random_fp(f3, rng, static_cast<int>(st.range(0)));
  const FpPoly g = random_fp(f3, rng, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cyclo::cyclotomic_form(7, f, g));
}
BENCHMARK(BM_CyclotomicForm)->Arg(2)->Arg(8)->Arg(32);

void BM_FactorFp(benchmark::State& st) {
  const PrimeField f3(3);
  std::mt19937_64 rng(1);
  const FpPoly v = cyclo::cyclotomic_form(7, random_fp(f3, rng, static_cast<int>(st.range(0))),
                                          random_fp(f3, rng, static_cast<int>(st.range(0)) - 1))
                       .value;
  for (auto _ : st) benchmark::DoNotOptimize(factorx::factor_fp(v));
  st.SetLabel("deg " + std::to_string(v.degree()));
}
BENCHMARK(BM_FactorFp)->Arg(2)->Arg(4)->Arg(8);

void BM_CyclotomicResultant(benchmark::State& st) {
  const auto phi = cyclo::cyclotomic_poly(static_cast<std::uint64_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(algebra::resultant(phi, phi.derivative()));
}
BENCHMARK(BM_CyclotomicResultant)->Arg(9)->Arg(27)->Arg(60);

void BM_IrreducibleQ(benchmark::State& st) {
  const auto field = numfield::NumberField::selmer(static_cast<std::uint64_t>(st.range(0)));
  const auto m = field.modulus();
  for (auto _ : st) benchmark::DoNotOptimize(factorx::is_irreducible_q(m));
}
BENCHMARK(BM_IrreducibleQ)->Arg(7)->Arg(13)->Arg(23);

void BM_Norm(benchmark::State& st) {
  const auto field = numfield::NumberField::selmer(static_cast<std::uint64_t>(st.range(0)));
  const auto h = field.generator() + field.from_int(2);
  for (auto _ : st) benchmark::DoNotOptimize(h.norm());
}
BENCHMARK(BM_Norm)->Arg(7)->Arg(13)->Arg(31);

void BM_ReachableSignatures(benchmark::State& st) {
  const PrimeField f3(3);
  const std::vector<M> gens{M::identity(f3)};
  for (auto _ : st) {
    benchmark::DoNotOptimize(k2tame::reachable_signatures(7, 3, gens, static_cast<int>(st.range(0))));
  }
}
BENCHMARK(BM_ReachableSignatures)->Arg(3)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_MixedSearch(benchmark::State& st) {
  const PrimeField f3(3);
  const std::vector<M> gens{M::identity(f3), M::from_ints(f3, 1, 1, 0, 1)};
  const auto jobs = static_cast<unsigned>(st.range(1));
  for (auto _ : st) {
    benchmark::DoNotOptimize(k2tame::reachable_signatures(7, 3, gens, static_cast<int>(st.range(0)), jobs));
  }
}
BENCHMARK(BM_MixedSearch)->Args({6, 1})->Args({6, 2})->Unit(benchmark::kMillisecond);

void BM_Nonclosure(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(k2tame::nonclosure_sequence(9, 3, static_cast<std::size_t>(st.range(0))));
  }
}
BENCHMARK(BM_Nonclosure)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Diophantine(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(arith::diophantine_71(st.range(0)));
}
BENCHMARK(BM_Diophantine)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_GenusExceptions(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(genus::finiteness_exceptions(2, static_cast<std::uint64_t>(st.range(0))));
}
BENCHMARK(BM_GenusExceptions)->Arg(200)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
