#include <benchmark/benchmark.h>

#include "repwild/growth.hpp"
#include "repwild/zoo.hpp"

using namespace repwild;

static void BM_resolution_elementary_abelian(benchmark::State& state) {
  auto F2 = make_field(FieldDescriptor::prime(2));
  auto E = elementary_abelian(2, (int)state.range(0), F2);
  auto S = std::make_shared<SimpleSet>(simple_modules(E));
  auto k = trivial_module(E);
  for (auto _ : state) {
    auto R = minimal_resolution(k, 10, S, {.budget_entries = 8000000});
    benchmark::DoNotOptimize(R.dims.back());
  }
}
BENCHMARK(BM_resolution_elementary_abelian)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_resolution_quantum_prime(benchmark::State& state) {
  auto F7 = make_field(FieldDescriptor::prime(7));
  auto A = quantum_nilpotent(QuantumType::A2, 3, F7);
  auto S = std::make_shared<SimpleSet>(simple_modules(A));
  auto k = trivial_module(A);
  for (auto _ : state) {
    auto R = minimal_resolution(k, (int)state.range(0), S, {.budget_entries = 8000000});
    benchmark::DoNotOptimize(R.dims.back());
  }
}
BENCHMARK(BM_resolution_quantum_prime)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_radical_sl2(benchmark::State& state) {
  auto F3 = make_field(FieldDescriptor::prime(3));
  auto U = restricted_enveloping(sl2_data(F3), F3);
  for (auto _ : state) {
    auto r = radical(*U);
    benchmark::DoNotOptimize(r.radical.dim());
  }
}
BENCHMARK(BM_radical_sl2)->Unit(benchmark::kMillisecond);
