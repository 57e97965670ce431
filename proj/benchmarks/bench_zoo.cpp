#include <benchmark/benchmark.h>

#include "repwild/zoo.hpp"

using namespace repwild;

static void BM_build_hecke(benchmark::State& state) {
  auto Q = make_field(FieldDescriptor::rationals());
  for (auto _ : state) {
    auto H = hecke_typeA((int)state.range(0), Q->from_int(5), Q);
    benchmark::DoNotOptimize(H->dim);
  }
}
BENCHMARK(BM_build_hecke)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_build_quantum_A2(benchmark::State& state) {
  auto C3 = make_field(FieldDescriptor::cyclotomic(3));
  for (auto _ : state) {
    auto A = quantum_nilpotent(QuantumType::A2, 3, C3);
    benchmark::DoNotOptimize(A->dim);
  }
}
BENCHMARK(BM_build_quantum_A2)->Unit(benchmark::kMillisecond);

static void BM_build_restricted_sl2(benchmark::State& state) {
  auto F3 = make_field(FieldDescriptor::prime(3));
  for (auto _ : state) {
    auto U = restricted_enveloping(sl2_data(F3), F3);
    benchmark::DoNotOptimize(U->dim);
  }
}
BENCHMARK(BM_build_restricted_sl2)->Unit(benchmark::kMillisecond);
