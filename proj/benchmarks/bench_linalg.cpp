#include <benchmark/benchmark.h>

#include <random>

#include "repwild/linalg.hpp"

using namespace repwild;

static void BM_rref_prime(benchmark::State& state) {
  auto F = make_field(FieldDescriptor::prime(7));
  const int n = (int)state.range(0);
  std::mt19937_64 rng(42);
  Matrix m = Matrix::zero(n, n, *F);
  for (auto& s : m.a) s = F->from_int((long)(rng() % 7));
  for (auto _ : state) {
    auto e = echelon(*F, m);
    benchmark::DoNotOptimize(e.rank);
  }
}
BENCHMARK(BM_rref_prime)->Arg(64)->Arg(128)->Arg(256);

static void BM_rref_rationals(benchmark::State& state) {
  auto F = make_field(FieldDescriptor::rationals());
  const int n = (int)state.range(0);
  std::mt19937_64 rng(42);
  Matrix m = Matrix::zero(n, n, *F);
  for (auto& s : m.a) s = F->from_int((long)(rng() % 9) - 4);
  for (auto _ : state) {
    auto e = echelon(*F, m);
    benchmark::DoNotOptimize(e.rank);
  }
}
BENCHMARK(BM_rref_rationals)->Arg(24)->Arg(48);

static void BM_nullspace_cyclotomic(benchmark::State& state) {
  auto F = make_field(FieldDescriptor::cyclotomic(3));
  const int n = (int)state.range(0);
  std::mt19937_64 rng(7);
  Matrix m = Matrix::zero(n, 2 * n, *F);
  for (auto& s : m.a) s = F->from_int((long)(rng() % 5) - 2);
  for (auto _ : state) {
    auto k = nullspace(*F, m);
    benchmark::DoNotOptimize(k.cols);
  }
}
BENCHMARK(BM_nullspace_cyclotomic)->Arg(16)->Arg(32);
