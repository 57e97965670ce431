#include <doctest.h>

#include <random>

#include "test_helpers.hpp"

using namespace repwild;
using namespace repwild::testutil;

static FieldPtr Q() { return make_field(FieldDescriptor::rationals()); }

TEST_CASE("gamma on reference sequences") {
  auto g1 = gamma_of({1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(*g1.gamma == 1);
  CHECK(g1.mode == GrowthReport::Mode::exact);

  auto g2 = gamma_of({2, 4, 6, 8, 10, 12, 14, 16});
  CHECK(*g2.gamma == 2);
  CHECK(g2.mode == GrowthReport::Mode::exact);

  auto g0 = gamma_of({1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(*g0.gamma == 0);
  CHECK(g0.mode == GrowthReport::Mode::exact);

  auto g3 = gamma_of({1, 3, 6, 10, 15, 21, 28, 36});
  CHECK(*g3.gamma == 3);
  CHECK(g3.mode == GrowthReport::Mode::exact);

  auto gz = gamma_of({0, 0, 0, 0, 0, 0});
  CHECK(*gz.gamma == 0);

  CHECK_THROWS_AS(gamma_of({1, 2, 3}), Error);
}

TEST_CASE("gamma invariances") {
  std::vector<long> base = {1, 3, 6, 10, 15, 21, 28, 36, 45, 55};
  auto g = gamma_of(base);

  // positive scaling
  std::vector<long> scaled;
  for (long x : base) scaled.push_back(7 * x);
  CHECK(*gamma_of(scaled).gamma == *g.gamma);

  // index shift
  std::vector<long> shifted(base.begin() + 2, base.end());
  shifted.push_back(66);
  shifted.push_back(78);
  CHECK(*gamma_of(shifted).gamma == *g.gamma);

  // pointwise sum has the max growth
  std::vector<long> lin = {5, 5, 5, 5, 5, 5, 5, 5, 5, 5};
  std::vector<long> sum;
  for (size_t i = 0; i < base.size(); ++i) sum.push_back(base[i] + lin[i]);
  CHECK(*gamma_of(sum).gamma == std::max(*g.gamma, *gamma_of(lin).gamma));
}

TEST_CASE("exact mode recovers quasi-polynomial growth") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    int c = 1 + (int)(rng() % 4);   // target gamma in 1..4
    int L = 1 + (int)(rng() % 4);   // period up to 4
    // per-residue polynomials of degree c-1 with positive leading coefficient
    std::vector<std::vector<long>> coeff(L, std::vector<long>(c, 0));
    for (int r = 0; r < L; ++r) {
      for (int j = 0; j + 1 < c; ++j) coeff[r][j] = (long)(rng() % 5);
      coeff[r][c - 1] = 1 + (long)(rng() % 3);
    }
    std::vector<long> seq;
    for (int n = 0; n < 24; ++n) {
      long v = 0, pw = 1;
      for (int j = 0; j < c; ++j) {
        v += coeff[n % L][j] * pw;
        pw *= n;
      }
      seq.push_back(v);
    }
    auto g = gamma_of(seq);
    CHECK(g.mode == GrowthReport::Mode::exact);
    CHECK(*g.gamma == c);
  }
}

TEST_CASE("complexity of zoo modules") {
  auto T = truncated_poly(5, Q());
  auto S = std::make_shared<SimpleSet>(simple_modules(T));
  auto cx = complexity(trivial_module(T), 12, S);
  CHECK(*cx.growth.gamma == 1);

  // projective module: complexity 0
  auto cxp = complexity(S->projectives[0], 8, S);
  CHECK(*cxp.growth.gamma == 0);

  auto F2 = make_field(FieldDescriptor::prime(2));
  auto E = elementary_abelian(2, 3, F2);
  auto SE = std::make_shared<SimpleSet>(simple_modules(E));
  auto ce = complexity(trivial_module(E), 12, SE, {.budget_entries = 2000000});
  CHECK(*ce.growth.gamma == 3);
  CHECK(ce.growth.mode == GrowthReport::Mode::exact);
}

TEST_CASE("omega invariance of complexity over a self-injective algebra") {
  auto T = truncated_poly(3, Q());
  auto S = std::make_shared<SimpleSet>(simple_modules(T));
  auto k = trivial_module(T);
  auto R = minimal_resolution(k, 4, S, {.with_maps = true});
  auto Om = materialize_syzygy(R, 1);
  auto c1 = complexity(k, 10, S);
  auto c2 = complexity(Om, 10, S);
  CHECK(*c1.growth.gamma >= 1);  // non-projective over self-injective
  CHECK(*c1.growth.gamma == *c2.growth.gamma);
}

TEST_CASE("consistency chain") {
  auto T = truncated_poly(2, Q());
  auto S = std::make_shared<SimpleSet>(simple_modules(T));
  auto cc = cx_consistency(trivial_module(T), 10, S);
  CHECK(cc.agree);
  CHECK(*cc.variety_dim == 1);

  // semisimple: a simple module has complexity 0 three ways
  auto M = matrix_units(2, Q());
  auto SM = std::make_shared<SimpleSet>(simple_modules(M));
  auto cm = cx_consistency(SM->simples[0], 8, SM);
  CHECK(cm.agree);
  CHECK(*cm.variety_dim == 0);

  // rank-two elementary abelian in characteristic 2
  auto F2 = make_field(FieldDescriptor::prime(2));
  auto E = elementary_abelian(2, 2, F2);
  auto SE = std::make_shared<SimpleSet>(simple_modules(E));
  auto ce = cx_consistency(trivial_module(E), 12, SE, {.budget_entries = 1000000});
  CHECK(ce.agree);
  CHECK(*ce.variety_dim == 2);

  // a non-simple module exercises the general self-Ext path
  auto k = trivial_module(T);
  auto sum = direct_sum(k, regular_module(T));
  auto cs = cx_consistency(sum, 10, S);
  CHECK(cs.agree);
  CHECK(*cs.variety_dim == 1);
}

TEST_CASE("complexity respects blocks") {
  auto P = direct_product(*truncated_poly(2, Q()), *truncated_poly(3, Q()));
  auto bd = block_decomposition(P);
  auto S = std::make_shared<SimpleSet>(simple_modules(P));
  auto k = trivial_module(P);  // lives in the principal block
  auto mem = block_of_module(k, bd);
  REQUIRE(!mem.mixed());

  auto cx_full = complexity(k, 10, S);
  const Block& B = bd.blocks[*mem.block];
  auto kB = restrict_to_block(k, B);
  auto SB = std::make_shared<SimpleSet>(simple_modules(B.table));
  auto cx_block = complexity(kB, 10, SB);
  CHECK(*cx_full.growth.gamma == *cx_block.growth.gamma);
  CHECK(cx_full.resolution_dims == cx_block.resolution_dims);
}

TEST_CASE("tensor additivity of complexity of the trivial module") {
  auto F2 = make_field(FieldDescriptor::prime(2));
  auto A = truncated_poly(2, F2);
  auto B = elementary_abelian(2, 2, F2);
  auto T = std::make_shared<AlgebraTable>(tensor_product(*A, *B));
  auto SA = std::make_shared<SimpleSet>(simple_modules(A));
  auto SB = std::make_shared<SimpleSet>(simple_modules(B));
  auto ST = std::make_shared<SimpleSet>(simple_modules(T));
  long ca = *complexity(trivial_module(A), 12, SA).growth.gamma;
  long cb = *complexity(trivial_module(B), 12, SB, {.budget_entries = 1000000}).growth.gamma;
  long ct = *complexity(trivial_module(T), 12, ST, {.budget_entries = 4000000}).growth.gamma;
  CHECK(ct == ca + cb);
}
