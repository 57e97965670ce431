#include <doctest.h>

#include "repwild/hochschild.hpp"
#include "test_helpers.hpp"

using namespace repwild;
using namespace repwild::testutil;

static FieldPtr Q() { return make_field(FieldDescriptor::rationals()); }

TEST_CASE("bimodule structure") {
  auto A = truncated_poly(3, Q());
  auto B = as_bimodule(A);
  CHECK(B.as_module.dim == 3);
  CHECK(B.env->dim == 9);
  CHECK(validate_module(B.as_module).pass);
  // 1 (x) 1 acts as the identity
  CHECK(mat_eq(B.as_module.act(B.env->unit), Matrix::identity(3, A->k())));
  // commutative algebra: a (x) 1 and 1 (x) a act alike
  const Field& f = A->k();
  for (int i = 0; i < 3; ++i) {
    std::vector<Scalar> left(9, f.zero()), right(9, f.zero());
    for (int j = 0; j < 3; ++j) {
      left[i * 3 + j] = A->unit[j];
      right[j * 3 + i] = A->unit[j];
    }
    CHECK(mat_eq(B.as_module.act(left), B.as_module.act(right)));
  }
}

TEST_CASE("hochschild dims of the smallest truncated polynomial algebra") {
  auto A = truncated_poly(2, Q());
  auto t = hh_dims(A, 4, {.budget_entries = 500000});
  CHECK(t.dims == std::vector<long>{2, 1, 1, 1, 1});

  auto o = bar_hh_oracle(A, 4);
  CHECK(o.dims == t.dims);
}

TEST_CASE("bar oracle basics") {
  // the ground field itself: dims [1,0,0,0]
  auto one = std::make_shared<AlgebraTable>();
  one->field = Q();
  one->dim = 1;
  one->name = "k";
  one->basis = {"1"};
  one->sc.assign(1, {{0, one->k().one()}});
  one->unit = {one->k().one()};
  auto o = bar_hh_oracle(one, 3);
  CHECK(o.dims == std::vector<long>{1, 0, 0, 0});

  // HH^0 from the oracle equals the center dimension
  auto A = truncated_poly(3, Q());
  auto oa = bar_hh_oracle(A, 2);
  CHECK(oa.dims[0] == center(*A).rows);

  // size guard
  auto big = truncated_poly(7, Q());
  CHECK_THROWS_AS(bar_hh_oracle(big, 4), Error);
}

TEST_CASE("oracle agreement on a second algebra") {
  auto A = truncated_poly(3, Q());
  auto t = hh_dims(A, 3, {.budget_entries = 500000});
  auto o = bar_hh_oracle(A, 3);
  CHECK(t.dims == o.dims);
}

TEST_CASE("HH^0 equals the center dimension across the zoo") {
  auto F3 = make_field(FieldDescriptor::prime(3));
  auto C3 = make_field(FieldDescriptor::cyclotomic(3));
  std::vector<AlgebraPtr> sample = {
      truncated_poly(2, Q()),
      truncated_poly(4, Q()),
      cyclic_group_algebra(3, F3),
      cyclic_group_algebra(3, C3),
      matrix_units(2, Q()),
      upper_triangular2(Q()),
  };
  for (const auto& A : sample) CHECK(hh0_dim(A) == center(*A).rows);
}

TEST_CASE("semisimple split algebras have no higher Hochschild cohomology") {
  auto M = matrix_units(2, Q());
  auto t = hh_dims(M, 3, {.budget_entries = 2000000});
  CHECK(t.dims[0] == 1);
  for (size_t i = 1; i < t.dims.size(); ++i) CHECK(t.dims[i] == 0);
}

TEST_CASE("block additivity of Hochschild dims") {
  auto A = truncated_poly(2, Q());
  auto B = truncated_poly(3, Q());
  auto P = direct_product(*A, *B);
  auto ta = hh_dims(A, 3, {.budget_entries = 500000});
  auto tb = hh_dims(B, 3, {.budget_entries = 500000});
  auto tp = hh_dims(P, 3, {.budget_entries = 4000000});
  for (size_t n = 0; n < tp.dims.size(); ++n) CHECK(tp.dims[n] == ta.dims[n] + tb.dims[n]);
}

TEST_CASE("graded commutativity of low degree HH products") {
  auto A = truncated_poly(2, Q());
  auto r = hh_product_check(A, 3, {.budget_entries = 500000});
  CHECK(r.graded_commutative);
  CHECK(r.pairs_checked > 0);
  CHECK(r.witnesses.empty());
}
