#include <doctest.h>

#include "repwild/module.hpp"
#include "test_helpers.hpp"

using namespace repwild;
using namespace repwild::testutil;

static FieldPtr Q() { return make_field(FieldDescriptor::rationals()); }

TEST_CASE("validate: constructor output passes, perturbations are caught") {
  auto A = truncated_poly(3, Q());
  CHECK(validate(*A).pass);

  // perturb one structure constant: X*X = X^2 + 1
  auto B = std::make_shared<AlgebraTable>(*A);
  B->sc[1 * 3 + 1].emplace(B->sc[1 * 3 + 1].begin(), 0, B->k().one());
  auto d = validate(*B);
  CHECK(!d.pass);
  bool assoc_witness = false;
  for (const auto& v : d.violations)
    if (v.find("associativity") != std::string::npos) assoc_witness = true;
  CHECK(assoc_witness);

  // wrong unit vector
  auto C = std::make_shared<AlgebraTable>(*A);
  C->unit[0] = C->k().zero();
  auto d2 = validate(*C);
  CHECK(!d2.pass);
  bool unit_witness = false;
  for (const auto& v : d2.violations)
    if (v.find("unit") != std::string::npos) unit_witness = true;
  CHECK(unit_witness);
}

TEST_CASE("opposite and enveloping") {
  auto A = truncated_poly(2, Q());
  auto Aop = opposite(*A);
  CHECK(Aop.sc == A->sc);  // commutative

  auto E = enveloping(*A);
  CHECK(E.dim == 4);
  CHECK(validate(E).pass);

  // the opposite of matrix units is not equal to the original as a table
  auto M = matrix_units(2, Q());
  auto Mop = opposite(*M);
  CHECK(Mop.sc != M->sc);
  CHECK(validate(Mop).pass);
}

TEST_CASE("center") {
  auto T = truncated_poly(4, Q());
  CHECK(center(*T).rows == 4);  // commutative: everything

  auto M = matrix_units(2, Q());
  CHECK(center(*M).rows == 1);  // scalars

  auto P = direct_product(*truncated_poly(2, Q()), *truncated_poly(3, Q()));
  CHECK(validate(*P).pass);
  CHECK(center(*P).rows == 5);  // dim Z(A) + dim Z(A')
}

TEST_CASE("radical examples") {
  auto T = truncated_poly(5, Q());
  auto r = radical(*T);
  CHECK(r.radical.dim() == 4);
  CHECK(r.nilpotency_degree == 5);
  CHECK(radical(*r.semisimple_quotient.table).radical.dim() == 0);

  auto M = matrix_units(2, Q());
  CHECK(radical(*M).radical.dim() == 0);
  CHECK(is_semisimple(*M));

  auto E = std::make_shared<AlgebraTable>(tensor_product(*truncated_poly(2, Q()), *truncated_poly(2, Q())));
  CHECK(radical(*E).radical.dim() == 3);  // x, y, xy

  // finite characteristic: k[Z/3] over F_3 has radical of dim 2
  auto F3 = make_field(FieldDescriptor::prime(3));
  auto G = cyclic_group_algebra(3, F3);
  CHECK(radical(*G).radical.dim() == 2);
  CHECK(!is_semisimple(*G));
  // and over a field of coprime characteristic it is semisimple
  auto F7 = make_field(FieldDescriptor::prime(7));
  CHECK(is_semisimple(*cyclic_group_algebra(3, F7)));
}

TEST_CASE("radical is an ideal with semisimple quotient (zoo sample)") {
  std::vector<AlgebraPtr> sample = {
      truncated_poly(3, Q()),
      elementary_abelian(2, 2, make_field(FieldDescriptor::prime(2))),
      matrix_units(2, Q()),
      upper_triangular2(Q()),
  };
  for (const auto& A : sample) {
    auto r = radical(*A);  // the call itself certifies ideal/nilpotency/quotient
    CHECK(r.radical.dim() <= A->dim);
    if (r.radical.dim() > 0) CHECK(r.nilpotency_degree <= A->dim);
  }
}

TEST_CASE("block decomposition") {
  // group algebra of Z/3 over cyclotomic(3): three one-dimensional blocks
  auto C3 = make_field(FieldDescriptor::cyclotomic(3));
  auto G = cyclic_group_algebra(3, C3);
  auto bd = block_decomposition(G);
  CHECK(bd.blocks.size() == 3);
  for (const auto& b : bd.blocks) CHECK(b.table->dim == 1);
  REQUIRE(bd.principal.has_value());

  // idempotent axioms are certified inside; check completeness by dimension
  int total = 0;
  for (const auto& b : bd.blocks) total += b.table->dim;
  CHECK(total == 3);

  // a local algebra is one block
  auto T = truncated_poly(4, Q());
  CHECK(block_decomposition(T).blocks.size() == 1);

  // direct product of two locals: two blocks
  auto P = direct_product(*truncated_poly(2, Q()), *truncated_poly(3, Q()));
  auto bp = block_decomposition(P);
  CHECK(bp.blocks.size() == 2);
  REQUIRE(bp.principal.has_value());

  // over Q the center of k[Z/3] does not split
  auto GQ = cyclic_group_algebra(3, Q());
  CHECK_THROWS_AS(block_decomposition(GQ), Error);
}

TEST_CASE("tensor products") {
  auto A = truncated_poly(2, Q());
  auto B = truncated_poly(3, Q());
  auto T = tensor_product(*A, *B);
  CHECK(T.dim == 6);
  CHECK(validate(T).pass);
  CHECK(center(T).rows == 6);  // commutative

  // monomial oracle: x^a y^b with truncations
  auto idx = [&](int a, int b) { return a * 3 + b; };
  const Field& f = T.k();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 3; ++d) {
          auto prod = T.basis_product(idx(a, b), idx(c, d));
          for (int t = 0; t < 6; ++t) {
            bool expected = (a + c < 2 && b + d < 3 && t == idx(a + c, b + d));
            CHECK(f.is_zero(prod[t]) == !expected);
          }
        }

  auto F2 = make_field(FieldDescriptor::prime(2));
  CHECK_THROWS_AS(tensor_product(*A, *truncated_poly(2, F2)), Error);

  // associativity up to the canonical reindexing
  auto C = truncated_poly(2, Q());
  auto L = tensor_product(tensor_product(*A, *B), *C);
  auto R = tensor_product(*A, tensor_product(*B, *C));
  CHECK(L.dim == R.dim);
  CHECK(L.sc == R.sc);  // index bijection is the identity for this layout
}

TEST_CASE("self-injectivity") {
  CHECK(is_self_injective(truncated_poly(3, Q())).value);
  CHECK(is_self_injective(matrix_units(2, Q())).value);
  CHECK(!is_self_injective(upper_triangular2(Q())).value);
}

TEST_CASE("blocks of self-injective algebras are self-injective") {
  auto C3 = make_field(FieldDescriptor::cyclotomic(3));
  std::vector<AlgebraPtr> sample = {
      cyclic_group_algebra(3, C3),
      direct_product(*truncated_poly(2, Q()), *truncated_poly(3, Q())),
  };
  for (const auto& A : sample) {
    if (!is_self_injective(A).value) continue;
    for (const auto& b : block_decomposition(A).blocks) CHECK(is_self_injective(b.table).value);
  }
}

TEST_CASE("dim HH^0 equals dim of the center (cross check at algebra level)") {
  // the hochschild module recomputes HH^0 independently; here the center
  auto P = direct_product(*truncated_poly(2, Q()), *truncated_poly(2, Q()));
  CHECK(center(*P).rows == 4);
}
