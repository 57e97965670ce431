#include <doctest.h>

#include <algorithm>

#include "test_helpers.hpp"

using namespace repwild;
using namespace repwild::testutil;

static FieldPtr Q() { return make_field(FieldDescriptor::rationals()); }

TEST_CASE("truncated polynomial algebras") {
  auto A = truncated_poly(2, Q());
  CHECK(A->dim == 2);
  CHECK(validate(*A).pass);
  CHECK(is_self_injective(A).value);
  CHECK(block_decomposition(A).blocks.size() == 1);

  auto B = truncated_poly(4, Q());
  CHECK(radical(*B).radical.dim() == 3);
  CHECK(block_decomposition(B).blocks.size() == 1);

  auto S = std::make_shared<SimpleSet>(simple_modules(B));
  CHECK(*complexity(trivial_module(B), 10, S).growth.gamma == 1);
}

TEST_CASE("elementary abelian group algebras") {
  auto F2 = make_field(FieldDescriptor::prime(2));
  auto E = elementary_abelian(2, 3, F2);
  CHECK(E->dim == 8);
  CHECK(validate(*E).pass);
  auto S = std::make_shared<SimpleSet>(simple_modules(E));
  CHECK(*complexity(trivial_module(E), 12, S, {.budget_entries = 2000000}).growth.gamma == 3);

  // rank one is the truncated polynomial algebra
  auto F3 = make_field(FieldDescriptor::prime(3));
  auto E1 = elementary_abelian(3, 1, F3);
  auto T = truncated_poly(3, F3);
  CHECK(E1->dim == T->dim);
  CHECK(E1->sc == T->sc);

  // (2,2): resolution dims 4(n+1)
  auto E2 = elementary_abelian(2, 2, F2);
  auto S2 = std::make_shared<SimpleSet>(simple_modules(E2));
  auto R = minimal_resolution(trivial_module(E2), 9, S2, {.budget_entries = 1000000});
  for (size_t n = 0; n < R.dims.size(); ++n) CHECK(R.dims[n] == 4 * (long)(n + 1));

  CHECK_THROWS_AS(elementary_abelian(2, 2, F3), Error);
}

TEST_CASE("restricted enveloping algebras: commutative cases") {
  auto F3 = make_field(FieldDescriptor::prime(3));
  const Field& f = *F3;

  // abelian, trivial p-map, chi = 0: k[x,y,z]/(x^3, y^3, z^3)
  auto d = abelian_lie_data(F3, 3, false, {});
  auto U = restricted_enveloping(d, F3);
  CHECK(U->dim == 27);
  CHECK(validate(*U).pass);
  CHECK(center(*U).rows == 27);
  CHECK(U->augmentation.has_value());

  // toral p-map, chi = 0, one generator: k[x]/(x^3 - x), split semisimple
  auto dt = abelian_lie_data(F3, 1, true, {});
  auto Ut = restricted_enveloping(dt, F3);
  CHECK(Ut->dim == 3);
  CHECK(is_semisimple(*Ut));
  CHECK(block_decomposition(Ut).blocks.size() == 3);

  // toral with chi != 0: x^3 = x + 1, separable, hence semisimple
  auto dc = abelian_lie_data(F3, 1, true, {f.one()});
  auto Uc = restricted_enveloping(dc, F3);
  CHECK(Uc->dim == 3);
  CHECK(!Uc->augmentation.has_value());  // chi != 0 has no trivial module
  CHECK(is_semisimple(*Uc));

  // trivial p-map with chi != 0 in characteristic p: x^p - c is inseparable,
  // so the algebra is local, never semisimple
  auto F2 = make_field(FieldDescriptor::prime(2));
  auto di = abelian_lie_data(F2, 1, false, {F2->one()});
  auto Ui = restricted_enveloping(di, F2);
  CHECK(Ui->dim == 2);
  CHECK(!is_semisimple(*Ui));
  CHECK(radical(*Ui).radical.dim() == 1);
}

TEST_CASE("restricted enveloping algebra of sl2 at p = 3") {
  auto F3 = make_field(FieldDescriptor::prime(3));
  auto U = restricted_enveloping(sl2_data(F3), F3);
  CHECK(U->dim == 27);
  CHECK(validate(*U).pass);
  CHECK(is_self_injective(U).value);

  auto S = std::make_shared<SimpleSet>(simple_modules(U));
  // restricted simples L(0), L(1), L(2) of dims 1, 2, 3
  std::vector<int> dims;
  for (const auto& s : S->simples) dims.push_back(s.dim);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 2, 3});

  // blocks: the Steinberg block is the 9-dimensional matrix block
  auto bd = block_decomposition(U);
  CHECK(bd.blocks.size() == 2);
  std::vector<int> bdims = {bd.blocks[0].table->dim, bd.blocks[1].table->dim};
  std::sort(bdims.begin(), bdims.end());
  CHECK(bdims == std::vector<int>{9, 18});
  for (const auto& b : bd.blocks) CHECK(is_self_injective(b.table).value);
}

TEST_CASE("invalid restricted data is rejected") {
  auto F3 = make_field(FieldDescriptor::prime(3));
  auto d = sl2_data(F3);
  d.bracket[0][1][1] = F3->one();  // breaks antisymmetry
  CHECK_THROWS_AS(restricted_enveloping(d, F3), Error);

  auto d2 = sl2_data(F3);
  d2.p_power[0][0] = F3->one();  // e^[3] = e is incompatible with ad(e)^3 = 0
  CHECK_THROWS_AS(restricted_enveloping(d2, F3), Error);
}

TEST_CASE("quantum nilpotent algebras") {
  auto C3 = make_field(FieldDescriptor::cyclotomic(3));

  // rank one: exactly the truncated polynomial table
  auto A1 = quantum_nilpotent(QuantumType::A1, 3, C3);
  auto T = truncated_poly(3, C3);
  CHECK(A1->dim == 3);
  CHECK(A1->sc == T->sc);
  CHECK(A1->unit == T->unit);

  auto A11 = quantum_nilpotent(QuantumType::A1xA1, 3, C3);
  CHECK(A11->dim == 9);
  CHECK(validate(*A11).pass);

  // A2: dim = ell^3, associativity is the straightening certificate
  auto A2 = quantum_nilpotent(QuantumType::A2, 3, C3);
  CHECK(A2->dim == 27);
  CHECK(validate(*A2).pass);
  CHECK(is_self_injective(A2).value);
  CHECK(block_decomposition(A2).blocks.size() == 1);

  // ell must be odd and a root must exist
  CHECK_THROWS_AS(quantum_nilpotent(QuantumType::A2, 4, C3), Error);
  auto F5 = make_field(FieldDescriptor::prime(5));
  CHECK_THROWS_AS(quantum_nilpotent(QuantumType::A2, 3, F5), Error);

  // prime-field surrogate: q = 2 in F_7 has order 3
  auto F7 = make_field(FieldDescriptor::prime(7));
  auto A2p = quantum_nilpotent(QuantumType::A2, 3, F7);
  CHECK(A2p->dim == 27);
  CHECK(validate(*A2p).pass);
}

TEST_CASE("smash products") {
  auto C3 = make_field(FieldDescriptor::cyclotomic(3));
  const Field& f = *C3;
  auto R = truncated_poly(3, C3);
  Scalar q = primitive_root_of_unity(f, 3);

  // E -> qE as a diagonal automorphism
  Matrix act = Matrix::zero(3, 3, f);
  for (int i = 0; i < 3; ++i) act.at(i, i) = f.pow(q, i);
  auto A = smash_group(R, {3}, {act});
  CHECK(A->dim == 9);
  CHECK(validate(*A).pass);
  CHECK(A->augmentation.has_value());

  // explicit bijection onto the two-generator table with gE = qEg:
  // basis E^a g^b with (E^a g^b)(E^c g^d) = q^{bc} E^{a+c} g^{b+d}
  auto idx = [&](int a, int b) { return a + 3 * b; };  // matches r_i (x) g_j layout
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          auto prod = A->basis_product(idx(a, b), idx(c, d));
          for (int t = 0; t < 9; ++t) {
            if (a + c < 3 && t == idx(a + c, (b + d) % 3)) {
              CHECK(f.eq(prod[t], f.pow(q, b * c)));
            } else {
              CHECK(f.is_zero(prod[t]));
            }
          }
        }

  // trivial action: the smash is the tensor with the group algebra
  Matrix id3 = Matrix::identity(3, f);
  auto Atriv = smash_group(R, {3}, {id3});
  auto G = cyclic_group_algebra(3, C3);
  auto T = tensor_product(*R, *G);
  CHECK(Atriv->dim == T.dim);
  // same products under the index bijection r*g <-> (r,g)
  for (int r1 = 0; r1 < 3; ++r1)
    for (int g1 = 0; g1 < 3; ++g1)
      for (int r2 = 0; r2 < 3; ++r2)
        for (int g2 = 0; g2 < 3; ++g2) {
          auto ps = Atriv->basis_product(r1 + 3 * g1, r2 + 3 * g2);
          auto pt = T.basis_product(r1 * 3 + g1, r2 * 3 + g2);
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) CHECK(f.eq(ps[a + 3 * b], pt[a * 3 + b]));
        }

  // a non-automorphism is rejected
  Matrix bad = Matrix::zero(3, 3, f);
  bad.at(0, 0) = f.one();
  bad.at(1, 1) = f.one();
  bad.at(2, 2) = f.add(f.one(), f.one());  // X^2 -> 2 X^2 is not multiplicative
  CHECK_THROWS_AS(smash_group(R, {3}, {bad}), Error);

  // order divisibility: characteristic must not divide |G|
  auto F3 = make_field(FieldDescriptor::prime(3));
  auto R3 = truncated_poly(2, F3);
  Matrix id2 = Matrix::identity(2, *F3);
  CHECK_THROWS_AS(smash_group(R3, {3}, {id2}), Error);
}

TEST_CASE("Hecke algebras of type A") {
  auto Qf = Q();
  auto H = hecke_typeA(3, Qf->from_int(5), Qf);
  CHECK(H->dim == 6);
  CHECK(validate(*H).pass);
  CHECK(is_semisimple(*H));
  CHECK(is_self_injective(H).value);

  auto Hm = hecke_typeA(3, Qf->from_int(-1), Qf);
  CHECK(validate(*Hm).pass);
  CHECK(!is_semisimple(*Hm));
  CHECK(is_self_injective(Hm).value);

  // quadratic relation: T_s^2 = (q-1) T_s + q for each generator
  const Field& f = *Qf;
  for (const auto& g : H->generators) {
    auto sq = H->multiply(g, g);
    std::vector<Scalar> expect(H->dim, f.zero());
    for (int i = 0; i < H->dim; ++i)
      expect[i] = f.add(f.mul(f.from_int(4), g[i]), f.mul(f.from_int(5), H->unit[i]));
    CHECK(sq == expect);
  }

  CHECK(hecke_typeA(4, Qf->from_int(5), Qf)->dim == 24);
  CHECK_THROWS_AS(hecke_typeA(7, Qf->from_int(5), Qf), Error);
  CHECK_THROWS_AS(hecke_typeA(3, Qf->zero(), Qf), Error);
}

TEST_CASE("every constructor output validates with a multiplicative augmentation") {
  auto F2 = make_field(FieldDescriptor::prime(2));
  auto F3 = make_field(FieldDescriptor::prime(3));
  auto C3 = make_field(FieldDescriptor::cyclotomic(3));
  std::vector<AlgebraPtr> zoo = {
      truncated_poly(2, Q()),       truncated_poly(5, Q()),
      elementary_abelian(2, 2, F2), restricted_enveloping(sl2_data(F3), F3),
      quantum_nilpotent(QuantumType::A2, 3, C3), hecke_typeA(3, Q()->from_int(5), Q()),
  };
  for (const auto& A : zoo) {
    CAPTURE(A->name);
    CHECK(validate(*A).pass);
    if (A->augmentation) {
      const Field& f = A->k();
      for (int i = 0; i < A->dim; ++i)
        for (int j = 0; j < A->dim; ++j) {
          Scalar lhs = A->aug_of(A->basis_product(i, j));
          Scalar rhs = f.mul((*A->augmentation)[i], (*A->augmentation)[j]);
          CHECK(f.eq(lhs, rhs));
        }
    }
  }
}

TEST_CASE("fg certificates") {
  CHECK(fg_certificate("quantum_nilpotent", 0).status == FgStatus::certified);
  CHECK(fg_certificate("restricted_enveloping", 3).status == FgStatus::certified);
  CHECK(fg_certificate("hecke_typeA", 0).status == FgStatus::certified);
  CHECK(fg_certificate("hecke_typeA", 5).status == FgStatus::unknown);
  CHECK(fg_certificate("elementary_abelian", 2).status == FgStatus::asserted);
  CHECK(fg_certificate("", 0).status == FgStatus::unknown);
  for (const char* fam : {"quantum_nilpotent", "restricted_enveloping", "truncated_poly"})
    CHECK(!fg_certificate(fam, 0).citation.empty());
}
