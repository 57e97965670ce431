#include <doctest.h>

#include <random>

#include "repwild/field.hpp"

using namespace repwild;

TEST_CASE("prime field arithmetic") {
  auto F = make_field(FieldDescriptor::prime(5));
  CHECK(F->eq(F->mul(F->from_int(2), F->from_int(3)), F->one()));
  CHECK(F->eq(F->inv(F->from_int(2)), F->from_int(3)));
  CHECK(F->characteristic() == 5);
  CHECK_THROWS_AS(make_field(FieldDescriptor::prime(6)), Error);
}

TEST_CASE("cyclotomic field: z has order ell") {
  auto F = make_field(FieldDescriptor::cyclotomic(3));
  Scalar z = F->generator();
  CHECK(F->is_one(F->pow(z, 3)));
  CHECK(!F->is_one(z));
  CHECK(!F->is_one(F->pow(z, 2)));
  // z^2 + z + 1 = 0
  Scalar s = F->add(F->add(F->pow(z, 2), z), F->one());
  CHECK(F->is_zero(s));
}

TEST_CASE("finite extension F_4") {
  auto F = make_field(FieldDescriptor::finite_extension(2, {1, 1, 1}));
  CHECK(*F->size() == 4);
  Scalar t = F->generator();
  // t^2 = t + 1
  CHECK(F->eq(F->mul(t, t), F->add(t, F->one())));
  // reducible modulus rejected: t^2 + 1 = (t+1)^2 over F_2
  CHECK_THROWS_AS(make_field(FieldDescriptor::finite_extension(2, {1, 0, 1})), Error);
}

TEST_CASE("primitive roots of unity") {
  auto C3 = make_field(FieldDescriptor::cyclotomic(3));
  CHECK(primitive_root_of_unity(*C3, 3) == C3->generator());

  // brute-force oracle over F_7: smallest residue of order exactly 3
  auto F7 = make_field(FieldDescriptor::prime(7));
  long expected = 0;
  for (long a = 1; a < 7 && expected == 0; ++a) {
    long x = a % 7, ord = 1;
    while (x != 1) {
      x = x * a % 7;
      ++ord;
    }
    if (ord == 3) expected = a;
  }
  CHECK(expected == 2);
  CHECK(primitive_root_of_unity(*F7, 3) == F7->from_int(expected));

  auto F5 = make_field(FieldDescriptor::prime(5));
  CHECK_THROWS_AS(primitive_root_of_unity(*F5, 3), Error);

  auto Q = make_field(FieldDescriptor::rationals());
  CHECK(Q->eq(primitive_root_of_unity(*Q, 2), Q->from_int(-1)));
  CHECK_THROWS_AS(primitive_root_of_unity(*Q, 3), Error);

  // exactness of the returned order
  for (long ell : {2L, 3L, 6L}) {
    auto F = make_field(FieldDescriptor::prime(7));
    Scalar q = primitive_root_of_unity(*F, ell);
    CHECK(F->is_one(F->pow(q, ell)));
    for (long m = 1; m < ell; ++m) CHECK(!F->is_one(F->pow(q, m)));
  }
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937_64 rng(12345);
  std::vector<FieldPtr> fields = {
      make_field(FieldDescriptor::rationals()), make_field(FieldDescriptor::prime(7)),
      make_field(FieldDescriptor::cyclotomic(5)),
      make_field(FieldDescriptor::finite_extension(3, {1, 0, 1}))};
  for (const auto& F : fields) {
    auto rnd = [&]() {
      if (F->kind() == FieldKind::cyclotomic) {
        Scalar s = F->zero();
        for (int i = 0; i < F->degree(); ++i) {
          long c = (long)(rng() % 7) - 3;
          s = F->add(s, F->mul(F->from_int(c), F->pow(F->generator(), i)));
        }
        return s;
      }
      if (F->kind() == FieldKind::rationals) {
        long n = (long)(rng() % 19) - 9, d = 1 + (long)(rng() % 7);
        return Scalar(Rat(n, d));
      }
      auto sz = F->size();
      return F->element_at((long)(rng() % *sz));
    };
    for (int t = 0; t < 50; ++t) {
      Scalar a = rnd(), b = rnd(), c = rnd();
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      if (!F->is_zero(a)) CHECK(F->is_one(F->mul(a, F->inv(a))));
      CHECK(F->add(a, F->neg(a)) == F->zero());
    }
  }
}

TEST_CASE("rational canonical form is unique") {
  Rat a(2, 4), b(1, 2), c(-3, -6);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(Rat::from_string("7/21") == Rat(1, 3));
  CHECK(Rat(1, -2).str() == "-1/2");
  CHECK(Rat(4, 2).str() == "2");
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(3) == std::vector<mpz_class>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(cyclotomic_polynomial(5) == std::vector<mpz_class>{1, 1, 1, 1, 1});
}
