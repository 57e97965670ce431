#include "repwild/algebra.hpp"

#include <algorithm>
#include <random>

namespace repwild {

uint64_t& randomized_check_seed() {
  static uint64_t seed = kDefaultSeed;
  return seed;
}

std::vector<Scalar> AlgebraTable::basis_vector(int i) const {
  std::vector<Scalar> v(dim, k().zero());
  v[i] = k().one();
  return v;
}

std::vector<Scalar> AlgebraTable::basis_product(int i, int j) const {
  std::vector<Scalar> v(dim, k().zero());
  for (const auto& [t, c] : sc[(size_t)i * dim + j]) v[t] = c;
  return v;
}

std::vector<Scalar> AlgebraTable::multiply(const std::vector<Scalar>& a,
                                           const std::vector<Scalar>& b) const {
  const Field& f = k();
  std::vector<Scalar> r(dim, f.zero());
  for (int i = 0; i < dim; ++i) {
    if (f.is_zero(a[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (f.is_zero(b[j])) continue;
      Scalar ab = f.mul(a[i], b[j]);
      for (const auto& [t, c] : sc[(size_t)i * dim + j]) r[t] = f.add(r[t], f.mul(ab, c));
    }
  }
  return r;
}

Matrix AlgebraTable::left_mult_basis(int i) const {
  const Field& f = k();
  Matrix m = Matrix::zero(dim, dim, f);
  for (int j = 0; j < dim; ++j)
    for (const auto& [t, c] : sc[(size_t)i * dim + j]) m.at(t, j) = c;
  return m;
}

Matrix AlgebraTable::right_mult_basis(int i) const {
  const Field& f = k();
  Matrix m = Matrix::zero(dim, dim, f);
  for (int j = 0; j < dim; ++j)
    for (const auto& [t, c] : sc[(size_t)j * dim + i]) m.at(t, j) = c;
  return m;
}

Matrix AlgebraTable::left_mult(const std::vector<Scalar>& a) const {
  const Field& f = k();
  Matrix m = Matrix::zero(dim, dim, f);
  for (int i = 0; i < dim; ++i) {
    if (f.is_zero(a[i])) continue;
    for (int j = 0; j < dim; ++j)
      for (const auto& [t, c] : sc[(size_t)i * dim + j])
        m.at(t, j) = f.add(m.at(t, j), f.mul(a[i], c));
  }
  return m;
}

Matrix AlgebraTable::right_mult(const std::vector<Scalar>& a) const {
  const Field& f = k();
  Matrix m = Matrix::zero(dim, dim, f);
  for (int i = 0; i < dim; ++i) {
    if (f.is_zero(a[i])) continue;
    for (int j = 0; j < dim; ++j)
      for (const auto& [t, c] : sc[(size_t)j * dim + i])
        m.at(t, j) = f.add(m.at(t, j), f.mul(a[i], c));
  }
  return m;
}

Scalar AlgebraTable::aug_of(const std::vector<Scalar>& a) const {
  check(augmentation.has_value(), "algebra is not augmented");
  const Field& f = k();
  Scalar s = f.zero();
  for (int i = 0; i < dim; ++i) s = f.add(s, f.mul((*augmentation)[i], a[i]));
  return s;
}

std::vector<std::vector<Scalar>> AlgebraTable::generating_set() const {
  if (!generators.empty()) return generators;
  std::vector<std::vector<Scalar>> g;
  g.reserve(dim);
  for (int i = 0; i < dim; ++i) g.push_back(basis_vector(i));
  return g;
}

namespace {

bool vec_eq(const Field& f, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

}  // namespace

Diagnostics validate(const AlgebraTable& A) {
  Diagnostics d;
  const Field& f = A.k();
  auto bad = [&](const std::string& s) {
    d.pass = false;
    d.violations.push_back(s);
  };

  if ((int)A.unit.size() != A.dim) {
    bad("unit vector has wrong length");
    return d;
  }

  // unit axiom
  Matrix L1 = A.left_mult(A.unit), R1 = A.right_mult(A.unit);
  Matrix I = Matrix::identity(A.dim, f);
  if (!mat_eq(L1, I)) bad("unit fails 1*e_i = e_i");
  if (!mat_eq(R1, I)) bad("unit fails e_i*1 = e_i");

  // associativity
  auto assoc_check = [&](int i, int j, int t) {
    auto ij = A.basis_product(i, j);
    auto jt = A.basis_product(j, t);
    auto lhs = A.multiply(ij, A.basis_vector(t));
    auto rhs = A.multiply(A.basis_vector(i), jt);
    if (!vec_eq(f, lhs, rhs))
      bad("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
          std::to_string(t) + ")");
  };
  if (A.dim <= 40) {
    for (int i = 0; i < A.dim && d.violations.size() < 8; ++i)
      for (int j = 0; j < A.dim && d.violations.size() < 8; ++j)
        for (int t = 0; t < A.dim && d.violations.size() < 8; ++t) assoc_check(i, j, t);
  } else {
    std::mt19937_64 rng(randomized_check_seed());
    std::uniform_int_distribution<int> pick(0, A.dim - 1);
    for (int n = 0; n < 200 && d.violations.size() < 8; ++n)
      assoc_check(pick(rng), pick(rng), pick(rng));
  }

  // augmentation is an algebra map with eps(1) = 1
  if (A.augmentation) {
    if (!f.is_one(A.aug_of(A.unit))) bad("augmentation fails eps(1) = 1");
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j) {
        Scalar lhs = A.aug_of(A.basis_product(i, j));
        Scalar rhs = f.mul((*A.augmentation)[i], (*A.augmentation)[j]);
        if (!f.eq(lhs, rhs)) {
          bad("augmentation not multiplicative at (" + std::to_string(i) + "," +
              std::to_string(j) + ")");
          if (d.violations.size() >= 8) goto aug_done;
        }
      }
  aug_done:;
  }

  // generator hint: span of words in the generators (with 1) must be everything
  if (!A.generators.empty()) {
    Matrix span = Matrix::zero(1 + (int)A.generators.size(), A.dim, f);
    for (int j = 0; j < A.dim; ++j) span.at(0, j) = A.unit[j];
    for (size_t g = 0; g < A.generators.size(); ++g)
      for (int j = 0; j < A.dim; ++j) span.at(1 + (int)g, j) = A.generators[g][j];
    Matrix basis = row_space(f, span);
    for (;;) {
      std::vector<std::vector<Scalar>> next;
      for (int r = 0; r < basis.rows; ++r)
        for (const auto& g : A.generators) next.push_back(A.multiply(basis.row(r), g));
      Matrix all = basis;
      for (auto& v : next) {
        Matrix rowm(1, A.dim, f.zero());
        for (int j = 0; j < A.dim; ++j) rowm.at(0, j) = v[j];
        all = vcat(all, rowm);
      }
      Matrix nb = row_space(f, all);
      if (nb.rows == basis.rows) break;
      basis = std::move(nb);
    }
    if (basis.rows != A.dim) bad("generator hint does not generate the algebra");
  }

  return d;
}

AlgebraTable opposite(const AlgebraTable& A) {
  AlgebraTable B = A;
  B.name = A.name + "^op";
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) B.sc[(size_t)i * A.dim + j] = A.sc[(size_t)j * A.dim + i];
  return B;
}

AlgebraTable tensor_product(const AlgebraTable& A, const AlgebraTable& B) {
  if (!(A.field->descriptor() == B.field->descriptor()))
    fail(Errc::FieldMismatch, "tensor factors over different fields");
  const Field& f = A.k();
  AlgebraTable T;
  T.field = A.field;
  T.dim = A.dim * B.dim;
  T.name = "(" + A.name + ")x(" + B.name + ")";
  T.basis.reserve(T.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j) T.basis.push_back(A.basis[i] + "*" + B.basis[j]);

  auto idx = [&](int i, int j) { return i * B.dim + j; };
  T.sc.assign((size_t)T.dim * T.dim, {});
  for (int i1 = 0; i1 < A.dim; ++i1)
    for (int j1 = 0; j1 < B.dim; ++j1)
      for (int i2 = 0; i2 < A.dim; ++i2)
        for (int j2 = 0; j2 < B.dim; ++j2) {
          auto& out = T.sc[(size_t)idx(i1, j1) * T.dim + idx(i2, j2)];
          for (const auto& [ka, ca] : A.sc[(size_t)i1 * A.dim + i2])
            for (const auto& [kb, cb] : B.sc[(size_t)j1 * B.dim + j2]) {
              Scalar c = f.mul(ca, cb);
              if (!f.is_zero(c)) out.emplace_back(idx(ka, kb), c);
            }
          std::sort(out.begin(), out.end(),
                    [](const auto& x, const auto& y) { return x.first < y.first; });
        }

  T.unit.assign(T.dim, f.zero());
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j) T.unit[idx(i, j)] = f.mul(A.unit[i], B.unit[j]);

  if (A.augmentation && B.augmentation) {
    std::vector<Scalar> aug(T.dim, f.zero());
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < B.dim; ++j)
        aug[idx(i, j)] = f.mul((*A.augmentation)[i], (*B.augmentation)[j]);
    T.augmentation = std::move(aug);
  }

  // generators: g (x) 1 and 1 (x) g
  auto kron = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> v(T.dim, f.zero());
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < B.dim; ++j) v[idx(i, j)] = f.mul(a[i], b[j]);
    return v;
  };
  if (!A.generators.empty() && !B.generators.empty()) {
    for (const auto& g : A.generators) T.generators.push_back(kron(g, B.unit));
    for (const auto& g : B.generators) T.generators.push_back(kron(A.unit, g));
  }
  return T;
}

AlgebraTable enveloping(const AlgebraTable& A) {
  AlgebraTable E = tensor_product(A, opposite(A));
  E.name = A.name + "^e";
  E.augmentation.reset();  // not meaningful for the enveloping algebra
  return E;
}

Matrix center(const AlgebraTable& A) {
  const Field& f = A.k();
  // z central iff (L_g - R_g) z = 0 for a generating set g
  auto gens = A.generating_set();
  Matrix sys = Matrix::zero(0, A.dim, f);
  for (const auto& g : gens) {
    Matrix d = mat_sub(f, A.left_mult(g), A.right_mult(g));
    sys = sys.rows == 0 ? d : vcat(sys, d);
  }
  Matrix ker = nullspace(f, sys);  // columns
  return transpose(ker);           // rows = canonical center basis
}

QuotientAlgebra quotient_by_ideal(const AlgebraTable& A, const Ideal& I) {
  const Field& f = A.k();
  const int d = A.dim, r = I.basis.rows;
  Echelon e = echelon(f, I.basis);
  check(e.rank == r, "ideal basis must be independent");

  // coset representatives: standard basis vectors at non-pivot coordinates
  std::vector<int> is_pivot(d, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<int> reps;
  for (int c = 0; c < d; ++c)
    if (!is_pivot[c]) reps.push_back(c);
  const int q = (int)reps.size();

  // projection: reduce mod I, then read coordinates at rep positions
  auto project = [&](std::vector<Scalar> v) {
    v = reduce_mod_rows(f, e, std::move(v));
    std::vector<Scalar> out(q, f.zero());
    for (int i = 0; i < q; ++i) out[i] = v[reps[i]];
    return out;
  };

  auto Q = std::make_shared<AlgebraTable>();
  Q->field = A.field;
  Q->dim = q;
  Q->name = A.name + "/rad";
  Q->basis.reserve(q);
  for (int i = 0; i < q; ++i) Q->basis.push_back(A.basis[reps[i]]);
  Q->sc.assign((size_t)q * q, {});
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      auto prod = project(A.basis_product(reps[i], reps[j]));
      auto& out = Q->sc[(size_t)i * q + j];
      for (int t = 0; t < q; ++t)
        if (!f.is_zero(prod[t])) out.emplace_back(t, prod[t]);
    }
  Q->unit = project(A.unit);
  if (A.augmentation) {
    // augmentation descends only if it kills the ideal
    bool kills = true;
    for (int i = 0; i < r && kills; ++i)
      if (!f.is_zero(A.aug_of(I.basis.row(i)))) kills = false;
    if (kills) {
      std::vector<Scalar> aug(q, f.zero());
      for (int i = 0; i < q; ++i) aug[i] = (*A.augmentation)[reps[i]];
      Q->augmentation = std::move(aug);
    }
  }
  if (!A.generators.empty()) {
    for (const auto& g : A.generators) Q->generators.push_back(project(g));
  }

  QuotientAlgebra out;
  out.table = Q;
  out.projection = Matrix::zero(q, d, f);
  for (int j = 0; j < d; ++j) {
    auto pj = project(A.basis_vector(j));
    for (int i = 0; i < q; ++i) out.projection.at(i, j) = pj[i];
  }
  out.section = Matrix::zero(d, q, f);
  for (int i = 0; i < q; ++i) out.section.at(reps[i], i) = f.one();
  return out;
}

bool is_semisimple(const AlgebraTable& A) { return radical(A).radical.dim() == 0; }

}  // namespace repwild
