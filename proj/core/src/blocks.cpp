#include <algorithm>
#include <random>

#include "repwild/algebra.hpp"
#include "split_util.hpp"

namespace repwild {

namespace detail {

// Structure constants of a subalgebra spanned by the given rows (must be
// multiplicatively closed); unit_coords is the subalgebra unit in A coords.
AlgebraPtr subalgebra_table(const AlgebraTable& A, const Matrix& rows,
                            const std::vector<Scalar>& unit_coords, const std::string& name) {
  const Field& f = A.k();
  const int n = rows.rows;
  Matrix basisT = transpose(rows);  // A.dim x n, columns = basis

  auto T = std::make_shared<AlgebraTable>();
  T->field = A.field;
  T->dim = n;
  T->name = name;
  for (int i = 0; i < n; ++i) T->basis.push_back(name + "_" + std::to_string(i));
  T->sc.assign((size_t)n * n, {});

  Matrix prods(A.dim, n * n, f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto p = A.multiply(rows.row(i), rows.row(j));
      for (int t = 0; t < A.dim; ++t) prods.at(t, i * n + j) = p[t];
    }
  auto coords = solve_many(f, basisT, prods);
  check(coords.has_value(), "subalgebra span is not multiplicatively closed");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& out = T->sc[(size_t)i * n + j];
      for (int t = 0; t < n; ++t) {
        Scalar c = coords->at(t, i * n + j);
        if (!f.is_zero(c)) out.emplace_back(t, c);
      }
    }

  auto u = solve(f, basisT, unit_coords);
  check(u.has_value(), "subalgebra unit must lie in the span");
  T->unit = *u;
  return T;
}

// random element of the span with small deterministic coefficients
std::vector<Scalar> seeded_combo(const AlgebraTable& A, const std::vector<std::vector<Scalar>>& vecs,
                                 std::mt19937_64& rng) {
  const Field& f = A.k();
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Scalar> v(A.dim, f.zero());
  for (const auto& w : vecs) {
    int c = coeff(rng);
    if (c == 0) continue;
    Scalar s = f.from_int(c);
    for (int j = 0; j < A.dim; ++j) v[j] = f.add(v[j], f.mul(s, w[j]));
  }
  return v;
}

// Decompose the unit of a commutative (or unital sub-) algebra into primitive
// orthogonal idempotents by CRT splitting along candidate elements.
// expected_count > 0 enforces the split certificate.
std::vector<std::vector<Scalar>> split_unit_completely(
    const AlgebraTable& C, const std::vector<std::vector<Scalar>>& candidates, int expected_count,
    const std::string& what) {
  std::vector<std::vector<Scalar>> done;
  std::vector<std::vector<Scalar>> work = {C.unit};

  while (!work.empty()) {
    auto e = work.back();
    work.pop_back();
    bool split = false;
    for (const auto& cand : candidates) {
      // compress candidate into the corner at e
      auto u = C.multiply(C.multiply(e, cand), e);
      auto parts = split_by_element(C, e, u);
      if (parts.size() >= 2) {
        for (auto& p : parts) work.push_back(std::move(p));
        split = true;
        break;
      }
    }
    if (!split) done.push_back(std::move(e));
  }

  if (expected_count > 0 && (int)done.size() != expected_count)
    fail(Errc::NotSplit, what + ": found " + std::to_string(done.size()) +
                             " summands, expected " + std::to_string(expected_count));
  return done;
}

}  // namespace detail

BlockDecomposition block_decomposition(const AlgebraPtr& A) {
  using namespace detail;
  const Field& f = A->k();

  Matrix zc = center(*A);
  auto Z = subalgebra_table(*A, zc, A->unit, A->name + ".Z");

  auto zrad = radical(*Z);
  const auto& Zbar = zrad.semisimple_quotient;
  const int zdim = Zbar.table->dim;

  // candidates: basis elements first, then seeded random combos
  std::vector<std::vector<Scalar>> cands;
  for (int i = 0; i < zdim; ++i) cands.push_back(Zbar.table->basis_vector(i));
  {
    std::mt19937_64 rng(randomized_check_seed());
    std::vector<std::vector<Scalar>> basisvecs = cands;
    for (int t = 0; t < 3; ++t) cands.push_back(seeded_combo(*Zbar.table, basisvecs, rng));
  }
  // a split semisimple commutative algebra has exactly dim many primitives
  auto prims_bar = split_unit_completely(*Zbar.table, cands, zdim, "center of " + A->name);

  BlockDecomposition out;
  for (const auto& pb : prims_bar) {
    // lift through the nilradical of Z, then map to A coordinates
    auto x = mat_vec(f, Zbar.section, pb);
    auto ez = newton_idempotent(*Z, x);
    std::vector<Scalar> e(A->dim, f.zero());
    for (int i = 0; i < Z->dim; ++i)
      for (int j = 0; j < A->dim; ++j) e[j] = f.add(e[j], f.mul(ez[i], zc.at(i, j)));

    Block b;
    b.idempotent = std::move(e);
    out.blocks.push_back(std::move(b));
  }

  // deterministic order: by first nonzero coordinate of the idempotent
  std::stable_sort(out.blocks.begin(), out.blocks.end(), [&](const Block& x, const Block& y) {
    int ix = 0, iy = 0;
    while (ix < A->dim && f.is_zero(x.idempotent[ix])) ++ix;
    while (iy < A->dim && f.is_zero(y.idempotent[iy])) ++iy;
    return ix < iy;
  });

  // verify idempotent axioms exactly
  std::vector<Scalar> sum(A->dim, f.zero());
  for (size_t i = 0; i < out.blocks.size(); ++i) {
    const auto& ei = out.blocks[i].idempotent;
    auto sq = A->multiply(ei, ei);
    check(sq == ei, "block idempotent fails e^2 = e");
    for (size_t j = 0; j < i; ++j) {
      auto pr = A->multiply(ei, out.blocks[j].idempotent);
      for (const auto& c : pr) check(f.is_zero(c), "block idempotents not orthogonal");
    }
    for (int j = 0; j < A->dim; ++j) sum[j] = f.add(sum[j], ei[j]);
    // centrality
    for (const auto& g : A->generating_set()) {
      auto lg = A->multiply(g, ei), rg = A->multiply(ei, g);
      check(lg == rg, "block idempotent not central");
    }
  }
  check(sum == A->unit, "block idempotents do not sum to 1");

  // block tables
  int dimsum = 0;
  for (size_t i = 0; i < out.blocks.size(); ++i) {
    auto& b = out.blocks[i];
    Matrix img = transpose(column_space(f, A->right_mult(b.idempotent)));
    b.basis = img;  // rows
    auto bt = subalgebra_table(*A, b.basis, b.idempotent, A->name + ".B" + std::to_string(i));
    auto tbl = std::make_shared<AlgebraTable>(*bt);
    if (A->augmentation) {
      Scalar ae = A->aug_of(b.idempotent);
      if (f.is_one(ae)) {
        std::vector<Scalar> aug;
        for (int r = 0; r < b.basis.rows; ++r) aug.push_back(A->aug_of(b.basis.row(r)));
        tbl->augmentation = std::move(aug);
        check(!out.principal.has_value(), "two principal blocks");
        out.principal = (int)i;
      } else {
        check(f.is_zero(ae), "augmentation of a block idempotent must be 0 or 1");
      }
    }
    // generators: compressions of the algebra generators
    if (!A->generators.empty()) {
      Matrix basisT = transpose(b.basis);
      for (const auto& g : A->generators) {
        auto ge = A->multiply(g, b.idempotent);
        auto coords = solve(f, basisT, ge);
        check(coords.has_value(), "generator compression must lie in the block");
        tbl->generators.push_back(*coords);
      }
    }
    b.table = tbl;
    dimsum += tbl->dim;
  }
  check(dimsum == A->dim, "block dimensions must sum to dim A");
  if (A->augmentation) check(out.principal.has_value(), "augmented algebra needs a principal block");
  return out;
}

}  // namespace repwild
