#include <random>

#include "repwild/module.hpp"
#include "split_util.hpp"

namespace repwild {

namespace {

using detail::split_unit_completely;

std::vector<std::vector<Scalar>> corner_candidates(const AlgebraTable& B) {
  const Field& f = B.k();
  std::vector<std::vector<Scalar>> cands;
  for (const auto& g : B.generators) cands.push_back(g);
  for (int i = 0; i < B.dim; ++i) cands.push_back(B.basis_vector(i));
  int added = 0;
  for (int i = 0; i < B.dim && added < 64; ++i)
    for (int j = 0; j < B.dim && added < 64; ++j) {
      cands.push_back(B.basis_product(i, j));
      ++added;
    }
  std::mt19937_64 rng(randomized_check_seed());
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Scalar> v(B.dim, f.zero());
    for (int i = 0; i < B.dim; ++i) {
      int c = coeff(rng);
      if (c != 0) v[i] = f.from_int(c);
    }
    cands.push_back(std::move(v));
  }
  return cands;
}

int corner_dim(const AlgebraTable& B, const std::vector<Scalar>& e) {
  const Field& f = B.k();
  Matrix m = mat_mul(f, B.left_mult(e), B.right_mult(e));
  return rank_of(f, m);
}

}  // namespace

SimpleSet simple_modules(const AlgebraPtr& A) {
  const Field& f = A->k();
  auto rad = radical(*A);
  const auto& Abar = rad.semisimple_quotient;
  const AlgebraPtr& Q = Abar.table;

  auto blocks = block_decomposition(Q);

  SimpleSet out;
  out.A = A;
  out.radical_rows = rad.radical.basis;
  out.radical_nilpotency = rad.nilpotency_degree;

  // primitives per Wedderburn block, in Q coordinates, plus class indices
  std::vector<std::vector<Scalar>> prim_bar;
  std::vector<int> prim_class;
  std::vector<std::vector<Scalar>> class_rep_bar;

  for (size_t bi = 0; bi < blocks.blocks.size(); ++bi) {
    const Block& blk = blocks.blocks[bi];
    const AlgebraTable& B = *blk.table;
    auto prims = split_unit_completely(B, corner_candidates(B), -1,
                                       "block of " + Q->name);
    for (const auto& p : prims)
      if (corner_dim(B, p) != 1)
        fail(Errc::NotSplit, "corner of a primitive idempotent has dimension > 1 in " + Q->name);
    check(!prims.empty(), "block must contain a primitive idempotent");
    // expect n primitives in an n^2-dimensional split simple block
    check((int)prims.size() * (int)prims.size() == B.dim,
          "split simple block must have dim = (number of primitives)^2");

    for (size_t pj = 0; pj < prims.size(); ++pj) {
      std::vector<Scalar> v(Q->dim, f.zero());
      for (int i = 0; i < B.dim; ++i)
        for (int j = 0; j < Q->dim; ++j) v[j] = f.add(v[j], f.mul(prims[pj][i], blk.basis.at(i, j)));
      if (pj == 0) class_rep_bar.push_back(v);
      prim_bar.push_back(std::move(v));
      prim_class.push_back((int)bi);
    }
  }

  // simple modules from the class representatives
  auto regularQ = regular_module(Q);
  for (size_t ci = 0; ci < class_rep_bar.size(); ++ci) {
    Matrix cols = column_space(f, Q->right_mult(class_rep_bar[ci]));
    ModuleRep Sq = submodule(regularQ, cols, "S" + std::to_string(ci));
    // as a module over A, acting through the quotient
    ModuleRep S;
    S.algebra = A;
    S.dim = Sq.dim;
    S.name = Sq.name;
    S.action.reserve(A->dim);
    for (int k = 0; k < A->dim; ++k) S.action.push_back(Sq.act(Abar.projection.col(k)));
    auto ends = hom_space(S, S);
    if (ends.size() != 1)
      fail(Errc::NotSplit, "End(S) has dimension " + std::to_string(ends.size()) + " in " + A->name);
    out.simples.push_back(std::move(S));
  }

  // lift the complete orthogonal set, sequentially orthogonalized
  std::vector<Scalar> usum(A->dim, f.zero());
  std::vector<int> rep_of_class((int)out.simples.size(), -1);
  for (size_t j = 0; j < prim_bar.size(); ++j) {
    auto x = mat_vec(f, Abar.section, prim_bar[j]);
    // x <- (1-u) x (1-u)
    std::vector<Scalar> one_minus_u = A->unit;
    for (int t = 0; t < A->dim; ++t) one_minus_u[t] = f.sub(one_minus_u[t], usum[t]);
    x = A->multiply(A->multiply(one_minus_u, x), one_minus_u);
    auto fj = detail::newton_idempotent(*A, x);
    for (size_t l = 0; l < out.full_orthogonal.size(); ++l) {
      auto pr = A->multiply(fj, out.full_orthogonal[l]);
      auto pl = A->multiply(out.full_orthogonal[l], fj);
      for (int t = 0; t < A->dim; ++t)
        check(f.is_zero(pr[t]) && f.is_zero(pl[t]), "lifted idempotents must stay orthogonal");
    }
    for (int t = 0; t < A->dim; ++t) usum[t] = f.add(usum[t], fj[t]);
    if (rep_of_class[prim_class[j]] < 0) rep_of_class[prim_class[j]] = (int)j;
    out.full_orthogonal.push_back(std::move(fj));
    out.class_of_full.push_back(prim_class[j]);
  }
  check(usum == A->unit, "complete idempotent set must sum to 1");

  // projective covers P(S) = A f for the class representatives
  auto regularA = regular_module(A);
  long dim_account = 0;
  for (size_t ci = 0; ci < out.simples.size(); ++ci) {
    const auto& fidem = out.full_orthogonal[rep_of_class[ci]];
    out.idempotents.push_back(fidem);
    Matrix cols = column_space(f, A->right_mult(fidem));
    out.projective_basis.push_back(cols);
    out.projectives.push_back(submodule(regularA, cols, "P(S" + std::to_string(ci) + ")"));
    long count = 0;
    for (size_t j = 0; j < out.class_of_full.size(); ++j)
      if (out.class_of_full[j] == (int)ci) ++count;
    dim_account += (long)out.projectives.back().dim * count;
  }
  check(dim_account == A->dim, "projective dimensions must account for dim A");

  return out;
}

bool is_projective(const ModuleRep& M, const SimpleSet& S) {
  auto mult = top_multiplicities(M, S);
  long cover_dim = 0;
  for (size_t i = 0; i < mult.size(); ++i) cover_dim += (long)mult[i] * S.projectives[i].dim;
  return cover_dim == M.dim;
}

}  // namespace repwild
