#include "repwild/module.hpp"

#include <random>

namespace repwild {

Matrix ModuleRep::act(const std::vector<Scalar>& a) const {
  const Field& f = k();
  Matrix m = Matrix::zero(dim, dim, f);
  for (int i = 0; i < algebra->dim; ++i) {
    if (f.is_zero(a[i])) continue;
    for (size_t t = 0; t < action[i].a.size(); ++t)
      if (!f.is_zero(action[i].a[t])) m.a[t] = f.add(m.a[t], f.mul(a[i], action[i].a[t]));
  }
  return m;
}

Diagnostics validate_module(const ModuleRep& M) {
  Diagnostics d;
  const Field& f = M.k();
  const AlgebraTable& A = *M.algebra;
  auto bad = [&](const std::string& s) {
    d.pass = false;
    d.violations.push_back(s);
  };

  if ((int)M.action.size() != A.dim) {
    bad("one action matrix per algebra basis element required");
    return d;
  }
  for (int i = 0; i < A.dim; ++i)
    if (M.action[i].rows != M.dim || M.action[i].cols != M.dim) {
      bad("action matrix " + std::to_string(i) + " has wrong shape");
      return d;
    }

  if (!mat_eq(M.act(A.unit), Matrix::identity(M.dim, f))) bad("rho(1) != identity");

  auto pair_check = [&](int i, int j) {
    Matrix lhs = mat_mul(f, M.action[i], M.action[j]);
    Matrix rhs = Matrix::zero(M.dim, M.dim, f);
    for (const auto& [t, c] : A.sc[(size_t)i * A.dim + j]) {
      for (size_t s = 0; s < rhs.a.size(); ++s)
        if (!f.is_zero(M.action[t].a[s])) rhs.a[s] = f.add(rhs.a[s], f.mul(c, M.action[t].a[s]));
    }
    if (!mat_eq(lhs, rhs))
      bad("rho(e_i)rho(e_j) != rho(e_i e_j) at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  };
  if (A.dim <= 40) {
    for (int i = 0; i < A.dim && d.violations.size() < 8; ++i)
      for (int j = 0; j < A.dim && d.violations.size() < 8; ++j) pair_check(i, j);
  } else {
    std::mt19937_64 rng(randomized_check_seed());
    std::uniform_int_distribution<int> pick(0, A.dim - 1);
    for (int n = 0; n < 400 && d.violations.size() < 8; ++n) pair_check(pick(rng), pick(rng));
  }
  return d;
}

ModuleRep trivial_module(const AlgebraPtr& A) {
  check(A->augmentation.has_value(), "trivial module needs an augmentation");
  const Field& f = A->k();
  ModuleRep M;
  M.algebra = A;
  M.dim = 1;
  M.name = "k";
  M.action.reserve(A->dim);
  for (int i = 0; i < A->dim; ++i) {
    Matrix m(1, 1, (*A->augmentation)[i]);
    M.action.push_back(std::move(m));
  }
  (void)f;
  return M;
}

ModuleRep regular_module(const AlgebraPtr& A) {
  ModuleRep M;
  M.algebra = A;
  M.dim = A->dim;
  M.name = "A";
  M.action.reserve(A->dim);
  for (int i = 0; i < A->dim; ++i) M.action.push_back(A->left_mult_basis(i));
  return M;
}

ModuleRep dual_regular_module(const AlgebraPtr& A) {
  ModuleRep M;
  M.algebra = A;
  M.dim = A->dim;
  M.name = "A*";
  M.action.reserve(A->dim);
  for (int i = 0; i < A->dim; ++i) M.action.push_back(transpose(A->right_mult_basis(i)));
  return M;
}

ModuleRep zero_module(const AlgebraPtr& A) {
  ModuleRep M;
  M.algebra = A;
  M.dim = 0;
  M.name = "0";
  M.action.assign(A->dim, Matrix());
  return M;
}

ModuleRep direct_sum(const ModuleRep& M, const ModuleRep& N) {
  check(M.algebra.get() == N.algebra.get() || M.algebra->name == N.algebra->name,
        "direct sum over one algebra");
  const Field& f = M.k();
  ModuleRep S;
  S.algebra = M.algebra;
  S.dim = M.dim + N.dim;
  S.name = M.name + "+" + N.name;
  S.action.reserve(M.action.size());
  for (size_t i = 0; i < M.action.size(); ++i) {
    Matrix m = Matrix::zero(S.dim, S.dim, f);
    for (int r = 0; r < M.dim; ++r)
      for (int c = 0; c < M.dim; ++c) m.at(r, c) = M.action[i].at(r, c);
    for (int r = 0; r < N.dim; ++r)
      for (int c = 0; c < N.dim; ++c) m.at(M.dim + r, M.dim + c) = N.action[i].at(r, c);
    S.action.push_back(std::move(m));
  }
  return S;
}

std::vector<Matrix> hom_space(const ModuleRep& M, const ModuleRep& N) {
  if (M.algebra->field->descriptor() != N.algebra->field->descriptor() ||
      M.algebra->dim != N.algebra->dim)
    fail(Errc::AlgebraMismatch, "hom space requires one parent algebra");
  const Field& f = M.k();
  const int m = M.dim, n = N.dim;
  if (m == 0 || n == 0) return {};

  // unknowns: phi (n x m), flattened row-major; equations per generator g:
  // phi rho_M(g) - rho_N(g) phi = 0
  auto gens = M.algebra->generating_set();
  Matrix sys = Matrix::zero((int)gens.size() * n * m, n * m, f);
  int row = 0;
  for (const auto& g : gens) {
    Matrix a = M.act(g);   // m x m
    Matrix b = N.act(g);   // n x n
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j, ++row) {
        // entry (i,j) of phi*a - b*phi
        for (int t = 0; t < m; ++t)
          if (!f.is_zero(a.at(t, j)))
            sys.at(row, i * m + t) = f.add(sys.at(row, i * m + t), a.at(t, j));
        for (int t = 0; t < n; ++t)
          if (!f.is_zero(b.at(i, t)))
            sys.at(row, t * m + j) = f.sub(sys.at(row, t * m + j), b.at(i, t));
      }
  }
  Matrix ker = nullspace(f, sys);
  std::vector<Matrix> basis;
  basis.reserve(ker.cols);
  for (int c = 0; c < ker.cols; ++c) {
    Matrix phi = Matrix::zero(n, m, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) phi.at(i, j) = ker.at(i * m + j, c);
    basis.push_back(std::move(phi));
  }
  return basis;
}

ModuleRep submodule(const ModuleRep& M, const Matrix& basis_cols, const std::string& name) {
  const Field& f = M.k();
  ModuleRep S;
  S.algebra = M.algebra;
  S.dim = basis_cols.cols;
  S.name = name.empty() ? M.name + ".sub" : name;
  S.action.reserve(M.action.size());
  for (const auto& act : M.action) {
    if (S.dim == 0) {
      S.action.push_back(Matrix());
      continue;
    }
    Matrix img = mat_mul(f, act, basis_cols);
    auto X = solve_many(f, basis_cols, img);
    check(X.has_value(), "subspace is not invariant under the action");
    S.action.push_back(std::move(*X));
  }
  return S;
}

QuotientModule quotient_module(const ModuleRep& M, const Matrix& sub_basis_cols) {
  const Field& f = M.k();
  Echelon e = echelon(f, transpose(sub_basis_cols));  // rows span the submodule
  std::vector<int> is_pivot(M.dim, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<int> reps;
  for (int c = 0; c < M.dim; ++c)
    if (!is_pivot[c]) reps.push_back(c);
  const int q = (int)reps.size();

  auto project = [&](std::vector<Scalar> v) {
    v = reduce_mod_rows(f, e, std::move(v));
    std::vector<Scalar> out(q, f.zero());
    for (int i = 0; i < q; ++i) out[i] = v[reps[i]];
    return out;
  };

  QuotientModule out;
  out.quotient.algebra = M.algebra;
  out.quotient.dim = q;
  out.quotient.name = M.name + ".top";
  out.projection = Matrix::zero(q, M.dim, f);
  for (int j = 0; j < M.dim; ++j) {
    std::vector<Scalar> ej(M.dim, f.zero());
    ej[j] = f.one();
    auto pj = project(std::move(ej));
    for (int i = 0; i < q; ++i) out.projection.at(i, j) = pj[i];
  }
  out.quotient.action.reserve(M.action.size());
  for (const auto& act : M.action) {
    Matrix qa = Matrix::zero(q, q, f);
    for (int c = 0; c < q; ++c) {
      auto col = project(act.col(reps[c]));
      for (int i = 0; i < q; ++i) qa.at(i, c) = col[i];
    }
    out.quotient.action.push_back(std::move(qa));
  }
  return out;
}

Matrix radical_submodule_basis(const ModuleRep& M, const Matrix& radical_rows) {
  const Field& f = M.k();
  if (radical_rows.rows == 0 || M.dim == 0) return Matrix::zero(M.dim, 0, f);
  Matrix stacked = Matrix::zero(M.dim, radical_rows.rows * M.dim, f);
  int c0 = 0;
  for (int r = 0; r < radical_rows.rows; ++r) {
    Matrix img = M.act(radical_rows.row(r));
    for (int i = 0; i < M.dim; ++i)
      for (int j = 0; j < M.dim; ++j) stacked.at(i, c0 + j) = img.at(i, j);
    c0 += M.dim;
  }
  return column_space(f, stacked);
}

ModuleRep radical_submodule(const ModuleRep& M) {
  auto rad = radical(*M.algebra);
  Matrix basis = radical_submodule_basis(M, rad.radical.basis);
  return submodule(M, basis, M.name + ".rad");
}

QuotientModule top(const ModuleRep& M) {
  auto rad = radical(*M.algebra);
  Matrix basis = radical_submodule_basis(M, rad.radical.basis);
  return quotient_module(M, basis);
}

BlockMembership block_of_module(const ModuleRep& M, const BlockDecomposition& blocks) {
  const Field& f = M.k();
  BlockMembership out;
  Matrix I = Matrix::identity(M.dim, f);
  for (size_t i = 0; i < blocks.blocks.size(); ++i) {
    Matrix a = M.act(blocks.blocks[i].idempotent);
    if (!is_zero_matrix(f, a)) {
      out.components.push_back((int)i);
      if (mat_eq(a, I) && out.components.size() == 1) out.block = (int)i;
    }
  }
  if (out.components.size() != 1) out.block.reset();
  return out;
}

ModuleRep restrict_to_block(const ModuleRep& M, const Block& block) {
  ModuleRep R;
  R.algebra = block.table;
  R.dim = M.dim;
  R.name = M.name + "|B";
  R.action.reserve(block.table->dim);
  for (int j = 0; j < block.table->dim; ++j) R.action.push_back(M.act(block.basis.row(j)));
  return R;
}

std::vector<int> top_multiplicities(const ModuleRep& M, const SimpleSet& S) {
  Matrix rad_in_M = radical_submodule_basis(M, S.radical_rows);
  auto T = quotient_module(M, rad_in_M);
  std::vector<int> mult;
  mult.reserve(S.simples.size());
  for (const auto& s : S.simples) mult.push_back((int)hom_space(T.quotient, s).size());
  return mult;
}

}  // namespace repwild
