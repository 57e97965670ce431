#include "repwild/resolution.hpp"

namespace repwild {

namespace {

// Implicit projective ⊕ P(S_i)^{m_i}: copies flattened in class order.
struct ProjInfo {
  const SimpleSet* S = nullptr;
  std::vector<int> mults;
  int dim = 0;
  std::vector<int> copy_class;   // class of each summand copy
  std::vector<int> copy_offset;  // coordinate offset of each copy
};

ProjInfo make_proj(const SimpleSet& S, std::vector<int> mults) {
  ProjInfo p;
  p.S = &S;
  p.mults = std::move(mults);
  for (size_t i = 0; i < p.mults.size(); ++i)
    for (int c = 0; c < p.mults[i]; ++c) {
      p.copy_class.push_back((int)i);
      p.copy_offset.push_back(p.dim);
      p.dim += S.projectives[i].dim;
    }
  return p;
}

// w <- rho_P(e_k) v, block diagonal over the summand copies
std::vector<Scalar> proj_apply_basis(const ProjInfo& P, int k, const std::vector<Scalar>& v) {
  const Field& f = P.S->A->k();
  std::vector<Scalar> out(P.dim, f.zero());
  for (size_t c = 0; c < P.copy_class.size(); ++c) {
    const Matrix& act = P.S->projectives[P.copy_class[c]].action[k];
    int off = P.copy_offset[c];
    for (int i = 0; i < act.rows; ++i) {
      Scalar acc = f.zero();
      for (int j = 0; j < act.cols; ++j) {
        if (f.is_zero(act.at(i, j)) || f.is_zero(v[off + j])) continue;
        acc = f.add(acc, f.mul(act.at(i, j), v[off + j]));
      }
      out[off + i] = acc;
    }
  }
  return out;
}

std::vector<Scalar> proj_apply_elem(const ProjInfo& P, const std::vector<Scalar>& a,
                                    const std::vector<Scalar>& v) {
  const Field& f = P.S->A->k();
  std::vector<Scalar> out(P.dim, f.zero());
  const AlgebraTable& A = *P.S->A;
  for (int k = 0; k < A.dim; ++k) {
    if (f.is_zero(a[k])) continue;
    auto w = proj_apply_basis(P, k, v);
    for (int i = 0; i < P.dim; ++i)
      if (!f.is_zero(w[i])) out[i] = f.add(out[i], f.mul(a[k], w[i]));
  }
  return out;
}

// The target of the next cover: either an explicit module or a syzygy given
// by a kernel basis inside the previous projective.
struct Target {
  const Field* f = nullptr;
  int dim = 0;
  const ModuleRep* mod = nullptr;  // explicit
  const ProjInfo* parent = nullptr;
  const Matrix* K = nullptr;                 // parent.dim x dim
  const std::vector<int>* read_rows = nullptr;

  std::vector<Scalar> to_parent(const std::vector<Scalar>& v) const {
    if (mod) return v;
    return mat_vec(*f, *K, v);
  }
  std::vector<Scalar> parent_col(int j) const {  // to_parent of unit vector j
    if (mod) {
      std::vector<Scalar> v(dim, f->zero());
      v[j] = f->one();
      return v;
    }
    return K->col(j);
  }
  std::vector<Scalar> apply_basis_parent(int k, const std::vector<Scalar>& w) const {
    if (mod) return mat_vec(*f, mod->action[k], w);
    auto full = proj_apply_basis(*parent, k, w);
    std::vector<Scalar> out(dim, f->zero());
    for (int j = 0; j < dim; ++j) out[j] = full[(*read_rows)[j]];
    return out;
  }
  std::vector<Scalar> act_elem_vec(const std::vector<Scalar>& a,
                                   const std::vector<Scalar>& v) const {
    if (mod) return mat_vec(*f, mod->act(a), v);
    auto w = mat_vec(*f, *K, v);
    auto full = proj_apply_elem(*parent, a, w);
    std::vector<Scalar> out(dim, f->zero());
    for (int j = 0; j < dim; ++j) out[j] = full[(*read_rows)[j]];
    return out;
  }
  Matrix act_elem_matrix(const std::vector<Scalar>& a) const {
    Matrix m = Matrix::zero(dim, dim, *f);
    const AlgebraTable& A = mod ? *mod->algebra : *parent->S->A;
    for (int j = 0; j < dim; ++j) {
      auto w = parent_col(j);
      std::vector<Scalar> acc(dim, f->zero());
      for (int k = 0; k < A.dim; ++k) {
        if (f->is_zero(a[k])) continue;
        auto col = apply_basis_parent(k, w);
        for (int i = 0; i < dim; ++i)
          if (!f->is_zero(col[i])) acc[i] = f->add(acc[i], f->mul(a[k], col[i]));
      }
      for (int i = 0; i < dim; ++i) m.at(i, j) = acc[i];
    }
    return m;
  }
};

// Basis of Hom_A(T, S) for a simple S, via the intertwining system over a
// generating set.
std::vector<Matrix> hom_target_to_simple(const Target& T, const ModuleRep& S,
                                         const std::vector<std::vector<Scalar>>& gens) {
  const Field& f = *T.f;
  const int m = T.dim, s = S.dim;
  if (m == 0 || s == 0) return {};
  std::vector<Matrix> tacts;
  tacts.reserve(gens.size());
  for (const auto& g : gens) tacts.push_back(T.act_elem_matrix(g));

  Matrix sys = Matrix::zero((int)gens.size() * s * m, s * m, f);
  int row = 0;
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const Matrix& a = tacts[gi];      // m x m
    Matrix b = S.act(gens[gi]);       // s x s
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < m; ++j, ++row) {
        for (int t = 0; t < m; ++t)
          if (!f.is_zero(a.at(t, j)))
            sys.at(row, i * m + t) = f.add(sys.at(row, i * m + t), a.at(t, j));
        for (int t = 0; t < s; ++t)
          if (!f.is_zero(b.at(i, t)))
            sys.at(row, t * m + j) = f.sub(sys.at(row, t * m + j), b.at(i, t));
      }
  }
  Matrix ker = nullspace(f, sys);
  std::vector<Matrix> basis;
  basis.reserve(ker.cols);
  for (int c = 0; c < ker.cols; ++c) {
    Matrix phi = Matrix::zero(s, m, f);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < m; ++j) phi.at(i, j) = ker.at(i * m + j, c);
    basis.push_back(std::move(phi));
  }
  return basis;
}

struct CoverData {
  std::vector<int> mults;
  int dimP = 0;
  Matrix cover;  // T.dim x dimP
};

// Projective cover of the target: multiplicities from Hom(T, S_i), generator
// picks chosen greedily so their images span the top (tested through the
// evaluation maps, whose common kernel is rad T).
CoverData build_cover(const Target& T, const SimpleSet& S,
                      const std::vector<std::vector<Scalar>>& gens, long budget,
                      bool need_matrix) {
  const Field& f = *T.f;
  const AlgebraTable& A = *S.A;
  CoverData out;
  const int nclass = (int)S.simples.size();
  out.mults.assign(nclass, 0);
  if (T.dim == 0) {
    out.cover = Matrix::zero(0, 0, f);
    return out;
  }

  std::vector<std::vector<Matrix>> homs(nclass);
  for (int i = 0; i < nclass; ++i) {
    homs[i] = hom_target_to_simple(T, S.simples[i], gens);
    out.mults[i] = (int)homs[i].size();
    out.dimP += out.mults[i] * S.projectives[i].dim;
  }
  if (!need_matrix) return out;

  if ((long)out.dimP * T.dim > budget)
    fail(Errc::ResourceBudgetExceeded,
         "cover step needs " + std::to_string((long)out.dimP * T.dim) + " entries, budget " +
             std::to_string(budget));

  // evaluation coordinates: all hom values stacked
  int D = 0;
  for (int i = 0; i < nclass; ++i) D += out.mults[i] * S.simples[i].dim;
  auto eval = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> e;
    e.reserve(D);
    for (int i = 0; i < nclass; ++i)
      for (const auto& phi : homs[i]) {
        auto pv = mat_vec(f, phi, v);
        e.insert(e.end(), pv.begin(), pv.end());
      }
    return e;
  };

  Matrix span = Matrix::zero(0, D, f);
  auto in_span = [&](const std::vector<Scalar>& e) {
    if (span.rows == 0) {
      for (const auto& x : e)
        if (!f.is_zero(x)) return false;
      return true;
    }
    Echelon ech = echelon(f, span);
    return in_row_space(f, ech, e);
  };
  auto add_to_span = [&](const std::vector<Scalar>& e) {
    Matrix row(1, D, f.zero());
    for (int j = 0; j < D; ++j) row.at(0, j) = e[j];
    span = span.rows == 0 ? row : vcat(span, row);
    span = row_space(f, span);
  };

  // picks: for each class, m_i vectors in f_i T with independent evaluations
  std::vector<std::pair<int, std::vector<std::vector<Scalar>>>> picks;  // (class, A-orbit)
  for (int i = 0; i < nclass; ++i) {
    if (out.mults[i] == 0) continue;
    int need = out.mults[i];
    // candidates spanning f_i T; identity shortcut when f_i is the unit
    std::vector<std::vector<Scalar>> cands;
    bool unit_idem = (S.idempotents[i] == A.unit);
    if (unit_idem) {
      for (int j = 0; j < T.dim; ++j) {
        std::vector<Scalar> v(T.dim, f.zero());
        v[j] = f.one();
        cands.push_back(std::move(v));
      }
    } else {
      for (int j = 0; j < T.dim; ++j) {
        std::vector<Scalar> v(T.dim, f.zero());
        v[j] = f.one();
        cands.push_back(T.act_elem_vec(S.idempotents[i], v));
      }
    }
    for (auto& v : cands) {
      if (need == 0) break;
      auto ev = eval(v);
      if (in_span(ev)) continue;
      // accept: record the A-orbit and add its evaluations to the span
      std::vector<std::vector<Scalar>> orbit(A.dim);
      auto w = T.to_parent(v);
      for (int k = 0; k < A.dim; ++k) orbit[k] = T.apply_basis_parent(k, w);
      for (int k = 0; k < A.dim; ++k) add_to_span(eval(orbit[k]));
      picks.emplace_back(i, std::move(orbit));
      --need;
    }
    check(need == 0, "projective cover selection incomplete");
  }

  // assemble the cover matrix: per pick, one column for each basis vector of
  // P(S_i) = A f_i, namely u_c . v = sum_k u_c[k] (e_k . v)
  out.cover = Matrix::zero(T.dim, out.dimP, f);
  // column layout must match ProjInfo: class-major, copies in pick order
  int col0 = 0;
  for (int i = 0; i < nclass; ++i) {
    for (auto& [cls, orbit] : picks) {
      if (cls != i) continue;
      const Matrix& pb = S.projective_basis[i];  // A.dim x p_i
      for (int c = 0; c < pb.cols; ++c) {
        for (int k = 0; k < A.dim; ++k) {
          const Scalar& uk = pb.at(k, c);
          if (f.is_zero(uk)) continue;
          for (int r = 0; r < T.dim; ++r)
            if (!f.is_zero(orbit[k][r]))
              out.cover.at(r, col0 + c) = f.add(out.cover.at(r, col0 + c), f.mul(uk, orbit[k][r]));
        }
      }
      col0 += pb.cols;
    }
  }
  return out;
}

// structural evaluation maps P -> S_i vanish exactly on rad P; the kernel of
// the cover must evaluate to zero (minimality certificate)
void certify_minimal(const ProjInfo& P, const Matrix& K) {
  const SimpleSet& S = *P.S;
  const Field& f = S.A->k();
  const int nclass = (int)S.simples.size();
  // per class: s_i x p_i evaluation block [rho_S(u_c) w]
  std::vector<Matrix> blocks(nclass);
  for (int i = 0; i < nclass; ++i) {
    const ModuleRep& Si = S.simples[i];
    Matrix w = column_space(f, Si.act(S.idempotents[i]));
    check(w.cols == 1, "f_i S_i must be one dimensional");
    const Matrix& pb = S.projective_basis[i];
    Matrix blk = Matrix::zero(Si.dim, pb.cols, f);
    for (int c = 0; c < pb.cols; ++c) {
      auto img = mat_vec(f, Si.act(pb.col(c)), w.col(0));
      for (int r = 0; r < Si.dim; ++r) blk.at(r, c) = img[r];
    }
    blocks[i] = std::move(blk);
  }
  for (int col = 0; col < K.cols; ++col)
    for (size_t c = 0; c < P.copy_class.size(); ++c) {
      const Matrix& blk = blocks[P.copy_class[c]];
      int off = P.copy_offset[c];
      for (int r = 0; r < blk.rows; ++r) {
        Scalar acc = f.zero();
        for (int j = 0; j < blk.cols; ++j) {
          if (f.is_zero(blk.at(r, j)) || f.is_zero(K.at(off + j, col))) continue;
          acc = f.add(acc, f.mul(blk.at(r, j), K.at(off + j, col)));
        }
        check(f.is_zero(acc), "cover kernel escapes rad P: resolution not minimal");
      }
    }
}

}  // namespace

Resolution minimal_resolution(const ModuleRep& M, int steps, std::shared_ptr<const SimpleSet> S,
                              ResolutionOptions opt) {
  check(steps >= 0, "steps must be non-negative");
  Resolution R;
  R.A = M.algebra;
  R.S = S;
  R.M = M;
  R.steps = steps;
  R.with_maps = opt.with_maps;
  auto gens = R.A->generating_set();
  const Field& f = R.A->k();

  Target T;
  T.f = &f;
  T.dim = M.dim;
  T.mod = &M;

  // rolling state for the implicit syzygy chain
  std::vector<ProjInfo> projs;  // keep all: targets reference the previous one
  std::vector<Matrix> kept_K;
  std::vector<std::vector<int>> kept_rows;
  Matrix cur_K;
  std::vector<int> cur_rows;

  projs.reserve(steps + 1);
  kept_K.reserve(steps + 1);
  kept_rows.reserve(steps + 1);
  for (int n = 0; n <= steps; ++n) {
    bool need_matrix = opt.with_maps || n < steps;
    CoverData cd = build_cover(T, *S, gens, opt.budget_entries, need_matrix);
    R.mults.push_back(cd.mults);
    R.dims.push_back(cd.dimP);
    projs.push_back(make_proj(*S, cd.mults));

    if (!need_matrix) break;
    if (opt.with_maps) R.covers.push_back(cd.cover);

    auto ns = nullspace_with_support(f, cd.cover);
    check(cd.dimP - ns.basis.cols == T.dim, "cover must be surjective");
    certify_minimal(projs.back(), ns.basis);
    R.omega_dims.push_back(ns.basis.cols);

    if (opt.with_maps) {
      kept_K.push_back(ns.basis);
      kept_rows.push_back(ns.free_cols);
    }
    cur_K = std::move(ns.basis);
    cur_rows = std::move(ns.free_cols);

    if (n < steps) {
      T = Target{};
      T.f = &f;
      T.dim = cur_K.cols;
      T.parent = &projs.back();
      // point at stable storage
      if (opt.with_maps) {
        T.K = &kept_K.back();
        T.read_rows = &kept_rows.back();
      } else {
        T.K = &cur_K;
        T.read_rows = &cur_rows;
      }
    }
  }
  if (opt.with_maps) {
    R.kernels = std::move(kept_K);
    R.kernel_rows = std::move(kept_rows);
  }
  return R;
}

Matrix Resolution::differential(int n) const {
  check(with_maps, "differential needs a resolution with maps");
  check(n >= 1 && n < (int)covers.size() && n - 1 < (int)kernels.size(),
        "differential degree out of range");
  // d_n = K_{n-1} . C_n : P_n -> P_{n-1} in projective coordinates
  return mat_mul(A->k(), kernels[n - 1], covers[n]);
}

ModuleRep materialize_projective(const Resolution& R, int n) {
  const Field& f = R.A->k();
  ProjInfo P = make_proj(*R.S, R.mults[n]);
  ModuleRep M;
  M.algebra = R.A;
  M.dim = P.dim;
  M.name = "P" + std::to_string(n);
  M.action.reserve(R.A->dim);
  for (int k = 0; k < R.A->dim; ++k) {
    Matrix act = Matrix::zero(P.dim, P.dim, f);
    for (size_t c = 0; c < P.copy_class.size(); ++c) {
      const Matrix& blk = R.S->projectives[P.copy_class[c]].action[k];
      int off = P.copy_offset[c];
      for (int i = 0; i < blk.rows; ++i)
        for (int j = 0; j < blk.cols; ++j) act.at(off + i, off + j) = blk.at(i, j);
    }
    M.action.push_back(std::move(act));
  }
  return M;
}

ModuleRep materialize_syzygy(const Resolution& R, int n) {
  check(R.with_maps, "syzygy materialization needs a resolution with maps");
  check(n >= 1 && n <= (int)R.kernels.size(), "syzygy degree out of range");
  const Field& f = R.A->k();
  const Matrix& K = R.kernels[n - 1];
  const auto& rows = R.kernel_rows[n - 1];
  ProjInfo P = make_proj(*R.S, R.mults[n - 1]);

  ModuleRep M;
  M.algebra = R.A;
  M.dim = K.cols;
  M.name = "Omega" + std::to_string(n);
  M.action.reserve(R.A->dim);
  for (int k = 0; k < R.A->dim; ++k) {
    Matrix act = Matrix::zero(M.dim, M.dim, f);
    for (int j = 0; j < M.dim; ++j) {
      auto w = proj_apply_basis(P, k, K.col(j));
      for (int i = 0; i < M.dim; ++i) act.at(i, j) = w[rows[i]];
    }
    M.action.push_back(std::move(act));
  }
  return M;
}

ExtTable ext_dims_to_simple(const Resolution& R, int simple_class) {
  ExtTable t;
  for (const auto& m : R.mults) t.dims.push_back(m[simple_class]);
  return t;
}

}  // namespace repwild
