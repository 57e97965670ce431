#include "repwild/resolution.hpp"

namespace repwild {

namespace {

// Basis of Hom_A(P_n, N) from the summand structure: for each copy of
// P(S_i) = A f_i and each basis vector w of f_i N, the map u f_i -> rho_N(u) w.
struct PHom {
  int dimN = 0;
  int dimP = 0;
  std::vector<Matrix> maps;          // dim N x dim P
  // coordinate extraction data
  std::vector<int> copy_class;
  std::vector<int> copy_offset;
  std::vector<Matrix> w_basis;       // per class: dim N x t_i (basis of f_i N)
  std::vector<std::vector<Scalar>> gen_coords;  // per class: f_i in P(S_i) coordinates
};

PHom build_phom(const Resolution& R, int n, const ModuleRep& N) {
  const SimpleSet& S = *R.S;
  const Field& f = R.A->k();
  const int nclass = (int)S.simples.size();

  PHom H;
  H.dimN = N.dim;
  H.w_basis.resize(nclass);
  H.gen_coords.resize(nclass);
  for (int i = 0; i < nclass; ++i) {
    H.w_basis[i] = column_space(f, N.act(S.idempotents[i]));
    auto gc = solve(f, S.projective_basis[i], S.idempotents[i]);
    check(gc.has_value(), "f_i must lie in A f_i");
    H.gen_coords[i] = *gc;
  }

  int off = 0;
  for (int i = 0; i < nclass; ++i) {
    const Matrix& pb = S.projective_basis[i];  // A.dim x p_i
    for (int c = 0; c < R.mults[n][i]; ++c) {
      H.copy_class.push_back(i);
      H.copy_offset.push_back(off);
      off += pb.cols;
    }
  }
  H.dimP = off;

  for (size_t cp = 0; cp < H.copy_class.size(); ++cp) {
    int i = H.copy_class[cp];
    const Matrix& pb = S.projective_basis[i];
    for (int wj = 0; wj < H.w_basis[i].cols; ++wj) {
      Matrix phi = Matrix::zero(N.dim, H.dimP, f);
      for (int c = 0; c < pb.cols; ++c) {
        auto img = mat_vec(f, N.act(pb.col(c)), H.w_basis[i].col(wj));
        for (int r = 0; r < N.dim; ++r) phi.at(r, H.copy_offset[cp] + c) = img[r];
      }
      H.maps.push_back(std::move(phi));
    }
  }
  return H;
}

// coordinates of an arbitrary A-linear map psi: P_n -> N in the PHom basis
std::vector<Scalar> phom_coords(const Field& f, const PHom& H, const Matrix& psi) {
  std::vector<Scalar> coords;
  for (size_t cp = 0; cp < H.copy_class.size(); ++cp) {
    int i = H.copy_class[cp];
    // evaluate psi at the generator f_i of this copy
    const auto& gc = H.gen_coords[i];
    std::vector<Scalar> v(H.dimN, f.zero());
    for (size_t c = 0; c < gc.size(); ++c) {
      if (f.is_zero(gc[c])) continue;
      for (int r = 0; r < H.dimN; ++r)
        v[r] = f.add(v[r], f.mul(gc[c], psi.at(r, H.copy_offset[cp] + (int)c)));
    }
    if (H.w_basis[i].cols == 0) continue;
    auto sol = solve(f, H.w_basis[i], v);
    check(sol.has_value(), "map value must lie in f_i N");
    coords.insert(coords.end(), sol->begin(), sol->end());
  }
  return coords;
}

// delta^n : Hom(P_n, N) -> Hom(P_{n+1}, N), psi -> psi d_{n+1}, in coordinates
Matrix delta_matrix(const Resolution& R, const PHom& Hn, const PHom& Hn1, int n) {
  const Field& f = R.A->k();
  Matrix d = R.differential(n + 1);
  Matrix out = Matrix::zero((int)Hn1.maps.size(), (int)Hn.maps.size(), f);
  for (size_t t = 0; t < Hn.maps.size(); ++t) {
    Matrix comp = mat_mul(f, Hn.maps[t], d);
    auto coords = phom_coords(f, Hn1, comp);
    for (size_t r = 0; r < coords.size(); ++r) out.at((int)r, (int)t) = coords[r];
  }
  return out;
}

}  // namespace

ExtTable ext_dims(const ModuleRep& M, const ModuleRep& N, int steps,
                  std::shared_ptr<const SimpleSet> S, ResolutionOptions opt) {
  opt.with_maps = true;
  Resolution R = minimal_resolution(M, steps + 1, S, opt);
  const Field& f = M.k();

  ExtTable t;
  std::vector<PHom> homs(steps + 2);
  for (int n = 0; n <= steps + 1; ++n) homs[n] = build_phom(R, n, N);
  std::vector<int> drank(steps + 2, 0);  // rank of delta^n
  std::vector<Matrix> deltas(steps + 1);
  for (int n = 0; n <= steps; ++n) {
    deltas[n] = delta_matrix(R, homs[n], homs[n + 1], n);
    drank[n + 1] = rank_of(f, deltas[n]);  // store shifted: drank[n+1] = rank delta^n
  }
  for (int n = 0; n <= steps; ++n) {
    long h = (long)homs[n].maps.size();
    long below = (n == 0) ? 0 : drank[n];  // rank delta^{n-1}
    long here = drank[n + 1];              // rank delta^n
    t.dims.push_back(h - here - below);
  }
  return t;
}

std::vector<ExtClass> ext_basis(const Resolution& RM, const ModuleRep& N, int degree) {
  check(RM.with_maps, "ext basis needs a resolution with maps");
  check(degree >= 0 && degree + 1 < (int)RM.covers.size(), "degree out of range for ext basis");
  const Field& f = RM.A->k();
  PHom Hn = build_phom(RM, degree, N);
  PHom Hn1 = build_phom(RM, degree + 1, N);
  Matrix dn = delta_matrix(RM, Hn, Hn1, degree);
  Matrix cocycles = nullspace(f, dn);  // columns in Hom coordinates

  Matrix cob = Matrix::zero(0, (int)Hn.maps.size(), f);
  if (degree >= 1) {
    PHom Hm = build_phom(RM, degree - 1, N);
    Matrix dm = delta_matrix(RM, Hm, Hn, degree - 1);
    cob = row_space(f, transpose(dm));  // rows span the coboundaries
  }
  Echelon ce = echelon(f, cob);

  std::vector<ExtClass> out;
  Matrix chosen = Matrix::zero(0, (int)Hn.maps.size(), f);
  for (int c = 0; c < cocycles.cols; ++c) {
    auto red = reduce_mod_rows(f, ce, cocycles.col(c));
    bool zero = true;
    for (const auto& x : red)
      if (!f.is_zero(x)) zero = false;
    if (zero) continue;
    // independent of previously chosen representatives?
    Matrix row(1, (int)Hn.maps.size(), f.zero());
    for (size_t j = 0; j < red.size(); ++j) row.at(0, (int)j) = red[j];
    Matrix test = chosen.rows == 0 ? row : vcat(chosen, row);
    if (rank_of(f, test) <= chosen.rows) continue;
    chosen = row_space(f, test);
    ExtClass cls;
    cls.degree = degree;
    cls.cocycle = Matrix::zero(N.dim, Hn.dimP, f);
    for (size_t t = 0; t < Hn.maps.size(); ++t) {
      if (f.is_zero(red[t])) continue;
      for (size_t e = 0; e < cls.cocycle.a.size(); ++e)
        cls.cocycle.a[e] = f.add(cls.cocycle.a[e], f.mul(red[t], Hn.maps[t].a[e]));
    }
    out.push_back(std::move(cls));
  }
  return out;
}

ExtClass reduce_ext_class(const Resolution& RM, const ModuleRep& N, const ExtClass& c) {
  const Field& f = RM.A->k();
  PHom Hn = build_phom(RM, c.degree, N);
  auto coords = phom_coords(f, Hn, c.cocycle);
  Matrix cob = Matrix::zero(0, (int)Hn.maps.size(), f);
  if (c.degree >= 1) {
    PHom Hm = build_phom(RM, c.degree - 1, N);
    Matrix dm = delta_matrix(RM, Hm, Hn, c.degree - 1);
    cob = row_space(f, transpose(dm));
  }
  Echelon ce = echelon(f, cob);
  auto red = reduce_mod_rows(f, ce, coords);
  ExtClass out;
  out.degree = c.degree;
  out.cocycle = Matrix::zero(N.dim, Hn.dimP, f);
  for (size_t t = 0; t < Hn.maps.size(); ++t) {
    if (f.is_zero(red[t])) continue;
    for (size_t e = 0; e < out.cocycle.a.size(); ++e)
      out.cocycle.a[e] = f.add(out.cocycle.a[e], f.mul(red[t], Hn.maps[t].a[e]));
  }
  return out;
}

bool ext_classes_equal(const Resolution& RM, const ModuleRep& N, const ExtClass& a,
                       const ExtClass& b) {
  if (a.degree != b.degree) return false;
  auto ra = reduce_ext_class(RM, N, a);
  auto rb = reduce_ext_class(RM, N, b);
  return mat_eq(ra.cocycle, rb.cocycle);
}

ExtClass yoneda_compose(const Resolution& RM, const ModuleRep& N, const ExtClass& xi,
                        const Resolution& RN, const ModuleRep& L, const ExtClass& eta) {
  const Field& f = RM.A->k();
  const int m = xi.degree, n = eta.degree;
  if (!RM.with_maps || !RN.with_maps) fail(Errc::NotComposable, "resolutions need maps");
  if ((int)RM.covers.size() <= m + n || (int)RN.covers.size() <= n)
    fail(Errc::NotComposable, "resolutions too short for the composite degree");
  if (xi.cocycle.rows != N.dim || eta.cocycle.rows != L.dim)
    fail(Errc::NotComposable, "cocycle shapes do not match the modules");

  // lift xi: P_{m+j}(M) -> P_j(N), j = 0..n
  Matrix lift;  // current f_j
  for (int j = 0; j <= n; ++j) {
    ModuleRep Pj = materialize_projective(RN, j);
    PHom H = build_phom(RM, m + j, Pj);
    // constraint matrix: C0(N) f_0 = xi,  d_j(N) f_j = f_{j-1} d_{m+j}(M)
    Matrix lhs = (j == 0) ? RN.covers[0] : RN.differential(j);
    Matrix rhs = (j == 0) ? xi.cocycle : mat_mul(f, lift, RM.differential(m + j));
    // solve over the hom space: sum_t x_t (lhs . Phi_t) = rhs
    const int nt = (int)H.maps.size();
    Matrix sys = Matrix::zero(lhs.rows * H.dimP, nt, f);
    for (int t = 0; t < nt; ++t) {
      Matrix col = mat_mul(f, lhs, H.maps[t]);
      for (int r = 0; r < col.rows; ++r)
        for (int c = 0; c < col.cols; ++c) sys.at(r * H.dimP + c, t) = col.at(r, c);
    }
    std::vector<Scalar> b((size_t)rhs.rows * rhs.cols, f.zero());
    for (int r = 0; r < rhs.rows; ++r)
      for (int c = 0; c < rhs.cols; ++c) b[(size_t)r * rhs.cols + c] = rhs.at(r, c);
    auto sol = solve(f, sys, b);
    check(sol.has_value(), "chain lift must exist by projectivity");
    Matrix fj = Matrix::zero(Pj.dim, H.dimP, f);
    for (int t = 0; t < nt; ++t) {
      if (f.is_zero((*sol)[t])) continue;
      for (size_t e = 0; e < fj.a.size(); ++e)
        fj.a[e] = f.add(fj.a[e], f.mul((*sol)[t], H.maps[t].a[e]));
    }
    lift = std::move(fj);
  }

  ExtClass out;
  out.degree = m + n;
  out.cocycle = mat_mul(f, eta.cocycle, lift);
  return out;
}

}  // namespace repwild
