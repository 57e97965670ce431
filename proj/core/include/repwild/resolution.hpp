#pragma once

#include "repwild/module.hpp"

namespace repwild {

struct ResolutionOptions {
  // cap on dim(P_n) * dim(target) entries per step
  long budget_entries = 200000;
  // keep covers, kernels and differentials (needed for Ext cocycles / Yoneda)
  bool with_maps = false;
};

// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, built step by
// step from projective covers. Projectives are kept implicit as summand
// multiplicities over the SimpleSet; syzygies are kernel bases inside the
// parent projective. Minimality (kernel inside rad P) is certified exactly
// at every step.
struct Resolution {
  AlgebraPtr A;
  std::shared_ptr<const SimpleSet> S;
  ModuleRep M;
  int steps = 0;                        // covers built for degrees 0..steps
  std::vector<std::vector<int>> mults;  // per degree, per simple class
  std::vector<long> dims;               // dim P_n
  std::vector<long> omega_dims;         // dim Omega_{n+1} (computed kernels)
  bool minimal = true;

  bool with_maps = false;
  std::vector<Matrix> covers;                  // C_n: target coords x dim P_n
  std::vector<Matrix> kernels;                 // K_n: dim P_n x dim Omega_{n+1}
  std::vector<std::vector<int>> kernel_rows;   // coordinate rows of each kernel

  // differential P_n -> P_{n-1} in projective coordinates (with_maps only)
  Matrix differential(int n) const;
  long dim_p(int n) const { return n <= steps ? dims[n] : 0; }
};

Resolution minimal_resolution(const ModuleRep& M, int steps,
                              std::shared_ptr<const SimpleSet> S, ResolutionOptions opt = {});

// Explicit syzygy module Omega^n(M), n >= 1 (requires with_maps).
ModuleRep materialize_syzygy(const Resolution& R, int n);

// Explicit projective P_n as a module (block diagonal from the SimpleSet).
ModuleRep materialize_projective(const Resolution& R, int n);

struct ExtTable {
  std::vector<long> dims;  // dim Ext^n, n = 0..window
  std::string kind = "ext";
};

// dim Ext^n(M, N) from a minimal resolution of M.
ExtTable ext_dims(const ModuleRep& M, const ModuleRep& N, int steps,
                  std::shared_ptr<const SimpleSet> S, ResolutionOptions opt = {});

// For simple targets the differentials vanish: dims = cover multiplicities.
ExtTable ext_dims_to_simple(const Resolution& R, int simple_class);

// Ext classes as cocycles phi: P_deg -> N with phi d_{deg+1} = 0.
struct ExtClass {
  int degree = 0;
  Matrix cocycle;  // dim N x dim P_degree
};

// Basis of Ext^degree(M, N) as canonically reduced cocycles.
std::vector<ExtClass> ext_basis(const Resolution& RM, const ModuleRep& N, int degree);

// Reduce a cocycle modulo coboundaries (canonical coset representative).
ExtClass reduce_ext_class(const Resolution& RM, const ModuleRep& N, const ExtClass& c);
bool ext_classes_equal(const Resolution& RM, const ModuleRep& N, const ExtClass& a,
                       const ExtClass& b);

// Yoneda composite of xi in Ext^m(M,N) with eta in Ext^n(N,L): the class
// eta o xi in Ext^{m+n}(M,L), computed by lifting xi to a chain map.
// RM must carry maps to degree m+n, RN to degree n.
ExtClass yoneda_compose(const Resolution& RM, const ModuleRep& N, const ExtClass& xi,
                        const Resolution& RN, const ModuleRep& L, const ExtClass& eta);

}  // namespace repwild
