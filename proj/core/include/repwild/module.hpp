#pragma once

#include "repwild/algebra.hpp"

namespace repwild {

// Left module over a structure-constant algebra: one action matrix per
// algebra basis element, acting on column vectors.
struct ModuleRep {
  AlgebraPtr algebra;
  int dim = 0;
  std::vector<Matrix> action;  // action[i] = rho(e_i)
  std::string name;

  const Field& k() const { return algebra->k(); }
  Matrix act(const std::vector<Scalar>& algebra_elt) const;
  Matrix act_basis(int i) const { return action[i]; }
};

Diagnostics validate_module(const ModuleRep& M);

// rho(e_i) = [eps(e_i)]; requires an augmentation.
ModuleRep trivial_module(const AlgebraPtr& A);
ModuleRep regular_module(const AlgebraPtr& A);
// A* with (a.f)(b) = f(ba); rho(a) = transpose of right multiplication.
ModuleRep dual_regular_module(const AlgebraPtr& A);
ModuleRep zero_module(const AlgebraPtr& A);
ModuleRep direct_sum(const ModuleRep& M, const ModuleRep& N);

// Basis of {phi : phi rho_M(a) = rho_N(a) phi}, as dim(N) x dim(M) matrices.
// Solves the intertwining system over a generating set of the algebra.
std::vector<Matrix> hom_space(const ModuleRep& M, const ModuleRep& N);

// Submodule on an explicit column basis (columns must span an invariant
// subspace); actions are restricted to the given coordinates.
ModuleRep submodule(const ModuleRep& M, const Matrix& basis_cols, const std::string& name = "");

struct QuotientModule {
  ModuleRep quotient;
  Matrix projection;  // dim(Q) x dim(M)
};
QuotientModule quotient_module(const ModuleRep& M, const Matrix& sub_basis_cols);

// Jac(A) * M as canonical column basis.
Matrix radical_submodule_basis(const ModuleRep& M, const Matrix& radical_rows);
ModuleRep radical_submodule(const ModuleRep& M);
// top(M) = M / Jac(A) M
QuotientModule top(const ModuleRep& M);

struct SimpleSet {
  AlgebraPtr A;
  Matrix radical_rows;                       // Jac(A) basis, rows
  int radical_nilpotency = 0;
  std::vector<ModuleRep> simples;            // one per iso class
  std::vector<std::vector<Scalar>> idempotents;  // lifted primitive f_i per class
  std::vector<ModuleRep> projectives;        // P(S_i) = A f_i
  std::vector<Matrix> projective_basis;      // columns: basis of A f_i inside A
  std::vector<std::vector<Scalar>> full_orthogonal;  // complete set, sums to 1
  std::vector<int> class_of_full;            // iso class of each full idempotent
};

// Complete set of simple modules with projective covers, via idempotent
// lifting from A/Jac(A). Raises NotSplit when some End(S) has dim > 1.
SimpleSet simple_modules(const AlgebraPtr& A);

// index of the block acting as identity, or the list of nonzero components
struct BlockMembership {
  std::optional<int> block;       // set when unique
  std::vector<int> components;    // nonzero components when mixed
  bool mixed() const { return !block.has_value(); }
};
BlockMembership block_of_module(const ModuleRep& M, const BlockDecomposition& blocks);

// Restrict a module in block i to a module over that block's table.
ModuleRep restrict_to_block(const ModuleRep& M, const Block& block);

bool is_projective(const ModuleRep& M, const SimpleSet& S);

// multiplicity of each simple in the top of M
std::vector<int> top_multiplicities(const ModuleRep& M, const SimpleSet& S);

}  // namespace repwild
