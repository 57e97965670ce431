#include "repwild/module.hpp"

namespace repwild {

SelfInjectivity is_self_injective(const AlgebraPtr& A) {
  auto S = simple_modules(A);
  ModuleRep dual = dual_regular_module(A);

  SelfInjectivity out;
  out.dual_dim = dual.dim;
  out.top_multiplicities = top_multiplicities(dual, S);
  long cover_dim = 0;
  for (size_t i = 0; i < out.top_multiplicities.size(); ++i)
    cover_dim += (long)out.top_multiplicities[i] * S.projectives[i].dim;
  out.cover_dim = (int)cover_dim;
  out.value = (cover_dim == dual.dim);
  out.note = out.value ? "projective cover of A* is an isomorphism"
                       : "projective cover of A* has dimension " + std::to_string(cover_dim) +
                             " != dim A* = " + std::to_string(dual.dim);
  return out;
}

}  // namespace repwild
