#pragma once

#include "repwild/growth.hpp"

namespace repwild {

// A as a module over A^e = A (x) A^op: (a (x) b) . x = a x b.
struct Bimodule {
  AlgebraPtr env;   // the enveloping algebra
  ModuleRep as_module;
};

Bimodule as_bimodule(const AlgebraPtr& A);

// dim HH^n(A) = dim Ext^n_{A^e}(A, A) from a minimal resolution over A^e.
// Checks dim HH^0 = dim Z(A) exactly.
ExtTable hh_dims(const AlgebraPtr& A, int steps, ResolutionOptions opt = {});

// dim Hom_{A^e}(A, A) alone; cheap even when A^e is too big to resolve.
long hh0_dim(const AlgebraPtr& A);

// Independent oracle: cohomology of the normalized bar complex
// Hom((A/k1)^(x)n, A). Guarded by OracleTooLarge.
ExtTable bar_hh_oracle(const AlgebraPtr& A, int steps);

// Yoneda products of HH class representatives up to maxdeg; reports whether
// xi.eta = (-1)^{|xi||eta|} eta.xi holds for all basis pairs.
struct HHProductReport {
  bool graded_commutative = true;
  int maxdeg = 0;
  std::vector<std::string> witnesses;  // violations, if any
  int pairs_checked = 0;
};

HHProductReport hh_product_check(const AlgebraPtr& A, int maxdeg, ResolutionOptions opt = {});

}  // namespace repwild
