#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repwild/resolution.hpp"

namespace repwild {

// Rate of growth of a dimension sequence: the smallest c such that
// d_n <= b n^{c-1} for some b. Exact mode detects eventually
// quasi-polynomial sequences through iterated lagged differences.
struct GrowthReport {
  std::vector<long> seq;
  std::optional<int> gamma;  // nullopt: infinite / undetermined
  enum class Mode { exact, estimated } mode = Mode::exact;
  bool stable = true;
  // exact witness
  int witness_c = 0, witness_lag = 0, witness_tail = 0;
  std::string note;
};

GrowthReport gamma_of(const std::vector<long>& seq, std::optional<int> period_hint = {});

struct ComplexityReport {
  GrowthReport growth;
  std::vector<long> resolution_dims;
};

ComplexityReport complexity(const ModuleRep& M, int window, std::shared_ptr<const SimpleSet> S,
                            ResolutionOptions opt = {}, std::optional<int> period_hint = {});

// The three growth rates that must agree for a self-injective algebra:
// resolution dims, summed Ext to simples, and self-Ext.
struct CxConsistency {
  GrowthReport from_resolution;
  GrowthReport from_ext_sum;
  GrowthReport from_self_ext;
  bool agree = false;
  std::optional<int> variety_dim;  // the agreed value
  bool self_injective = true;      // informational; a warning when false
};

CxConsistency cx_consistency(const ModuleRep& M, int window, std::shared_ptr<const SimpleSet> S,
                             ResolutionOptions opt = {});

}  // namespace repwild
