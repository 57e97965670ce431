#pragma once

#include "repwild/growth.hpp"
#include "repwild/hochschild.hpp"
#include "repwild/zoo.hpp"

namespace repwild {

enum class Verdict { wild, criterion_silent, not_applicable };

const char* verdict_name(Verdict v);

struct WildnessVerdict {
  std::string algebra_id;
  std::string module_id;
  std::optional<int> block_index;
  GrowthReport cx;
  std::vector<long> resolution_dims;
  bool self_injective = false;
  std::string self_injective_note;
  FgCertificate fg;
  CxConsistency consistency;
  Verdict verdict = Verdict::not_applicable;
  std::string rule;
  enum class Confidence { exact, estimated } confidence = Confidence::exact;
  std::string note;
};

struct ReportOptions {
  int window = 16;
  long budget_entries = 200000;
  std::optional<FgStatus> fg_override;  // user assertion for custom algebras
};

// Decision table: wild needs self-injectivity, a usable fg certificate and
// complexity >= 3; complexity <= 2 is criterion-silent (tameness would force
// cx <= 2, which is consistent but not conclusive); failed preconditions are
// recorded as not-applicable.
WildnessVerdict wildness_report(const AlgebraPtr& A, const ModuleRep& M, const ReportOptions& opt);

struct BatchEntry {
  std::string algebra_path;
  std::string module_path;  // "trivial" selects the trivial module
  int window = 16;
};

struct BatchResult {
  std::vector<std::string> errors;           // one slot per entry, empty = ok
  std::vector<WildnessVerdict> verdicts;     // only for error-free entries
  std::vector<int> verdict_index;            // per entry: index into verdicts or -1
  bool any_error = false;
};

BatchResult batch_report(const std::vector<BatchEntry>& entries, const ReportOptions& opt);

}  // namespace repwild
