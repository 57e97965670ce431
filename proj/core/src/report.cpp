#include "repwild/report.hpp"

#include <future>

#include "repwild/io.hpp"

namespace repwild {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::wild: return "wild";
    case Verdict::criterion_silent: return "criterion-silent";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

WildnessVerdict wildness_report(const AlgebraPtr& A, const ModuleRep& M, const ReportOptions& opt) {
  WildnessVerdict out;
  out.algebra_id = A->name.empty() ? "algebra" : A->name;
  out.module_id = M.name.empty() ? "module" : M.name;

  auto diag = validate(*A);
  if (!diag.pass) {
    out.verdict = Verdict::not_applicable;
    out.rule = "precondition failed: algebra table invalid";
    out.note = diag.violations.front();
    return out;
  }

  auto si = is_self_injective(A);
  out.self_injective = si.value;
  out.self_injective_note = si.note;

  auto blocks = block_decomposition(A);
  auto membership = block_of_module(M, blocks);
  out.block_index = membership.block;

  ResolutionOptions ropt;
  ropt.budget_entries = opt.budget_entries;
  auto S = std::make_shared<SimpleSet>(simple_modules(A));
  auto cx = complexity(M, opt.window, S, ropt);
  out.cx = cx.growth;
  out.resolution_dims = cx.resolution_dims;
  out.consistency = cx_consistency(M, opt.window, S, ropt);

  out.fg = opt.fg_override ? FgCertificate{*opt.fg_override, "asserted via fg-override"}
                           : fg_certificate(A->family, A->k().characteristic());

  out.confidence = out.cx.mode == GrowthReport::Mode::exact
                       ? WildnessVerdict::Confidence::exact
                       : WildnessVerdict::Confidence::estimated;

  if (!out.self_injective) {
    out.verdict = Verdict::not_applicable;
    out.rule = "precondition failed: algebra is not self-injective";
    return out;
  }
  if (out.fg.status == FgStatus::unknown) {
    out.verdict = Verdict::not_applicable;
    out.rule = "precondition failed: no finiteness certificate for the cohomology";
    return out;
  }
  if (!out.cx.gamma.has_value()) {
    out.verdict = Verdict::not_applicable;
    out.rule = "complexity undetermined within the window";
    return out;
  }
  if (*out.cx.gamma >= 3) {
    out.verdict = Verdict::wild;
    out.rule =
        "wild: a module of complexity >= 3 over a self-injective block with "
        "finitely generated cohomology";
    if (out.confidence == WildnessVerdict::Confidence::estimated)
      out.note = "growth rate estimated from the window, not certified exact";
    return out;
  }
  out.verdict = Verdict::criterion_silent;
  out.rule = "criterion silent: complexity <= 2";
  out.note = "tameness would force complexity <= 2, so the computation is consistent "
             "with tame but not conclusive";
  return out;
}

BatchResult batch_report(const std::vector<BatchEntry>& entries, const ReportOptions& opt) {
  BatchResult out;
  out.errors.resize(entries.size());
  out.verdict_index.assign(entries.size(), -1);

  // entries run independently; results are reduced in input order
  std::vector<std::future<WildnessVerdict>> futs(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    futs[i] = std::async(std::launch::async, [&, i]() {
      auto A = load_algebra_file(entries[i].algebra_path);
      ModuleRep M = entries[i].module_path == "trivial"
                        ? trivial_module(A)
                        : load_module_file(entries[i].module_path, A);
      ReportOptions o = opt;
      o.window = entries[i].window;
      return wildness_report(A, M, o);
    });
  }
  for (size_t i = 0; i < entries.size(); ++i) {
    try {
      auto v = futs[i].get();
      out.verdict_index[i] = (int)out.verdicts.size();
      out.verdicts.push_back(std::move(v));
    } catch (const std::exception& e) {
      out.errors[i] = e.what();
      out.any_error = true;
    }
  }
  return out;
}

}  // namespace repwild
