// Command line front end: builds zoo algebras, validates tables, computes
// blocks, resolutions, Ext and Hochschild dimensions, growth rates, and
// representation-type verdicts.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "repwild/hochschild.hpp"
#include "repwild/io.hpp"
#include "repwild/report.hpp"

using namespace repwild;

namespace {

struct Common {
  std::string format = "json";
  std::string out_path;
  int window = 16;
  long budget = 200000;
  uint64_t seed = kDefaultSeed;
};

void emit(const Common& c, const json& j, const std::string& text) {
  std::string payload = c.format == "json" ? canonical_dump(j) : text;
  if (c.out_path.empty())
    std::cout << payload;
  else
    write_text_file(c.out_path, payload);
}

FieldDescriptor parse_field_spec(const std::string& spec) {
  if (spec == "rationals" || spec == "Q") return FieldDescriptor::rationals();
  auto split = [&](char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : spec) {
      if (ch == sep) {
        parts.push_back(cur);
        cur.clear();
      } else
        cur += ch;
    }
    parts.push_back(cur);
    return parts;
  };
  auto parts = split(':');
  if (parts.size() == 2 && parts[0] == "prime") return FieldDescriptor::prime(std::stol(parts[1]));
  if (parts.size() == 2 && parts[0] == "cyclotomic")
    return FieldDescriptor::cyclotomic(std::stol(parts[1]));
  if (parts.size() == 3 && parts[0] == "ext") {
    long p = std::stol(parts[1]);
    std::vector<long> mod;
    std::string cur;
    for (char ch : parts[2] + ",") {
      if (ch == ',') {
        mod.push_back(std::stol(cur));
        cur.clear();
      } else
        cur += ch;
    }
    return FieldDescriptor::finite_extension(p, mod);
  }
  fail(Errc::SchemaError, "bad field spec '" + spec +
                              "' (rationals | prime:P | cyclotomic:L | ext:P:c0,c1,..)");
}

// "5", "-1", "2/3", "z", "z^2"
Scalar parse_scalar_cli(const Field& f, const std::string& s) {
  if (s == "z" || s.rfind("z^", 0) == 0) {
    if (f.kind() != FieldKind::cyclotomic && f.kind() != FieldKind::finite_extension)
      fail(Errc::SchemaError, "'z' literals need an extension field");
    long e = s == "z" ? 1 : std::stol(s.substr(2));
    return f.pow(f.generator(), e);
  }
  if (f.kind() == FieldKind::rationals) return Scalar(Rat::from_string(s));
  return scalar_from_json(f, json::parse("\"" + s + "\""), "scalar");
}

json growth_to_json(const GrowthReport& g) {
  json j;
  if (g.gamma)
    j["gamma"] = *g.gamma;
  else
    j["gamma"] = "infinite-or-undetermined";
  j["mode"] = g.mode == GrowthReport::Mode::exact ? "exact" : "estimated";
  j["stable"] = g.stable;
  if (g.mode == GrowthReport::Mode::exact)
    j["witness"] = {{"c", g.witness_c}, {"lag", g.witness_lag}, {"tail_start", g.witness_tail}};
  if (!g.note.empty()) j["note"] = g.note;
  return j;
}

json verdict_to_json(const WildnessVerdict& v) {
  json j;
  j["algebra"] = v.algebra_id;
  j["module"] = v.module_id;
  if (v.block_index)
    j["block"] = *v.block_index;
  else
    j["block"] = "mixed";
  j["cx"] = growth_to_json(v.cx);
  j["resolution_dims"] = v.resolution_dims;
  j["self_injective"] = v.self_injective;
  j["self_injective_note"] = v.self_injective_note;
  j["fg"] = {{"status", fg_status_name(v.fg.status)}, {"citation", v.fg.citation}};
  j["consistency"] = {{"resolution", growth_to_json(v.consistency.from_resolution)},
                      {"ext_sum", growth_to_json(v.consistency.from_ext_sum)},
                      {"self_ext", growth_to_json(v.consistency.from_self_ext)},
                      {"agree", v.consistency.agree}};
  j["verdict"] = verdict_name(v.verdict);
  j["rule"] = v.rule;
  j["confidence"] =
      v.confidence == WildnessVerdict::Confidence::exact ? "exact" : "estimated";
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

std::string verdict_to_text(const WildnessVerdict& v) {
  std::string s;
  s += "algebra: " + v.algebra_id + "\nmodule: " + v.module_id + "\n";
  s += "self-injective: " + std::string(v.self_injective ? "yes" : "no") + "\n";
  s += "fg: " + std::string(fg_status_name(v.fg.status)) + "\n";
  if (v.cx.gamma) s += "cx: " + std::to_string(*v.cx.gamma) + "\n";
  s += "verdict: " + std::string(verdict_name(v.verdict)) + "\nrule: " + v.rule + "\n";
  if (!v.note.empty()) s += "note: " + v.note + "\n";
  return s;
}

ModuleRep load_module_arg(const std::string& module_path, bool trivial, const AlgebraPtr& A) {
  if (trivial || module_path == "trivial") return trivial_module(A);
  return load_module_file(module_path, A);
}

int run(int argc, char** argv) {
  CLI::App app{"exact workbench for representation type of finite dimensional algebras"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--out", common.out_path, "write output to a file");
  app.add_option("--window", common.window, "resolution window")->check(CLI::Range(4, 64));
  app.add_option("--budget", common.budget, "per-step matrix entry budget");
  app.add_option("--seed", common.seed, "seed for randomized checks");
  if (const char* env = std::getenv("REPWILD_BUDGET")) common.budget = std::atol(env);

  // ---- zoo build ----
  auto* zoo_cmd = app.add_subcommand("zoo", "algebra constructors");
  auto* build = zoo_cmd->add_subcommand("build", "build a zoo algebra and companions");
  std::string family, field_spec = "rationals", qstr = "", qtype = "A2", preset = "";
  long ell = 3, p = 2;
  int rank = 1, strands = 3;
  build->add_option("family", family,
                    "truncated-poly | elementary-abelian | restricted-enveloping | "
                    "quantum-nilpotent | smash | hecke-a")
      ->required();
  build->add_option("--field", field_spec, "rationals | prime:P | cyclotomic:L | ext:P:c0,c1,..");
  build->add_option("--ell", ell, "truncation / root-of-unity order");
  build->add_option("--p", p, "prime");
  build->add_option("--rank", rank, "rank");
  build->add_option("--n", strands, "Hecke strand count");
  build->add_option("--q", qstr, "Hecke parameter (scalar literal)");
  build->add_option("--type", qtype, "quantum type: A1 | A1xA1 | A2");
  build->add_option("--preset", preset, "restricted-enveloping preset: sl2");

  // ---- file-driven subcommands ----
  std::string algebra_path, module_path = "trivial", other_path, input_path, fg_override;
  bool use_trivial = false, with_oracle = false;
  int steps = 8, product_deg = -1;
  long comb_r = 6, comb_ell = 2;

  auto* vcmd = app.add_subcommand("validate", "check a table against the axioms");
  vcmd->add_option("file", input_path)->required();

  auto* bcmd = app.add_subcommand("blocks", "block decomposition");
  bcmd->add_option("--algebra", algebra_path)->required();

  auto* scmd = app.add_subcommand("selfinj", "self-injectivity certificate");
  scmd->add_option("--algebra", algebra_path)->required();

  auto* rcmd = app.add_subcommand("resolve", "minimal projective resolution dims");
  rcmd->add_option("--algebra", algebra_path)->required();
  rcmd->add_option("--module", module_path);
  rcmd->add_flag("--trivial", use_trivial, "resolve the trivial module");
  rcmd->add_option("--steps", steps);

  auto* ecmd = app.add_subcommand("ext", "Ext dimension table");
  ecmd->add_option("--algebra", algebra_path)->required();
  ecmd->add_option("--module", module_path);
  ecmd->add_option("--other", other_path, "target module (default: same as --module)");
  ecmd->add_option("--steps", steps);

  auto* hcmd = app.add_subcommand("hh", "Hochschild cohomology dims");
  hcmd->add_option("--algebra", algebra_path)->required();
  hcmd->add_option("--steps", steps);
  hcmd->add_flag("--oracle", with_oracle, "also run the bar-complex oracle");
  hcmd->add_option("--product-check", product_deg, "graded commutativity up to this degree");

  auto* ccmd = app.add_subcommand("cx", "complexity of a module");
  ccmd->add_option("--algebra", algebra_path)->required();
  ccmd->add_option("--module", module_path);
  ccmd->add_flag("--trivial", use_trivial);

  auto* repcmd = app.add_subcommand("report", "wildness verdict");
  std::string batch_path;
  repcmd->add_option("--algebra", algebra_path);
  repcmd->add_option("--module", module_path);
  repcmd->add_flag("--trivial", use_trivial);
  repcmd->add_option("--batch", batch_path, "batch spec file");
  repcmd->add_option("--fg-override", fg_override, "assert fg status: certified | asserted");

  auto* hbcmd = app.add_subcommand("hecke-blocks", "type A block combinatorics");
  hbcmd->add_option("--r", comb_r)->required();
  hbcmd->add_option("--ell", comb_ell)->required();

  auto* bdcmd = app.add_subcommand("bd-verdict", "principal block rule for types B/D");
  bdcmd->add_option("--r", comb_r)->required();
  bdcmd->add_option("--ell", comb_ell)->required();

  auto* pcmd = app.add_subcommand("pointed-check", "pointed datum hypothesis check");
  pcmd->add_option("file", input_path)->required();

  // options placed after a subcommand still match the global flags
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* s2 : sub->get_subcommands({})) s2->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);
  randomized_check_seed() = common.seed;

  ResolutionOptions ropt;
  ropt.budget_entries = common.budget;

  if (build->parsed()) {
    auto F = make_field(parse_field_spec(field_spec));
    AlgebraPtr A;
    if (family == "truncated-poly") {
      A = truncated_poly(ell, F);
    } else if (family == "elementary-abelian") {
      A = elementary_abelian(p, rank, F);
    } else if (family == "restricted-enveloping") {
      if (preset != "sl2") fail(Errc::SchemaError, "restricted-enveloping needs --preset sl2");
      A = restricted_enveloping(sl2_data(F), F);
    } else if (family == "quantum-nilpotent") {
      QuantumType t = qtype == "A1" ? QuantumType::A1
                      : qtype == "A1xA1" ? QuantumType::A1xA1
                                         : QuantumType::A2;
      A = quantum_nilpotent(t, ell, F);
    } else if (family == "smash") {
      // the rank-one model: truncated polynomial with the q-scaling action
      auto R = truncated_poly(ell, F);
      Scalar q = primitive_root_of_unity(*F, ell);
      Matrix act = Matrix::zero(R->dim, R->dim, *F);
      for (int i = 0; i < R->dim; ++i) act.at(i, i) = F->pow(q, i);
      A = smash_group(R, {ell}, {act});
    } else if (family == "hecke-a") {
      Scalar q = qstr.empty() ? F->from_int(5) : parse_scalar_cli(*F, qstr);
      A = hecke_typeA(strands, q, F);
    } else {
      fail(Errc::SchemaError, "unknown family '" + family + "'");
    }
    auto diag = validate(*A);
    check(diag.pass, "constructor output failed validation");
    std::string out = common.out_path.empty() ? family + ".json" : common.out_path;
    store_algebra_file(*A, out);
    std::string companions;
    if (A->augmentation) {
      std::string mpath = out.substr(0, out.rfind('.')) + ".trivial.json";
      store_module_file(trivial_module(A), out, mpath);
      companions = mpath;
    }
    json j = {{"written", out}, {"dim", A->dim}, {"family", A->family}};
    if (!companions.empty()) j["trivial_module"] = companions;
    // -o names the algebra file here, so the status always goes to stdout
    std::cout << (common.format == "json"
                      ? canonical_dump(j)
                      : "wrote " + out + (companions.empty() ? "" : " and " + companions) + "\n");
    return 0;
  }

  if (vcmd->parsed()) {
    auto A = load_algebra_file(input_path);
    auto diag = validate(*A);
    json j = {{"pass", diag.pass}, {"violations", diag.violations}};
    std::string text = diag.pass ? "pass\n" : "fail\n";
    for (const auto& v : diag.violations) text += v + "\n";
    emit(common, j, text);
    return diag.pass ? 0 : 2;
  }

  if (bcmd->parsed()) {
    auto A = load_algebra_file(algebra_path);
    auto bd = block_decomposition(A);
    json blocks = json::array();
    std::string text;
    for (const auto& b : bd.blocks) {
      json e;
      e["dim"] = b.table->dim;
      json id = json::array();
      for (const auto& c : b.idempotent) id.push_back(scalar_to_json(A->k(), c));
      e["idempotent"] = id;
      blocks.push_back(e);
      text += "block dim " + std::to_string(b.table->dim) + "\n";
    }
    json j = {{"count", bd.blocks.size()}, {"blocks", blocks}};
    if (bd.principal) j["principal"] = *bd.principal;
    emit(common, j, text);
    return 0;
  }

  if (scmd->parsed()) {
    auto A = load_algebra_file(algebra_path);
    auto si = is_self_injective(A);
    json j = {{"self_injective", si.value},
              {"dual_dim", si.dual_dim},
              {"cover_dim", si.cover_dim},
              {"note", si.note}};
    emit(common, j, std::string(si.value ? "self-injective" : "not self-injective") + "\n");
    return 0;
  }

  if (rcmd->parsed()) {
    auto A = load_algebra_file(algebra_path);
    auto M = load_module_arg(module_path, use_trivial, A);
    auto S = std::make_shared<SimpleSet>(simple_modules(A));
    auto R = minimal_resolution(M, steps, S, ropt);
    json j = {{"dims", R.dims}, {"steps", steps}, {"minimal", true}};
    std::string text = "dims:";
    for (long d : R.dims) text += " " + std::to_string(d);
    emit(common, j, text + "\n");
    return 0;
  }

  if (ecmd->parsed()) {
    auto A = load_algebra_file(algebra_path);
    auto M = load_module_arg(module_path, use_trivial, A);
    auto N = other_path.empty() ? M : load_module_arg(other_path, false, A);
    auto S = std::make_shared<SimpleSet>(simple_modules(A));
    auto t = ext_dims(M, N, steps, S, ropt);
    json j = {{"dims", t.dims}, {"kind", t.kind}};
    std::string text = "ext dims:";
    for (long d : t.dims) text += " " + std::to_string(d);
    emit(common, j, text + "\n");
    return 0;
  }

  if (hcmd->parsed()) {
    auto A = load_algebra_file(algebra_path);
    auto t = hh_dims(A, steps, ropt);
    json j = {{"dims", t.dims}, {"kind", t.kind}, {"center_dim", center(*A).rows}};
    std::string text = "hh dims:";
    for (long d : t.dims) text += " " + std::to_string(d);
    text += "\n";
    if (with_oracle) {
      auto o = bar_hh_oracle(A, steps);
      j["oracle_dims"] = o.dims;
      j["oracle_agrees"] = (o.dims == t.dims);
      text += "oracle agrees: " + std::string(o.dims == t.dims ? "yes" : "no") + "\n";
    }
    if (product_deg >= 0) {
      auto pr = hh_product_check(A, product_deg, ropt);
      j["graded_commutative"] = pr.graded_commutative;
      j["product_pairs_checked"] = pr.pairs_checked;
      if (!pr.witnesses.empty()) j["product_witnesses"] = pr.witnesses;
      text += "graded commutative: " + std::string(pr.graded_commutative ? "yes" : "no") + "\n";
    }
    emit(common, j, text);
    return 0;
  }

  if (ccmd->parsed()) {
    auto A = load_algebra_file(algebra_path);
    auto M = load_module_arg(module_path, use_trivial, A);
    auto S = std::make_shared<SimpleSet>(simple_modules(A));
    auto cx = complexity(M, common.window, S, ropt);
    json j = growth_to_json(cx.growth);
    j["dims"] = cx.resolution_dims;
    std::string text = "gamma: ";
    text += cx.growth.gamma ? std::to_string(*cx.growth.gamma) : "infinite-or-undetermined";
    text += cx.growth.mode == GrowthReport::Mode::exact ? " (exact)\n" : " (estimated)\n";
    emit(common, j, text);
    return 0;
  }

  if (repcmd->parsed()) {
    ReportOptions opt;
    opt.window = common.window;
    opt.budget_entries = common.budget;
    if (!fg_override.empty()) {
      if (fg_override == "certified")
        opt.fg_override = FgStatus::certified;
      else if (fg_override == "asserted")
        opt.fg_override = FgStatus::asserted;
      else
        fail(Errc::SchemaError, "fg-override must be certified or asserted");
    }
    if (!batch_path.empty()) {
      json bj = parse_json_file(batch_path);
      require_keys(bj, {"schema", "entries"}, {}, "batch");
      std::vector<BatchEntry> entries;
      for (const auto& e : bj.at("entries")) {
        require_keys(e, {"algebra"}, {"module", "window"}, "batch entry");
        BatchEntry be;
        be.algebra_path = e.at("algebra").get<std::string>();
        be.module_path = e.contains("module") ? e.at("module").get<std::string>() : "trivial";
        be.window = e.contains("window") ? e.at("window").get<int>() : common.window;
        entries.push_back(be);
      }
      auto res = batch_report(entries, opt);
      json items = json::array();
      std::string text;
      for (size_t i = 0; i < entries.size(); ++i) {
        if (res.verdict_index[i] >= 0) {
          items.push_back(verdict_to_json(res.verdicts[res.verdict_index[i]]));
          text += verdict_to_text(res.verdicts[res.verdict_index[i]]) + "\n";
        } else {
          items.push_back(json{{"error", res.errors[i]}});
          text += "error: " + res.errors[i] + "\n\n";
        }
      }
      emit(common, json{{"entries", items}}, text);
      return res.any_error ? 2 : 0;
    }
    if (algebra_path.empty()) fail(Errc::SchemaError, "report needs --algebra or --batch");
    auto A = load_algebra_file(algebra_path);
    auto M = load_module_arg(module_path, use_trivial, A);
    auto v = wildness_report(A, M, opt);
    emit(common, verdict_to_json(v), verdict_to_text(v));
    return 0;
  }

  if (hbcmd->parsed()) {
    auto rep = hecke_blocks_typeA(comb_r, comb_ell);
    json blocks = json::array();
    std::string text;
    for (const auto& b : rep.blocks) {
      json e;
      e["core"] = b.core.parts;
      e["weight"] = b.weight;
      json mem = json::array();
      for (const auto& m : b.members) mem.push_back(m.parts);
      e["members"] = mem;
      e["verdict"] = b.verdict;
      blocks.push_back(e);
      text += "core " + b.core.str() + " weight " + std::to_string(b.weight) + ": " + b.verdict +
              "\n";
    }
    json j = {{"r", rep.r}, {"ell", rep.ell}, {"semisimple", rep.semisimple}, {"blocks", blocks}};
    if (rep.semisimple) text = "semisimple (ell > r)\n" + text;
    emit(common, j, text);
    return 0;
  }

  if (bdcmd->parsed()) {
    auto v = principal_block_BD_verdict(comb_r, comb_ell);
    emit(common, json{{"r", v.r}, {"ell", v.ell}, {"verdict", v.verdict}}, v.verdict + "\n");
    return 0;
  }

  if (pcmd->parsed()) {
    auto D = load_datum_file(input_path);
    auto v = pointed_datum_check(D);
    json j = {{"applicable", v.applicable},
              {"verdict", v.verdict},
              {"orders", v.orders},
              {"vectors_checked", v.vectors_checked}};
    if (!v.witness.empty()) j["witness"] = v.witness;
    emit(common, j, v.verdict + "\n");
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
