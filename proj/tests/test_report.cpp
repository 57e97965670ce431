#include <doctest.h>

#include "repwild/report.hpp"
#include "test_helpers.hpp"

using namespace repwild;
using namespace repwild::testutil;

static FieldPtr Q() { return make_field(FieldDescriptor::rationals()); }

TEST_CASE("wild verdict for the elementary abelian cube") {
  auto F2 = make_field(FieldDescriptor::prime(2));
  auto E = elementary_abelian(2, 3, F2);
  ReportOptions opt;
  opt.window = 14;
  opt.budget_entries = 2000000;
  auto v = wildness_report(E, trivial_module(E), opt);
  CHECK(v.verdict == Verdict::wild);
  CHECK(*v.cx.gamma == 3);
  CHECK(v.confidence == WildnessVerdict::Confidence::exact);
  CHECK(v.self_injective);
  CHECK(v.fg.status == FgStatus::asserted);
  CHECK(v.consistency.agree);
}

TEST_CASE("criterion silent for representation-finite truncated polynomials") {
  auto T = truncated_poly(5, Q());
  ReportOptions opt;
  opt.window = 12;
  auto v = wildness_report(T, trivial_module(T), opt);
  CHECK(v.verdict == Verdict::criterion_silent);
  CHECK(*v.cx.gamma == 1);
  // the engine never claims tameness
  CHECK(v.rule.find("tame") == std::string::npos);
  CHECK(v.note.find("not conclusive") != std::string::npos);
}

TEST_CASE("not applicable without self-injectivity") {
  auto U = upper_triangular2(Q());
  // give it an augmentation-like module by hand: the simple at e11
  auto S = simple_modules(U);
  ReportOptions opt;
  opt.window = 8;
  auto v = wildness_report(U, S.simples[0], opt);
  CHECK(v.verdict == Verdict::not_applicable);
  CHECK(!v.self_injective);
  CHECK(v.rule.find("self-injective") != std::string::npos);
}

TEST_CASE("not applicable without an fg certificate, unless overridden") {
  // hand-build a copy of tp(2) with the family tag stripped
  auto T = truncated_poly(2, Q());
  auto U = std::make_shared<AlgebraTable>(*T);
  U->family.clear();
  ReportOptions opt;
  opt.window = 10;
  auto v = wildness_report(U, trivial_module(U), opt);
  CHECK(v.verdict == Verdict::not_applicable);
  CHECK(v.fg.status == FgStatus::unknown);

  opt.fg_override = FgStatus::asserted;
  auto v2 = wildness_report(U, trivial_module(U), opt);
  CHECK(v2.verdict == Verdict::criterion_silent);
  CHECK(v2.fg.status == FgStatus::asserted);
}

TEST_CASE("verdict monotonicity in the window") {
  auto F2 = make_field(FieldDescriptor::prime(2));
  auto E = elementary_abelian(2, 3, F2);
  ReportOptions opt;
  opt.budget_entries = 4000000;
  opt.window = 10;
  auto v1 = wildness_report(E, trivial_module(E), opt);
  opt.window = 14;
  auto v2 = wildness_report(E, trivial_module(E), opt);
  REQUIRE(v1.verdict == Verdict::wild);
  CHECK(v2.verdict == Verdict::wild);  // enlarging the window never flips wild
  CHECK(*v1.cx.gamma == *v2.cx.gamma);
}

TEST_CASE("block consistency of verdicts") {
  auto P = direct_product(*truncated_poly(2, Q()), *truncated_poly(3, Q()));
  auto Pp = std::make_shared<AlgebraTable>(*P);
  Pp->family = "truncated_poly";  // both blocks are truncated polynomial algebras
  auto bd = block_decomposition(Pp);
  auto k = trivial_module(Pp);
  auto mem = block_of_module(k, bd);
  REQUIRE(!mem.mixed());

  ReportOptions opt;
  opt.window = 10;
  auto v_full = wildness_report(Pp, k, opt);

  const Block& B = bd.blocks[*mem.block];
  auto Bt = std::make_shared<AlgebraTable>(*B.table);
  Bt->family = "truncated_poly";
  auto kB = restrict_to_block(k, B);
  auto v_block = wildness_report(Bt, kB, opt);

  CHECK(v_full.verdict == v_block.verdict);
  CHECK(*v_full.cx.gamma == *v_block.cx.gamma);
}
