#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>

#include "generators.hpp"
#include "golden_cases.hpp"
#include "typik/asp_emit.hpp"
#include "typik/error.hpp"
#include "typik/kb_io.hpp"

namespace typik {
namespace {

using testing::fixture_path;
using testing::golden_path;

bool contains_line(const std::vector<std::string>& lines, const std::string& line) {
  return std::find(lines.begin(), lines.end(), line) != lines.end();
}

bool updating() { return std::getenv("TYPIK_UPDATE_GOLDEN") != nullptr; }

TEST(AspEmit, GoldenPrograms) {
  for (const auto& c : testing::golden_cases()) {
    const std::string path = golden_path(c.name + ".lp");
    const std::string text = testing::emit_golden(c);
    if (updating()) {
      std::ofstream(path, std::ios::binary) << text;
      continue;
    }
    EXPECT_EQ(text, testing::read_file(path)) << c.name;
  }
}

TEST(AspEmit, GoldenPreference) {
  const std::string path = golden_path("preference.lp");
  if (updating()) {
    std::ofstream(path, std::ios::binary) << emit_preference();
    return;
  }
  EXPECT_EQ(emit_preference(), testing::read_file(path));
}

TEST(AspEmit, PenguinFacts) {
  const WeightedKB kb = load_kb_file(fixture_path("penguin.json"));
  const AspProgram p = emit_program(kb, parse_query("T(Bird) -> Fly >= 0.8"));
  EXPECT_EQ(p.facts.front(), "#const n=5.");
  EXPECT_TRUE(contains_line(p.facts, "subTyp(bird,fly,20)."));
  EXPECT_TRUE(contains_line(p.facts, "subTyp(penguin,fly,-70)."));
  EXPECT_TRUE(contains_line(p.facts, "dcls(penguin)."));
  EXPECT_TRUE(contains_line(p.facts, "nom(reddy)."));
  EXPECT_TRUE(contains_line(p.facts, "concept(and(black,red))."));
  EXPECT_TRUE(contains_line(p.constraints, ":- eval(black,opus,V), V*5 < 4*n."));
  EXPECT_TRUE(contains_line(p.constraints, ":- eval(fly,opus,V), V > 0."));
  EXPECT_TRUE(contains_line(p.query, "auxtc(auxc,bird)."));
  EXPECT_TRUE(contains_line(p.query, "ok :- eval(fly,auxc,V), V*5 >= 4*n."));
}

TEST(AspEmit, NoTypicalityMeansNoWeightRules) {
  const WeightedKB kb = load_kb_file(fixture_path("crisp.json"));
  const AspProgram p = emit_program(kb, parse_query("T(Cat) -> Animal >= 1"));
  const std::string text = p.to_string();
  for (const char* absent : {"weight(", "valphi(", "num(", "dcls(", "subTyp("}) {
    EXPECT_EQ(text.find(absent), std::string::npos) << absent;
  }
}

TEST(AspEmit, DuplicateBodiesAreMerged) {
  const WeightedKB kb = load_kb_file(fixture_path("quoting.json"));
  const AspProgram p = emit_program(kb, parse_query("T(Node) -> N >= 1"));
  EXPECT_TRUE(contains_line(p.facts, "subTyp(\"Node\",edge_1,75)."));
  EXPECT_TRUE(contains_line(p.rules, "weight(X,edge_1,0) :- nom(X)."));
}

TEST(AspEmit, AggregateVariant) {
  const WeightedKB kb = load_kb_file(fixture_path("penguin.json"));
  AspEmitOptions opts;
  opts.aggregate_weights = true;
  const AspProgram p = emit_program(kb, parse_query("T(Bird) -> Fly >= 1"), opts);
  EXPECT_TRUE(contains_line(p.rules,
                            "weight(X,C,W) :- dcls(C), nom(X), W = #sum{ Wi*V,D : subTyp(C,D,Wi), eval(D,X,V) }."));
}

TEST(AspEmit, ConstantsAndQuoting) {
  EXPECT_EQ(asp_constant("Bird"), "bird");
  EXPECT_EQ(asp_constant("has_Wings2"), "has_Wings2");
  EXPECT_EQ(asp_constant("Not"), "\"Not\"");
  EXPECT_EQ(asp_constant("N"), "\"N\"");
  EXPECT_EQ(asp_constant("Top"), "\"Top\"");
  EXPECT_EQ(asp_constant("_x"), "\"_x\"");
}

TEST(AspEmit, ValphiBandsMatchThresholds) {
  for (const auto& c : testing::golden_cases()) {
    const WeightedKB kb = load_kb_file(fixture_path(c.fixture));
    const AspProgram p = emit_program(kb, parse_query(c.query));
    EXPECT_EQ(testing::valphi_mismatch(p, kb), "") << c.name;
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const WeightedKB kb = testing::random_kb(rng);
    const AspProgram p = emit_program(kb, testing::random_query(rng, kb));
    ASSERT_EQ(testing::valphi_mismatch(p, kb), "") << serialize_kb(kb);
  }
}

TEST(AspEmit, SaturatingPhiUsesSentinels) {
  WeightedKB kb;
  kb.n = 2;
  kb.precision = 0;
  kb.phi = PhiConfig::clamped_linear({0, 1}, {1, 1});
  kb.concept_names = {"A"};
  kb.typicality_tbox["A"] = {};
  const AspProgram p = emit_program(kb, parse_query("T(A) -> A >= 1"));
  EXPECT_TRUE(contains_line(p.rules, "valphi(n,W,0) :- num(W), W <= #inf."));
  EXPECT_TRUE(contains_line(p.rules, "valphi(n,W,2) :- num(W), W > #inf."));
  EXPECT_EQ(testing::valphi_mismatch(p, compute_thresholds(kb.phi, kb.n, kb.precision)), "");
}

TEST(AspEmit, RejectsUnencodableInput) {
  WeightedKB kb;
  kb.n = 2;
  kb.concept_names = {"A"};
  EXPECT_THROW(emit_program(kb, parse_query("T(A) -> B >= 1")), ValidationError);
}

}  // namespace
}  // namespace typik
