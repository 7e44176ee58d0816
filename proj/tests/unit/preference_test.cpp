#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "typik/entailment.hpp"
#include "typik/error.hpp"
#include "typik/kb_io.hpp"
#include "typik/preference.hpp"

namespace typik {
namespace {

using testing::fixture_path;

class PenguinWeights : public ::testing::Test {
 protected:
  WeightedKB kb = load_kb_file(fixture_path("penguin.json"));

  Valuation reddy(int n) const {
    return Valuation::from_map({{"Bird", n}, {"Penguin", n}, {"Fly", n}, {"Has_Wings", n}, {"Has_Feather", n},
                                {"Black", 0}, {"Red", n}},
                               n);
  }
  Valuation opus(int n, int bird) const {
    return Valuation::from_map({{"Bird", bird}, {"Penguin", n}, {"Fly", 0}, {"Has_Wings", n}, {"Has_Feather", n},
                                {"Black", 4 * n / 5}, {"Red", 0}},
                               n);
  }
};

TEST_F(PenguinWeights, BirdWeightsAtResolutionOne) {
  kb.n = 1;
  EXPECT_EQ(weight_sum(reddy(1), "Bird", kb), 120);
  EXPECT_EQ(weight_sum(opus(1, 1), "Bird", kb), 100);
  EXPECT_EQ(weight_W(reddy(1), "Bird", kb), ElementWeight::finite(120));
}

TEST_F(PenguinWeights, PenguinWeightsAtResolutionFive) {
  // Units are weight * 10^k * n; k = 0, n = 5.
  EXPECT_EQ(weight_sum(reddy(5), "Penguin", kb), 30 * 5);
  EXPECT_EQ(weight_sum(opus(5, 4), "Penguin", kb), 120 * 5);
}

TEST_F(PenguinWeights, OutsideTheConceptIsNegativeInfinity) {
  auto m = reddy(5).to_map();
  std::map<std::string, int> nums;
  for (const auto& [k, d] : m) nums[k] = d.numerator();
  nums["Penguin"] = 0;
  EXPECT_TRUE(weight_W(Valuation::from_map(nums, 5), "Penguin", kb).is_neg_infinity());
  nums = {{"Bird", 5}, {"Penguin", 5}, {"Fly", 0}, {"Has_Wings", 0}, {"Has_Feather", 0}, {"Black", 0}, {"Red", 0}};
  EXPECT_EQ(weight_W(Valuation::from_map(nums, 5), "Bird", kb), ElementWeight::finite(0));
}

TEST_F(PenguinWeights, NonDistinguishedConceptIsAPreconditionError) {
  EXPECT_THROW(weight_sum(reddy(5), "Fly", kb), PreconditionError);
}

TEST(ElementWeight, NegativeInfinityIsBottom) {
  EXPECT_LT(ElementWeight::neg_infinity(), ElementWeight::finite(INT64_MIN));
  EXPECT_EQ(ElementWeight::neg_infinity(), ElementWeight::neg_infinity());
  EXPECT_EQ(ElementWeight::neg_infinity().to_string(), "-inf");
}

std::vector<Valuation> degrees_of_c(std::initializer_list<int> degrees, int n) {
  std::vector<Valuation> out;
  for (int d : degrees) out.push_back(Valuation::from_map({{"C", d}}, n));
  return out;
}

TEST(InducedPreference, GroupsIntoStrata) {
  const auto vs = degrees_of_c({5, 3, 3, 0}, 5);
  const auto pref = induced_preference(vs, Concept::atom("C"), Algebra(AlgebraKind::kGoedel, 5));
  ASSERT_EQ(pref.strata.size(), 3u);
  EXPECT_EQ(pref.strata[1], (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(pref.less(0, 1));
  EXPECT_FALSE(pref.less(1, 2));
}

TEST(InducedPreference, EqualDegreesRelateNothing) {
  const auto vs = degrees_of_c({2, 2, 2}, 5);
  const auto pref = induced_preference(vs, Concept::atom("C"), Algebra(AlgebraKind::kGoedel, 5));
  for (std::size_t x = 0; x < vs.size(); ++x) {
    for (std::size_t y = 0; y < vs.size(); ++y) EXPECT_FALSE(pref.less(x, y));
  }
}

TEST(TypicalElements, MaximalPositiveDegree) {
  const Algebra g(AlgebraKind::kGoedel, 5);
  const Concept c = Concept::atom("C");
  EXPECT_TRUE(typical_elements(degrees_of_c({0, 0, 0}, 5), c, g).empty());
  EXPECT_EQ(typical_elements(degrees_of_c({1, 5}, 5), c, g), (std::vector<std::size_t>{1}));
  EXPECT_EQ(typical_elements(degrees_of_c({3, 3, 1}, 5), c, g), (std::vector<std::size_t>{0, 1}));
}

TEST(PhiCoherence, EmptyDistinguishedSetIsAlwaysCoherent) {
  WeightedKB kb;
  kb.n = 2;
  kb.concept_names = {"C"};
  const PhiN pn = compute_thresholds(kb.phi, 2, kb.precision);
  for (int d = 0; d <= 2; ++d) EXPECT_TRUE(check_phi_coherent(Valuation::from_map({{"C", d}}, 2), kb, pn));
}

TEST(PhiCoherence, ZeroWeightTopForcesMiddleLevel) {
  WeightedKB kb;
  kb.n = 2;
  kb.concept_names = {"C"};
  kb.typicality_tbox["C"] = {{"C", Concept::top(), 0}};
  const PhiN pn = compute_thresholds(kb.phi, 2, kb.precision);
  EXPECT_TRUE(check_phi_coherent(Valuation::from_map({{"C", 1}}, 2), kb, pn));
  EXPECT_FALSE(check_phi_coherent(Valuation::from_map({{"C", 0}}, 2), kb, pn));
}

WeightedKB body_kb() {
  WeightedKB kb;
  kb.n = 2;
  kb.precision = 0;
  kb.concept_names = {"C", "D"};
  kb.typicality_tbox["C"] = {{"C", Concept::atom("D"), 1}};
  return kb;
}

TEST(CoherentFaithful, SingletonModel) {
  const WeightedKB kb = body_kb();
  const std::vector<Valuation> m = {Valuation::from_map({{"C", 1}, {"D", 2}}, 2)};
  EXPECT_TRUE(check_coherent(m, kb));
  EXPECT_TRUE(check_faithful(m, kb));
}

TEST(CoherentFaithful, EqualDegreesUnequalWeights) {
  const WeightedKB kb = body_kb();
  const std::vector<Valuation> m = {Valuation::from_map({{"C", 2}, {"D", 2}}, 2),
                                    Valuation::from_map({{"C", 2}, {"D", 1}}, 2)};
  EXPECT_FALSE(check_coherent(m, kb));
  EXPECT_TRUE(check_faithful(m, kb));
}

TEST(CoherentFaithful, HigherDegreeWithLowerWeightIsNeither) {
  const WeightedKB kb = body_kb();
  const std::vector<Valuation> m = {Valuation::from_map({{"C", 2}, {"D", 0}}, 2),
                                    Valuation::from_map({{"C", 1}, {"D", 2}}, 2)};
  EXPECT_FALSE(check_coherent(m, kb));
  EXPECT_FALSE(check_faithful(m, kb));
}

TEST(CoherentFaithful, ReddyMoreTypicalBirdThanOpus) {
  WeightedKB kb = load_kb_file(fixture_path("penguin.json"));
  kb.n = 5;
  // Bird degrees ordered like the Bird weights 120 > 100.
  const std::vector<Valuation> m = {
      Valuation::from_map({{"Bird", 5}, {"Penguin", 1}, {"Fly", 5}, {"Has_Wings", 5}, {"Has_Feather", 5},
                           {"Black", 0}, {"Red", 5}},
                          5),
      Valuation::from_map({{"Bird", 4}, {"Penguin", 2}, {"Fly", 0}, {"Has_Wings", 5}, {"Has_Feather", 5},
                           {"Black", 4}, {"Red", 0}},
                          5)};
  const auto pref = induced_preference(m, Concept::atom("Bird"), Algebra(AlgebraKind::kGoedel, 5));
  EXPECT_TRUE(pref.less(0, 1));
  EXPECT_TRUE(check_coherent(m, kb));
}

// Pairwise definitions, quadratic and literal.
bool pairwise(std::span<const Valuation> model, const WeightedKB& kb, bool both_directions) {
  const Algebra alg(kb.algebra, kb.n);
  for (const auto& ci : kb.distinguished()) {
    for (const auto& x : model) {
      for (const auto& y : model) {
        const bool pref = x.at(ci).numerator() > y.at(ci).numerator();
        const bool heavier = weight_W(x, ci, kb) > weight_W(y, ci, kb);
        if (pref && !heavier) return false;
        if (both_directions && heavier && !pref) return false;
      }
    }
  }
  return true;
}

TEST(CoherentFaithful, MatchPairwiseDefinitionsOnRandomModels) {
  std::mt19937_64 rng(5);
  int coherent = 0;
  int faithful = 0;
  for (int i = 0; i < 400; ++i) {
    const WeightedKB kb = testing::random_kb(rng);
    const auto vocab = std::make_shared<const Vocabulary>(kb.concept_names);
    std::vector<Valuation> model;
    const int size = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int e = 0; e < size; ++e) {
      std::vector<int> nums;
      for (std::size_t k = 0; k < vocab->size(); ++k) nums.push_back(std::uniform_int_distribution<int>(0, kb.n)(rng));
      model.emplace_back(vocab, kb.n, nums);
    }
    ASSERT_EQ(check_coherent(model, kb), pairwise(model, kb, true));
    ASSERT_EQ(check_faithful(model, kb), pairwise(model, kb, false));
    coherent += check_coherent(model, kb) ? 1 : 0;
    faithful += check_faithful(model, kb) ? 1 : 0;
  }
  // Both outcomes occur, so the comparison is not vacuous.
  EXPECT_GT(coherent, 0);
  EXPECT_LT(faithful, 400);
}

TEST(CoherentFaithful, PhiNCoherentModelsAreFaithful) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 150; ++i) {
    const WeightedKB kb = testing::random_kb(rng);
    const FeasibleSet f = enumerate_feasible(kb);
    EXPECT_TRUE(check_faithful(f.valuations, kb)) << serialize_kb(kb);
  }
}

// Rounding to n levels merges distinct weight sums into one degree, so a
// phi_n-coherent model need not be coherent even for a strictly increasing phi.
TEST(CoherentFaithful, PhiNCoherenceDoesNotImplyCoherence) {
  WeightedKB kb;
  kb.n = 2;
  kb.precision = 0;
  kb.concept_names = {"A", "B"};
  kb.typicality_tbox["B"] = {{"B", Concept::atom("A"), 2}};
  ASSERT_TRUE(kb.phi.strictly_increasing());
  const FeasibleSet f = enumerate_feasible(kb);
  ASSERT_EQ(f.valuations.size(), 3u);
  // A = 0 and A = 1 both give B = 1/2 with weight sums 0 and 2.
  EXPECT_EQ(f.valuations[0].at("B"), f.valuations[1].at("B"));
  EXPECT_NE(weight_sum(f.valuations[0], "B", kb), weight_sum(f.valuations[1], "B", kb));
  EXPECT_TRUE(check_faithful(f.valuations, kb));
  EXPECT_FALSE(check_coherent(f.valuations, kb));
}

}  // namespace
}  // namespace typik
