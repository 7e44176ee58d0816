#include <gtest/gtest.h>

#include "networks.hpp"
#include "typik/entailment.hpp"
#include "typik/error.hpp"
#include "typik/kb_io.hpp"
#include "typik/network.hpp"

namespace typik {
namespace {

const ImportOptions kGoedel3{3, AlgebraKind::kGoedel, PhiConfig::logistic(), true};

TEST(Network, Monk1Topology) {
  const Network net = load_network(testing::monk1_network_json());
  EXPECT_EQ(net.precision, 1);
  EXPECT_EQ(net.inputs.size(), 17u);
  ASSERT_EQ(net.units.size(), 4u);
  EXPECT_EQ(net.units[0].layer, 1);
  EXPECT_EQ(net.units[3].name, "o");
  EXPECT_EQ(net.units[3].layer, 2);
  EXPECT_EQ(net.edges.size(), 3u * 17u + 3u);
  EXPECT_EQ(net.biases.at("h1"), -150);
  const auto in = net.incoming("h1");
  ASSERT_EQ(in.size(), 17u);
  EXPECT_EQ(in[11].from, "i12");
  EXPECT_EQ(in[11].weight, 200);
}

TEST(Network, ImportedKbShape) {
  const Network net = load_network(testing::monk1_network_json());
  const WeightedKB kb = network_to_kb(net, kGoedel3);
  EXPECT_TRUE(validate_kb(kb).empty());
  EXPECT_EQ(kb.concept_names.size(), 21u);
  EXPECT_EQ(kb.distinguished(), (std::set<std::string>{"h1", "h2", "h3", "o"}));
  EXPECT_EQ(*kb.input_concepts, std::set<std::string>(net.inputs.begin(), net.inputs.end()));
  std::size_t nonzero_biases = 0;
  for (const auto& [_, b] : net.biases) nonzero_biases += b != 0;
  EXPECT_EQ(kb.typicality_count(), net.edges.size() + nonzero_biases);
  const auto& o = kb.typicality_tbox.at("o");
  ASSERT_EQ(o.size(), 4u);
  EXPECT_EQ(o[0].body, Concept::atom("h1"));
  EXPECT_EQ(o[3].body, Concept::top());
  EXPECT_EQ(o[3].weight, -100);
  EXPECT_TRUE(feedforward_applicable(kb));
}

TEST(Network, TrivialAndBiasOnly) {
  const Network net = load_network(R"({"precision": 3, "inputs": [],
      "layers": [{"units": [{"name": "u", "bias": 0.5}, {"name": "v", "bias": -0.7}, {"name": "w"}]}]})");
  EXPECT_EQ(net.biases.at("u"), 500);
  EXPECT_EQ(net.biases.at("v"), -700);
  EXPECT_EQ(net.biases.at("w"), 0);
  const WeightedKB kb = network_to_kb(net, kGoedel3);
  EXPECT_EQ(kb.typicality_tbox.at("u").size(), 1u);
  EXPECT_TRUE(kb.typicality_tbox.at("w").empty());
}

TEST(Network, WeightsRoundHalfAwayFromZero) {
  const Network net = load_network(R"({"precision": 1, "inputs": ["x"],
      "layers": [{"units": [{"name": "u", "bias": -0.25, "weights_in": {"x": 0.35}}]}]})");
  EXPECT_EQ(net.biases.at("u"), -3);
  EXPECT_EQ(net.edges.at(0).weight, 4);
}

TEST(Network, StructuralErrors) {
  EXPECT_THROW(load_network(R"({"precision": 1, "inputs": ["x"],
      "layers": [{"units": [{"name": "u", "weights_in": {"y": 1}}]}]})"),
               ParseError);
  EXPECT_THROW(load_network(R"({"precision": 1, "inputs": ["x"],
      "layers": [{"units": [{"name": "u", "weights_in": {"v": 1}}, {"name": "v", "weights_in": {"u": 1}}]}]})"),
               ParseError);
  EXPECT_THROW(load_network(R"({"precision": 1, "inputs": ["x", "x"], "layers": []})"), ParseError);
  EXPECT_THROW(load_network(R"({"precision": 1, "inputs": ["x"], "layers": [], "extra": 1})"), ParseError);
  EXPECT_THROW(load_network(R"({"precision": 12, "inputs": [], "layers": []})"), ParseError);
  EXPECT_THROW(load_network("[1,2"), ParseError);
}

TEST(Network, ReservedNamesCannotBecomeConcepts) {
  const Network net = load_network(R"({"precision": 0, "inputs": ["top"], "layers": []})");
  EXPECT_THROW(network_to_kb(net, kGoedel3), ValidationError);
}

TEST(Network, ImportedKbRoundTripsThroughJson) {
  const WeightedKB kb = network_to_kb(load_network(testing::monk6_network_json()), kGoedel3);
  EXPECT_EQ(parse_kb(serialize_kb(kb)), kb);
}

}  // namespace
}  // namespace typik
