#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "typik/kb.hpp"

namespace typik {

/// Layered feedforward network with weights and biases scaled by 10^precision.
struct Network {
  struct Unit {
    std::string name;
    int layer;  // 1-based; inputs are layer 0
  };
  struct Edge {
    std::string from;
    std::string to;
    std::int64_t weight;
  };

  int precision = 3;
  std::vector<std::string> inputs;
  std::vector<Unit> units;
  /// In document order: per unit, incoming edges in `weights_in` order.
  std::vector<Edge> edges;
  std::map<std::string, std::int64_t> biases;

  std::vector<Edge> incoming(const std::string& unit) const;

  bool operator==(const Network&) const = default;
};

/// Document: { precision, inputs: [..], layers: [ { units: [ { name, bias,
/// weights_in: { from: w } } ] } ] }. Weights are rounded half away from zero
/// to `precision` decimals. Throws ParseError on malformed documents, dangling
/// references, duplicate names and cycles.
Network load_network(std::string_view document);
Network load_network_file(const std::filesystem::path& path);

struct ImportOptions {
  int n = 1;
  AlgebraKind algebra = AlgebraKind::kGoedel;
  PhiConfig phi;
  bool binary_inputs = true;
};

/// One concept per unit; T(C_i) ⊑ C_h with weight w_ih per edge h -> i and
/// T(C_i) ⊑ top with weight b_i per nonzero bias.
WeightedKB network_to_kb(const Network& net, const ImportOptions& options);

}  // namespace typik
