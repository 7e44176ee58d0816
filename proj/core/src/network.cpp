#include "typik/network.hpp"

#include <functional>
#include <set>

#include "json.hpp"
#include "json_decimal.hpp"
#include "typik/concept.hpp"
#include "typik/error.hpp"
#include "typik/kb_io.hpp"
#include "typik/rational.hpp"

namespace typik {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

std::int64_t scaled_weight(const Json& j, int precision, const std::string& where) {
  const auto text = detail::json_decimal_text(j);
  if (!text) fail(where, "malformed weight");
  try {
    return round_scaled_decimal(*text, precision);
  } catch (const ParseError& e) {
    fail(where, std::string("malformed weight: ") + e.what());
  }
}

void reject_unknown_keys(const Json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(where, "unknown key '" + key + "'");
  }
}

std::string unit_name(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a unit name");
  auto name = j.get<std::string>();
  if (!is_valid_name(name)) fail(where, "invalid unit name '" + name + "'");
  return name;
}

}  // namespace

std::vector<Network::Edge> Network::incoming(const std::string& unit) const {
  std::vector<Edge> out;
  for (const auto& e : edges) {
    if (e.to == unit) out.push_back(e);
  }
  return out;
}

Network load_network(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("network: ") + e.what());
  }
  if (!doc.is_object()) fail("network", "expected an object");
  reject_unknown_keys(doc, {"precision", "inputs", "layers"}, "network");

  Network net;
  if (doc.contains("precision")) {
    const auto& p = doc["precision"];
    if (!p.is_number_integer() || p.get<int>() < 0 || p.get<int>() > kMaxPrecision) {
      fail("network.precision", "expected an integer in [0, " + std::to_string(kMaxPrecision) + "]");
    }
    net.precision = p.get<int>();
  }
  if (!doc.contains("inputs") || !doc["inputs"].is_array()) fail("network.inputs", "expected an array of names");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < doc["inputs"].size(); ++i) {
    const std::string where = "network.inputs[" + std::to_string(i) + "]";
    auto name = unit_name(doc["inputs"][i], where);
    if (!seen.insert(name).second) fail(where, "duplicate unit '" + name + "'");
    net.inputs.push_back(std::move(name));
  }
  if (!doc.contains("layers") || !doc["layers"].is_array()) fail("network.layers", "expected an array of layers");
  const auto& layers = doc["layers"];
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const std::string lw = "network.layers[" + std::to_string(l) + "]";
    if (!layers[l].is_object()) fail(lw, "expected an object");
    reject_unknown_keys(layers[l], {"units"}, lw);
    if (!layers[l].contains("units") || !layers[l]["units"].is_array()) fail(lw + ".units", "expected an array");
    const auto& units = layers[l]["units"];
    for (std::size_t u = 0; u < units.size(); ++u) {
      const std::string uw = lw + ".units[" + std::to_string(u) + "]";
      const auto& unit = units[u];
      if (!unit.is_object()) fail(uw, "expected an object");
      reject_unknown_keys(unit, {"name", "bias", "weights_in"}, uw);
      if (!unit.contains("name")) fail(uw, "missing key 'name'");
      auto name = unit_name(unit["name"], uw + ".name");
      if (!seen.insert(name).second) fail(uw + ".name", "duplicate unit '" + name + "'");
      net.units.push_back({name, static_cast<int>(l) + 1});
      net.biases[name] = unit.contains("bias") ? scaled_weight(unit["bias"], net.precision, uw + ".bias") : 0;
      if (unit.contains("weights_in")) {
        const auto& w = unit["weights_in"];
        if (!w.is_object()) fail(uw + ".weights_in", "expected an object");
        for (const auto& [from, value] : w.items()) {
          net.edges.push_back({from, name, scaled_weight(value, net.precision, uw + ".weights_in." + from)});
        }
      }
    }
  }

  for (const auto& e : net.edges) {
    if (!seen.contains(e.from)) fail("network", "edge from unknown unit '" + e.from + "' to '" + e.to + "'");
  }
  // Edges may point back to units of the same or a later layer; reject cycles.
  std::map<std::string, int> state;
  std::function<void(const std::string&)> visit = [&](const std::string& u) {
    state[u] = 1;
    for (const auto& e : net.edges) {
      if (e.to != u) continue;
      if (state[e.from] == 1) fail("network", "cycle through unit '" + e.from + "'");
      if (state[e.from] == 0) visit(e.from);
    }
    state[u] = 2;
  };
  for (const auto& u : net.units) {
    if (state[u.name] == 0) visit(u.name);
  }
  return net;
}

Network load_network_file(const std::filesystem::path& path) { return load_network(read_text_file(path)); }

WeightedKB network_to_kb(const Network& net, const ImportOptions& options) {
  WeightedKB kb;
  kb.n = options.n;
  kb.algebra = options.algebra;
  kb.precision = net.precision;
  kb.phi = options.phi;
  kb.binary_inputs = options.binary_inputs;
  for (const auto& name : net.inputs) {
    if (is_reserved_concept_word(name)) throw ValidationError({{"network.inputs", "reserved name '" + name + "'"}});
    kb.concept_names.insert(name);
  }
  kb.input_concepts = std::set<std::string>(net.inputs.begin(), net.inputs.end());
  for (const auto& unit : net.units) {
    if (is_reserved_concept_word(unit.name)) {
      throw ValidationError({{"network.units", "reserved name '" + unit.name + "'"}});
    }
    kb.concept_names.insert(unit.name);
    auto& inclusions = kb.typicality_tbox[unit.name];
    for (const auto& e : net.incoming(unit.name)) {
      inclusions.push_back({unit.name, Concept::atom(e.from), e.weight});
    }
    const auto bias = net.biases.find(unit.name);
    if (bias != net.biases.end() && bias->second != 0) {
      inclusions.push_back({unit.name, Concept::top(), bias->second});
    }
  }
  require_valid(kb);
  return kb;
}

}  // namespace typik
