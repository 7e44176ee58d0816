#include "typik/kb_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "json_decimal.hpp"

namespace typik {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

std::string decimal_text(const json& j, const std::string& where) {
  auto text = detail::json_decimal_text(j);
  if (!text) fail(where, "expected a decimal number");
  return *text;
}

Rational parse_rational(const json& j, const std::string& where) {
  try {
    return Rational::parse_decimal(decimal_text(j, where));
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

Concept parse_concept_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "top") return Concept::top();
    if (s == "bot") return Concept::bottom();
    if (s.starts_with("T(")) fail(where, "typicality operator is only allowed on the left of a typicality inclusion");
    if (is_valid_name(s)) return Concept::atom(s);
    try {
      return parse_concept_expr(s);
    } catch (const ParseError& e) {
      fail(where, e.what());
    }
  }
  if (!j.is_object() || j.size() != 1) fail(where, "concept expression must be a string or a single-key object");
  const auto it = j.begin();
  const std::string key = it.key();
  const json& value = it.value();
  if (key == "and" || key == "or") {
    if (!value.is_array() || value.size() != 2) fail(where, "'" + key + "' takes exactly two operands");
    auto lhs = parse_concept_json(value[0], where + "." + key + "[0]");
    auto rhs = parse_concept_json(value[1], where + "." + key + "[1]");
    return key == "and" ? Concept::conj(std::move(lhs), std::move(rhs)) : Concept::disj(std::move(lhs), std::move(rhs));
  }
  if (key == "neg") return Concept::neg(parse_concept_json(value, where + ".neg"));
  if (key == "T" || key == "typ" || key == "typicality") {
    fail(where, "typicality operator is only allowed on the left of a typicality inclusion");
  }
  fail(where, "unknown concept constructor '" + key + "'");
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) fail(where, "unknown key '" + key + "'");
  }
}

int parse_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1'000'000'000 || v > 1'000'000'000) fail(where, "integer out of range");
  return static_cast<int>(v);
}

std::set<std::string> parse_name_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of names");
  std::set<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(where, "expected a name");
    out.insert(e.get<std::string>());
  }
  return out;
}

Relation parse_rel(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "relation must be a string");
  auto rel = parse_relation(j.get<std::string>());
  if (!rel) fail(where, "unknown relation '" + j.get<std::string>() + "'");
  return *rel;
}

PhiConfig parse_phi(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto kind = require(j, "kind", where);
  if (kind == "logistic") {
    reject_unknown_keys(j, {"kind", "gain"}, where);
    return PhiConfig::logistic(j.contains("gain") ? parse_rational(j["gain"], where + ".gain") : Rational{1, 1});
  }
  if (kind == "clamped-linear") {
    reject_unknown_keys(j, {"kind", "slope", "offset"}, where);
    return PhiConfig::clamped_linear(parse_rational(require(j, "slope", where), where + ".slope"),
                                     parse_rational(require(j, "offset", where), where + ".offset"));
  }
  fail(where, "unknown phi kind " + kind.dump());
}

ordered_json decimal_json(const std::string& text) {
  std::size_t significant = 0;
  for (char c : text) significant += (c >= '0' && c <= '9') ? 1 : 0;
  if (text.find('/') != std::string::npos || significant > 15) return text;
  if (text.find('.') == std::string::npos) return std::stoll(text);
  return std::stod(text);
}

ordered_json concept_json(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::kAtom: return c.name();
    case Concept::Kind::kTop: return "top";
    case Concept::Kind::kBottom: return "bot";
    case Concept::Kind::kAnd: return ordered_json{{"and", ordered_json::array({concept_json(c.lhs()), concept_json(c.rhs())})}};
    case Concept::Kind::kOr: return ordered_json{{"or", ordered_json::array({concept_json(c.lhs()), concept_json(c.rhs())})}};
    case Concept::Kind::kNeg: return ordered_json{{"neg", concept_json(c.lhs())}};
  }
  return nullptr;
}

}  // namespace

WeightedKB parse_kb_unchecked(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected a JSON object");
  reject_unknown_keys(doc,
                      {"n", "algebra", "precision", "phi", "concepts", "individuals", "inputs", "binary_inputs",
                       "tbox", "typicality", "abox"},
                      "document");

  WeightedKB kb;
  kb.n = parse_int(require(doc, "n", "document"), "n");
  if (doc.contains("algebra")) {
    if (!doc["algebra"].is_string()) fail("algebra", "expected a string");
    auto alg = parse_algebra_kind(doc["algebra"].get<std::string>());
    if (!alg) fail("algebra", "unknown algebra '" + doc["algebra"].get<std::string>() + "'");
    kb.algebra = *alg;
  }
  if (doc.contains("precision")) kb.precision = parse_int(doc["precision"], "precision");
  if (kb.precision < 0 || kb.precision > kMaxPrecision) fail("precision", "must be in [0, 9]");
  if (doc.contains("phi")) kb.phi = parse_phi(doc["phi"], "phi");
  kb.concept_names = parse_name_list(require(doc, "concepts", "document"), "concepts");
  if (doc.contains("individuals")) kb.individuals = parse_name_list(doc["individuals"], "individuals");
  if (doc.contains("inputs")) kb.input_concepts = parse_name_list(doc["inputs"], "inputs");
  if (doc.contains("binary_inputs")) {
    if (!doc["binary_inputs"].is_boolean()) fail("binary_inputs", "expected a boolean");
    kb.binary_inputs = doc["binary_inputs"].get<bool>();
  }

  if (doc.contains("tbox")) {
    const auto& tbox = doc["tbox"];
    if (!tbox.is_array()) fail("tbox", "expected a list");
    for (std::size_t i = 0; i < tbox.size(); ++i) {
      const std::string where = "tbox[" + std::to_string(i) + "]";
      const auto& ax = tbox[i];
      if (!ax.is_object()) fail(where, "expected an object");
      reject_unknown_keys(ax, {"lhs", "rhs", "rel", "alpha"}, where);
      StrictInclusion inc;
      inc.lhs = parse_concept_json(require(ax, "lhs", where), where + ".lhs");
      inc.rhs = parse_concept_json(require(ax, "rhs", where), where + ".rhs");
      inc.rel = ax.contains("rel") ? parse_rel(ax["rel"], where + ".rel") : Relation::kGe;
      inc.alpha = ax.contains("alpha") ? parse_rational(ax["alpha"], where + ".alpha") : Rational{1, 1};
      kb.strict_tbox.push_back(std::move(inc));
    }
  }

  if (doc.contains("typicality")) {
    const auto& typ = doc["typicality"];
    if (!typ.is_object()) fail("typicality", "expected an object keyed by distinguished concept");
    for (const auto& [subject, list] : typ.items()) {
      const std::string where = "typicality." + subject;
      if (!list.is_array()) fail(where, "expected a list of weighted inclusions");
      auto& slot = kb.typicality_tbox[subject];
      for (std::size_t h = 0; h < list.size(); ++h) {
        const std::string at = where + "[" + std::to_string(h) + "]";
        const auto& e = list[h];
        if (!e.is_object()) fail(at, "expected an object");
        reject_unknown_keys(e, {"body", "weight"}, at);
        WeightedTypicalityInclusion inc;
        inc.subject = subject;
        inc.body = parse_concept_json(require(e, "body", at), at + ".body");
        try {
          inc.weight = parse_scaled_decimal(decimal_text(require(e, "weight", at), at + ".weight"), kb.precision);
        } catch (const ParseError& err) {
          fail(at + ".weight", err.what());
        }
        slot.push_back(std::move(inc));
      }
    }
  }

  if (doc.contains("abox")) {
    const auto& abox = doc["abox"];
    if (!abox.is_array()) fail("abox", "expected a list");
    for (std::size_t i = 0; i < abox.size(); ++i) {
      const std::string where = "abox[" + std::to_string(i) + "]";
      const auto& as = abox[i];
      if (!as.is_object()) fail(where, "expected an object");
      reject_unknown_keys(as, {"concept", "individual", "rel", "alpha"}, where);
      Assertion a;
      a.concept_expr = parse_concept_json(require(as, "concept", where), where + ".concept");
      const auto& ind = require(as, "individual", where);
      if (!ind.is_string()) fail(where + ".individual", "expected a name");
      a.individual = ind.get<std::string>();
      a.rel = as.contains("rel") ? parse_rel(as["rel"], where + ".rel") : Relation::kGe;
      a.alpha = as.contains("alpha") ? parse_rational(as["alpha"], where + ".alpha") : Rational{1, 1};
      kb.abox.push_back(std::move(a));
    }
  }
  return kb;
}

WeightedKB parse_kb(std::string_view document) {
  WeightedKB kb = parse_kb_unchecked(document);
  require_valid(kb);
  return kb;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

WeightedKB load_kb_file(const std::filesystem::path& path) { return parse_kb(read_text_file(path)); }

std::string serialize_kb(const WeightedKB& kb) {
  ordered_json doc;
  doc["n"] = kb.n;
  doc["algebra"] = std::string(to_string(kb.algebra));
  doc["precision"] = kb.precision;
  ordered_json phi;
  if (kb.phi.kind == PhiConfig::Kind::kLogistic) {
    phi["kind"] = "logistic";
    phi["gain"] = decimal_json(kb.phi.gain.to_string());
  } else {
    phi["kind"] = "clamped-linear";
    phi["slope"] = decimal_json(kb.phi.slope.to_string());
    phi["offset"] = decimal_json(kb.phi.offset.to_string());
  }
  doc["phi"] = phi;
  doc["concepts"] = kb.concept_names;
  doc["individuals"] = kb.individuals;
  if (kb.input_concepts) doc["inputs"] = *kb.input_concepts;
  doc["binary_inputs"] = kb.binary_inputs;
  ordered_json tbox = ordered_json::array();
  for (const auto& ax : kb.strict_tbox) {
    tbox.push_back({{"lhs", concept_json(ax.lhs)},
                    {"rhs", concept_json(ax.rhs)},
                    {"rel", std::string(to_string(ax.rel))},
                    {"alpha", decimal_json(ax.alpha.to_string())}});
  }
  doc["tbox"] = tbox;
  ordered_json typ = ordered_json::object();
  for (const auto& [subject, inclusions] : kb.typicality_tbox) {
    ordered_json list = ordered_json::array();
    for (const auto& inc : inclusions) {
      list.push_back({{"body", concept_json(inc.body)},
                      {"weight", decimal_json(format_scaled_decimal(inc.weight, kb.precision))}});
    }
    typ[subject] = list;
  }
  doc["typicality"] = typ;
  ordered_json abox = ordered_json::array();
  for (const auto& as : kb.abox) {
    abox.push_back({{"concept", concept_json(as.concept_expr)},
                    {"individual", as.individual},
                    {"rel", std::string(to_string(as.rel))},
                    {"alpha", decimal_json(as.alpha.to_string())}});
  }
  doc["abox"] = abox;
  return doc.dump(2) + "\n";
}

}  // namespace typik
