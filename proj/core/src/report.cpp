#include "typik/report.hpp"

#include <sstream>

#include "json.hpp"

namespace typik {
namespace {

using Json = nlohmann::ordered_json;

Json valuation_json(const Valuation& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.vocabulary().size(); ++i) {
    out[v.vocabulary().name(i)] = TruthDegree(v.numerator(i), v.resolution()).to_string();
  }
  return out;
}

std::string valuation_text(const Valuation& v) {
  std::string out;
  for (std::size_t i = 0; i < v.vocabulary().size(); ++i) {
    if (i > 0) out += ' ';
    out += v.vocabulary().name(i) + '=' + TruthDegree(v.numerator(i), v.resolution()).to_string();
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string verdict_to_json(const EntailmentVerdict& verdict) {
  Json j;
  j["entailed"] = verdict.entailed;
  j["mode"] = std::string(to_string(verdict.mode));
  j["typical_degree"] = verdict.typical_degree ? Json(verdict.typical_degree->to_string()) : Json(nullptr);
  j["witness"] = verdict.witness ? valuation_json(*verdict.witness) : Json(nullptr);
  Json stats;
  stats["valuations_checked"] = verdict.stats.valuations_checked;
  stats["feasible_count"] = verdict.stats.feasible_count;
  stats["elapsed_ms"] = verdict.stats.elapsed_ms ? Json(*verdict.stats.elapsed_ms) : Json(nullptr);
  j["stats"] = stats;
  return dump(j);
}

std::string verdict_to_text(const EntailmentVerdict& verdict, const TypicalityQuery& query) {
  std::ostringstream out;
  out << query.to_string() << ": " << (verdict.entailed ? "entailed" : "not entailed") << " ("
      << to_string(verdict.mode) << ")\n";
  if (verdict.typical_degree) out << "typical degree: " << verdict.typical_degree->to_string() << "\n";
  if (verdict.witness) {
    out << "witness: " << valuation_text(*verdict.witness) << "\n";
    if (verdict.witness_degree) out << "property degree at witness: " << verdict.witness_degree->to_string() << "\n";
  }
  out << "feasible valuations: " << verdict.stats.feasible_count << ", nodes: " << verdict.stats.valuations_checked
      << "\n";
  if (verdict.stats.elapsed_ms) out << "elapsed: " << *verdict.stats.elapsed_ms << " ms\n";
  return out.str();
}

std::string models_to_json(const std::vector<AnnotatedModel>& models) {
  Json arr = Json::array();
  for (const auto& m : models) {
    Json item;
    item["valuation"] = valuation_json(m.valuation);
    Json ann = Json::object();
    for (const auto& a : m.annotations) {
      ann[a.concept_name] = Json{{"weight_sum", a.weight_sum}, {"phi_n", a.phi_n.to_string()}};
    }
    item["distinguished"] = ann;
    arr.push_back(item);
  }
  return dump(Json{{"count", models.size()}, {"models", arr}});
}

std::string models_to_text(const std::vector<AnnotatedModel>& models) {
  std::ostringstream out;
  for (std::size_t i = 0; i < models.size(); ++i) {
    out << "#" << i + 1 << " " << valuation_text(models[i].valuation) << "\n";
    for (const auto& a : models[i].annotations) {
      out << "    " << a.concept_name << ": W=" << a.weight_sum << " phi_n=" << a.phi_n.to_string() << "\n";
    }
  }
  out << models.size() << " model(s)\n";
  return out.str();
}

std::string satisfiability_to_json(const SatisfiabilityResult& result) {
  Json j;
  j["satisfiable"] = result.satisfiable;
  j["feasible_count"] = result.feasible_count;
  Json sample = Json::object();
  for (const auto& [name, v] : result.sample) sample[name] = valuation_json(v);
  j["sample"] = sample;
  j["reason"] = result.reason.empty() ? Json(nullptr) : Json(result.reason);
  return dump(j);
}

std::string satisfiability_to_text(const SatisfiabilityResult& result) {
  std::ostringstream out;
  out << (result.satisfiable ? "satisfiable" : "unsatisfiable") << " (" << result.feasible_count
      << " feasible valuations)\n";
  for (const auto& [name, v] : result.sample) out << name << ": " << valuation_text(v) << "\n";
  if (!result.reason.empty()) out << result.reason << "\n";
  return out.str();
}

namespace {

Json diagnostics_array(const std::vector<Diagnostic>& diagnostics) {
  Json arr = Json::array();
  for (const auto& d : diagnostics) arr.push_back(Json{{"location", d.location}, {"message", d.message}});
  return arr;
}

}  // namespace

std::string diagnostics_to_json(const std::vector<Diagnostic>& diagnostics) {
  return dump(Json{{"valid", diagnostics.empty()}, {"diagnostics", diagnostics_array(diagnostics)}});
}

std::string error_to_json(const Error& error) {
  std::vector<Diagnostic> diagnostics;
  if (const auto* v = dynamic_cast<const ValidationError*>(&error)) diagnostics = v->diagnostics();
  Json inner;
  inner["kind"] = error.kind();
  inner["message"] = error.what();
  inner["diagnostics"] = diagnostics_array(diagnostics);
  return Json{{"error", inner}}.dump() + "\n";
}

}  // namespace typik
