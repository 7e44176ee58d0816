#pragma once

#include <string>
#include <vector>

#include "typik/entailment.hpp"
#include "typik/error.hpp"

namespace typik {

/// {entailed, mode, typical_degree, witness, stats} as pretty-printed JSON.
std::string verdict_to_json(const EntailmentVerdict& verdict);
std::string verdict_to_text(const EntailmentVerdict& verdict, const TypicalityQuery& query);

std::string models_to_json(const std::vector<AnnotatedModel>& models);
std::string models_to_text(const std::vector<AnnotatedModel>& models);

std::string satisfiability_to_json(const SatisfiabilityResult& result);
std::string satisfiability_to_text(const SatisfiabilityResult& result);

std::string diagnostics_to_json(const std::vector<Diagnostic>& diagnostics);

/// {"error": {"kind": ..., "message": ..., "diagnostics": [...]}}
std::string error_to_json(const Error& error);

}  // namespace typik
