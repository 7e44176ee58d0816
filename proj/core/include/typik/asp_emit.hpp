#pragma once

#include <string>
#include <vector>

#include "typik/kb.hpp"

namespace typik {

/// ASP encoding of phi_n-coherent entailment for one KB and query, split into
/// the sections it is printed in.
struct AspProgram {
  std::vector<std::string> facts;
  std::vector<std::string> rules;
  std::vector<std::string> constraints;
  std::vector<std::string> query;

  std::string to_string() const;
};

struct AspEmitOptions {
  /// Emit the single #sum aggregate weight rule instead of one rule per
  /// distinguished concept.
  bool aggregate_weights = false;
};

/// Throws PreconditionError for TBox relations other than >= and >, and
/// ValidationError for invalid KBs or queries.
AspProgram emit_program(const WeightedKB& kb, const TypicalityQuery& query, const AspEmitOptions& options = {});

/// The concept-wise asprin preference program with its optimize directive.
std::string emit_preference();

/// ASP term for a name taken in isolation: the name with its first letter
/// lower-cased, or a quoted string when that is not a plain constant or is a
/// word the encoding reserves. emit_program additionally quotes names whose
/// lower-cased form collides with another name of the KB.
std::string asp_constant(const std::string& name);

}  // namespace typik
