#include "typik/kb.hpp"

#include <sstream>

#include "int128.hpp"

namespace typik {

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream out;
  for (const auto& d : diagnostics) out << d.location << ": " << d.message << "\n";
  return out.str();
}

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : Error("invalid knowledge base:\n" + format_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::string_view to_string(AlgebraKind kind) {
  return kind == AlgebraKind::kGoedel ? "goedel" : "lukasiewicz";
}

std::optional<AlgebraKind> parse_algebra_kind(std::string_view text) {
  if (text == "goedel" || text == "godel" || text == "g") return AlgebraKind::kGoedel;
  if (text == "lukasiewicz" || text == "l") return AlgebraKind::kLukasiewicz;
  return std::nullopt;
}

PhiConfig PhiConfig::logistic(Rational gain) {
  PhiConfig phi;
  phi.kind = Kind::kLogistic;
  phi.gain = gain;
  return phi;
}

PhiConfig PhiConfig::clamped_linear(Rational slope, Rational offset) {
  PhiConfig phi;
  phi.kind = Kind::kClampedLinear;
  phi.slope = slope;
  phi.offset = offset;
  return phi;
}

bool PhiConfig::strictly_increasing() const noexcept {
  return kind == Kind::kLogistic && gain.num() > 0;
}

bool PhiConfig::monotone_non_decreasing() const noexcept {
  return kind == Kind::kLogistic ? gain.num() > 0 : slope.num() >= 0;
}

std::string PhiConfig::to_string() const {
  if (kind == Kind::kLogistic) return "logistic(gain=" + gain.to_string() + ")";
  return "clamped-linear(slope=" + slope.to_string() + ",offset=" + offset.to_string() + ")";
}

std::string TypicalityQuery::to_string() const {
  return "T(" + subject.to_string() + ") -> " + property.to_string() + " " + std::string(typik::to_string(rel)) +
         " " + alpha.to_string();
}

std::set<std::string> WeightedKB::distinguished() const {
  std::set<std::string> out;
  for (const auto& [name, _] : typicality_tbox) out.insert(name);
  return out;
}

std::size_t WeightedKB::typicality_count() const {
  std::size_t count = 0;
  for (const auto& [_, inclusions] : typicality_tbox) count += inclusions.size();
  return count;
}

namespace {

bool in_unit_interval(const Rational& r) { return r.num() >= 0 && r.num() <= r.den(); }

void check_atoms(const Concept& c, const WeightedKB& kb, const std::string& where, std::vector<Diagnostic>& out) {
  for (const auto& a : c.atoms()) {
    if (!kb.concept_names.contains(a)) out.push_back({where, "unknown atom '" + a + "'"});
  }
}

}  // namespace

std::vector<Diagnostic> validate_kb(const WeightedKB& kb) {
  std::vector<Diagnostic> out;
  if (kb.n < 1 || kb.n > kMaxResolution) {
    out.push_back({"n", "resolution must be in [1, " + std::to_string(kMaxResolution) + "], got " +
                            std::to_string(kb.n)});
  }
  if (kb.precision < 0 || kb.precision > kMaxPrecision) {
    out.push_back({"precision", "precision must be in [0, " + std::to_string(kMaxPrecision) + "]"});
  }
  if (!kb.phi.monotone_non_decreasing()) {
    out.push_back({"phi", kb.phi.kind == PhiConfig::Kind::kLogistic ? "logistic gain must be positive"
                                                                    : "clamped-linear slope must be non-negative"});
  }
  for (const auto& name : kb.concept_names) {
    if (!is_valid_name(name)) out.push_back({"concepts", "invalid concept name '" + name + "'"});
    if (is_reserved_concept_word(name)) out.push_back({"concepts", "'" + name + "' is a reserved word"});
  }
  for (const auto& name : kb.individuals) {
    if (!is_valid_name(name)) out.push_back({"individuals", "invalid individual name '" + name + "'"});
  }

  for (std::size_t i = 0; i < kb.strict_tbox.size(); ++i) {
    const auto& ax = kb.strict_tbox[i];
    const std::string where = "tbox[" + std::to_string(i) + "]";
    check_atoms(ax.lhs, kb, where, out);
    check_atoms(ax.rhs, kb, where, out);
    if (ax.rel != Relation::kGe && ax.rel != Relation::kGt) {
      out.push_back({where, "relation '" + std::string(to_string(ax.rel)) +
                                "' is not supported for inclusions (only >= and >)"});
    }
    if (!in_unit_interval(ax.alpha)) out.push_back({where, "alpha " + ax.alpha.to_string() + " outside [0,1]"});
  }

  for (const auto& [subject, inclusions] : kb.typicality_tbox) {
    const std::string where = "typicality." + subject;
    if (!kb.concept_names.contains(subject)) out.push_back({where, "unknown distinguished concept '" + subject + "'"});
    detail::Int128 magnitude = 0;
    for (std::size_t h = 0; h < inclusions.size(); ++h) {
      const auto& inc = inclusions[h];
      const std::string at = where + "[" + std::to_string(h) + "]";
      if (inc.subject != subject) out.push_back({at, "subject '" + inc.subject + "' filed under '" + subject + "'"});
      check_atoms(inc.body, kb, at, out);
      magnitude += static_cast<detail::Int128>(inc.weight < 0 ? -static_cast<detail::Int128>(inc.weight) : inc.weight);
    }
    if (magnitude * (kb.n < 1 ? 1 : kb.n) >= kMaxWeightMagnitude) {
      out.push_back({where, "sum of scaled weight magnitudes times n exceeds 2^62"});
    }
  }

  for (std::size_t i = 0; i < kb.abox.size(); ++i) {
    const auto& as = kb.abox[i];
    const std::string where = "abox[" + std::to_string(i) + "]";
    check_atoms(as.concept_expr, kb, where, out);
    if (!kb.individuals.contains(as.individual)) {
      out.push_back({where, "undeclared individual '" + as.individual + "'"});
    }
    if (!in_unit_interval(as.alpha)) out.push_back({where, "alpha " + as.alpha.to_string() + " outside [0,1]"});
  }

  if (kb.input_concepts) {
    for (const auto& in : *kb.input_concepts) {
      if (!kb.concept_names.contains(in)) out.push_back({"inputs", "unknown input concept '" + in + "'"});
      if (kb.is_distinguished(in)) out.push_back({"inputs", "input concept '" + in + "' is distinguished"});
    }
  }
  return out;
}

void require_valid(const WeightedKB& kb) {
  auto diagnostics = validate_kb(kb);
  if (!diagnostics.empty()) throw ValidationError(std::move(diagnostics));
}

std::vector<Diagnostic> validate_query(const WeightedKB& kb, const TypicalityQuery& query) {
  std::vector<Diagnostic> out;
  check_atoms(query.subject, kb, "query.subject", out);
  check_atoms(query.property, kb, "query.property", out);
  if (!in_unit_interval(query.alpha)) out.push_back({"query", "alpha " + query.alpha.to_string() + " outside [0,1]"});
  return out;
}

}  // namespace typik
