#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "typik/concept.hpp"
#include "typik/error.hpp"
#include "typik/rational.hpp"

namespace typik {

enum class AlgebraKind { kGoedel, kLukasiewicz };

std::string_view to_string(AlgebraKind kind);
std::optional<AlgebraKind> parse_algebra_kind(std::string_view text);

/// The activation function phi: R -> [0,1] used for phi-coherence.
struct PhiConfig {
  enum class Kind { kLogistic, kClampedLinear };

  Kind kind = Kind::kLogistic;
  Rational gain{1, 1};    // logistic: 1 / (1 + exp(-gain * x))
  Rational slope{1, 1};   // clamped-linear: clamp(slope * x + offset, 0, 1)
  Rational offset{0, 1};

  static PhiConfig logistic(Rational gain = {1, 1});
  static PhiConfig clamped_linear(Rational slope, Rational offset);

  /// True for logistic with positive gain.
  bool strictly_increasing() const noexcept;
  /// True for logistic with positive gain or clamped-linear with slope >= 0.
  bool monotone_non_decreasing() const noexcept;

  /// "logistic(gain=1)" / "clamped-linear(slope=1,offset=0)".
  std::string to_string() const;

  bool operator==(const PhiConfig&) const = default;
};

/// C ⊑ D rel alpha, with rel restricted to >= and >.
struct StrictInclusion {
  Concept lhs;
  Concept rhs;
  Relation rel = Relation::kGe;
  Rational alpha{1, 1};

  bool operator==(const StrictInclusion&) const = default;
};

/// C(a) rel alpha.
struct Assertion {
  Concept concept_expr;
  std::string individual;
  Relation rel = Relation::kGe;
  Rational alpha{1, 1};

  bool operator==(const Assertion&) const = default;
};

/// (T(subject) ⊑ body, weight) with the weight scaled by 10^precision.
struct WeightedTypicalityInclusion {
  std::string subject;
  Concept body;
  std::int64_t weight = 0;

  bool operator==(const WeightedTypicalityInclusion&) const = default;
};

/// T(subject) ⊑ property rel alpha.
struct TypicalityQuery {
  Concept subject;
  Concept property;
  Relation rel = Relation::kGe;
  Rational alpha{1, 1};

  std::string to_string() const;
  bool operator==(const TypicalityQuery&) const = default;
};

struct WeightedKB {
  int n = 1;
  AlgebraKind algebra = AlgebraKind::kGoedel;
  int precision = 3;
  PhiConfig phi;
  std::vector<StrictInclusion> strict_tbox;
  /// Keys are the distinguished concepts.
  std::map<std::string, std::vector<WeightedTypicalityInclusion>> typicality_tbox;
  std::vector<Assertion> abox;
  std::set<std::string> concept_names;
  std::set<std::string> individuals;
  std::optional<std::set<std::string>> input_concepts;
  bool binary_inputs = false;

  std::set<std::string> distinguished() const;
  bool is_distinguished(const std::string& name) const { return typicality_tbox.contains(name); }
  std::size_t typicality_count() const;

  bool operator==(const WeightedKB&) const = default;
};

inline constexpr int kMaxResolution = 10000;
inline constexpr int kMaxPrecision = 9;
/// Upper bound on sum_h |w_h| * n per distinguished concept; keeps every
/// weight sum exact in 64-bit arithmetic.
inline constexpr std::int64_t kMaxWeightMagnitude = std::int64_t{1} << 62;

/// One diagnostic per violated invariant; empty iff the KB is valid.
std::vector<Diagnostic> validate_kb(const WeightedKB& kb);

/// Throws ValidationError carrying the diagnostics of validate_kb, if any.
void require_valid(const WeightedKB& kb);

/// Diagnostics for a query against a KB (unknown atoms, alpha outside [0,1]).
std::vector<Diagnostic> validate_query(const WeightedKB& kb, const TypicalityQuery& query);

}  // namespace typik
