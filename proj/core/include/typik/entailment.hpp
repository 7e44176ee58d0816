#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "typik/algebra.hpp"
#include "typik/kb.hpp"

namespace typik {

inline constexpr std::uint64_t kDefaultNodeCap = 100'000'000;

struct EnumerationOptions {
  enum class Strategy {
    kAuto,         // feedforward propagation when applicable, search otherwise
    kSearch,       // pruned depth-first assignment
    kFeedforward,  // requires an acyclic KB whose non-inputs are all distinguished
  };

  Strategy strategy = Strategy::kAuto;
  std::uint64_t node_cap = kDefaultNodeCap;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// The valuations realised by some phi_n-coherent model of the KB: they satisfy
/// every strict TBox axiom and the phi_n-coherence equation of every
/// distinguished concept. Sorted lexicographically on numerators.
struct FeasibleSet {
  std::shared_ptr<const Vocabulary> vocabulary;
  int n = 1;
  std::vector<Valuation> valuations;
  std::uint64_t nodes_visited = 0;
  bool used_feedforward = false;
};

FeasibleSet enumerate_feasible(const WeightedKB& kb, const EnumerationOptions& options = {});

/// True when propagate_feedforward's preconditions hold.
bool feedforward_applicable(const WeightedKB& kb);

/// Concepts treated as inputs by the feedforward path: the declared inputs,
/// or the non-distinguished concepts when none are declared.
std::set<std::string> effective_inputs(const WeightedKB& kb);

struct FeedforwardResult {
  std::optional<Valuation> valuation;
  /// Index into strict_tbox of the first violated axiom when rejected.
  std::optional<std::size_t> rejected_by;
};

/// Extends an assignment of the input concepts by C_i := phi_n(weight_sum) in
/// topological order. Throws PreconditionError on cyclic dependencies or
/// undistinguished non-inputs and when an input is missing or out of range.
FeedforwardResult propagate_feedforward(const WeightedKB& kb, const std::map<std::string, int>& inputs);

struct EntailmentStats {
  std::uint64_t valuations_checked = 0;
  std::uint64_t feasible_count = 0;
  std::optional<double> elapsed_ms;
};

struct EntailmentVerdict {
  enum class Mode { kProper, kVacuousEmptyTypical, kVacuousUnsatisfiable };

  bool entailed = true;
  Mode mode = Mode::kProper;
  /// A typical subject element whose property degree violates the query.
  std::optional<Valuation> witness;
  std::optional<TruthDegree> witness_degree;
  /// Maximal subject degree among feasible valuations.
  std::optional<TruthDegree> typical_degree;
  EntailmentStats stats;
};

std::string_view to_string(EntailmentVerdict::Mode mode);

struct SatisfiabilityResult {
  bool satisfiable = false;
  /// Lexicographically least feasible valuation per individual.
  std::map<std::string, Valuation> sample;
  std::string reason;
  std::uint64_t feasible_count = 0;
};

SatisfiabilityResult check_satisfiable(const WeightedKB& kb, const EnumerationOptions& options = {});

/// phi_n-coherent entailment of T(C) ⊑ D rel alpha: D holds in every
/// <_C-minimal C-element of every canonical phi_n-coherent model.
EntailmentVerdict entails(const WeightedKB& kb, const TypicalityQuery& query,
                          const EnumerationOptions& options = {});

/// Same decision over a precomputed feasible set (for sweeps over many queries).
EntailmentVerdict entails_over(const WeightedKB& kb, const FeasibleSet& feasible, const TypicalityQuery& query);

struct ModelAnnotation {
  std::string concept_name;
  std::int64_t weight_sum;
  TruthDegree phi_n;
};

struct AnnotatedModel {
  Valuation valuation;
  std::vector<ModelAnnotation> annotations;
};

/// First `limit` feasible valuations in canonical order with their per
/// distinguished concept weight sums and phi_n values.
std::vector<AnnotatedModel> list_models(const WeightedKB& kb, std::size_t limit,
                                        const EnumerationOptions& options = {});

}  // namespace typik
