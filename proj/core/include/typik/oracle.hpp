#pragma once

#include <cstdint>
#include <vector>

#include "typik/entailment.hpp"

namespace typik {

inline constexpr std::uint64_t kOracleCap = 10'000'000;

/// Every valuation of the full space, filtered with no pruning, no feedforward
/// shortcut and phi_n taken from phi_n_direct instead of precomputed thresholds.
/// Throws ResourceError when the space exceeds `cap`.
std::vector<Valuation> brute_force_feasible(const WeightedKB& kb, std::uint64_t cap = kOracleCap);

/// Independent oracle for entails(): same contract, computed from
/// brute_force_feasible with straightforward set operations.
EntailmentVerdict brute_force_entails(const WeightedKB& kb, const TypicalityQuery& query,
                                      std::uint64_t cap = kOracleCap);

}  // namespace typik
