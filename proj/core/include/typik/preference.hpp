#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "typik/algebra.hpp"
#include "typik/kb.hpp"
#include "typik/phi.hpp"

namespace typik {

/// W_i(x): a finite scaled sum, or -inf for elements outside C_i.
/// -inf is below every finite value and equal to itself.
class ElementWeight {
 public:
  static constexpr ElementWeight finite(std::int64_t value) { return ElementWeight(value); }
  static constexpr ElementWeight neg_infinity() { return ElementWeight(); }

  constexpr bool is_neg_infinity() const noexcept { return !value_.has_value(); }
  /// Precondition: !is_neg_infinity().
  constexpr std::int64_t value() const { return *value_; }

  std::string to_string() const;

  constexpr bool operator==(const ElementWeight&) const = default;
  constexpr std::strong_ordering operator<=>(const ElementWeight& other) const {
    if (is_neg_infinity() || other.is_neg_infinity()) {
      return other.is_neg_infinity() <=> is_neg_infinity();
    }
    return *value_ <=> *other.value_;
  }

 private:
  constexpr ElementWeight() = default;
  constexpr explicit ElementWeight(std::int64_t v) : value_(v) {}

  std::optional<std::int64_t> value_;
};

/// sum_h w_h * numerator(D_h(v)) for the inclusions of `ci`; units are
/// weight * 10^k * n. Throws PreconditionError if `ci` is not distinguished.
std::int64_t weight_sum(const Valuation& v, const std::string& ci, const WeightedKB& kb);

/// -inf if C_i(v) = 0, weight_sum otherwise.
ElementWeight weight_W(const Valuation& v, const std::string& ci, const WeightedKB& kb);

/// x <_C y iff C(x) > C(y), over indices into the input set.
struct InducedPreference {
  std::vector<int> degrees;
  /// Indices grouped by equal degree, groups in descending degree order.
  std::vector<std::vector<std::size_t>> strata;

  bool less(std::size_t x, std::size_t y) const { return degrees.at(x) > degrees.at(y); }
};

InducedPreference induced_preference(std::span<const Valuation> vs, const Concept& c, const Algebra& alg);

/// Indices of the valuations with maximal positive C-degree; empty iff every
/// valuation has degree 0.
std::vector<std::size_t> typical_elements(std::span<const Valuation> vs, const Concept& c, const Algebra& alg);

/// C_i(v) = phi_n(weight_sum(v, C_i)) for every distinguished C_i.
bool check_phi_coherent(const Valuation& v, const WeightedKB& kb, const PhiN& pn);

/// For every C_i and all x, y in the model: x <_{C_i} y <=> W_i(x) > W_i(y).
bool check_coherent(std::span<const Valuation> model, const WeightedKB& kb);

/// For every C_i and all x, y in the model: x <_{C_i} y => W_i(x) > W_i(y).
bool check_faithful(std::span<const Valuation> model, const WeightedKB& kb);

}  // namespace typik
