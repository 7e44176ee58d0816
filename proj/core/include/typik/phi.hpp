#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "typik/degree.hpp"
#include "typik/kb.hpp"

namespace typik {

/// Boundary k_j on the scaled weight axis (raw weight * 10^k * n). A scaled
/// sum W is above band j iff W > k_j. Infinite boundaries stand for levels phi
/// never crosses (+inf) or always exceeds (-inf).
class Threshold {
 public:
  enum class Kind { kNegInfinity, kFinite, kPosInfinity };

  static constexpr Threshold finite(std::int64_t value) { return {Kind::kFinite, value}; }
  static constexpr Threshold neg_infinity() { return {Kind::kNegInfinity, 0}; }
  static constexpr Threshold pos_infinity() { return {Kind::kPosInfinity, 0}; }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::kFinite; }
  constexpr std::int64_t value() const noexcept { return value_; }

  constexpr bool exceeded_by(std::int64_t w) const noexcept {
    switch (kind_) {
      case Kind::kNegInfinity: return true;
      case Kind::kPosInfinity: return false;
      case Kind::kFinite: break;
    }
    return w > value_;
  }

  /// "-inf", "+inf" or the integer.
  std::string to_string() const;

  constexpr bool operator==(const Threshold&) const = default;
  std::strong_ordering operator<=>(const Threshold& other) const;

 private:
  constexpr Threshold(Kind kind, std::int64_t value) : kind_(kind), value_(value) {}

  Kind kind_;
  std::int64_t value_;
};

/// Nearest-value approximation of phi on {0, 1/n, ..., 1}, stored as the
/// boundaries k_1 <= ... <= k_n, one per half level (2j-1)/(2n). phi_n(W) = j/n
/// where j counts the boundaries W exceeds.
class PhiN {
 public:
  PhiN(int n, int precision, std::vector<Threshold> thresholds);

  int resolution() const noexcept { return n_; }
  int precision() const noexcept { return precision_; }
  const std::vector<Threshold>& thresholds() const noexcept { return thresholds_; }

  /// Numerator of phi_n(w / (n * 10^k)) by integer comparison only.
  int level(std::int64_t scaled_sum) const noexcept;

 private:
  int n_;
  int precision_;
  std::vector<Threshold> thresholds_;
};

/// k_j = floor(n * 10^k * phi^{-1}((2j-1)/(2n))) for j = 1..n. Logistic
/// inverses are bracketed with directed-rounding interval arithmetic and the
/// working precision is doubled until both ends floor to the same integer.
PhiN compute_thresholds(const PhiConfig& phi, int n, int precision);

TruthDegree phi_n_apply(const PhiN& pn, std::int64_t scaled_sum);

/// phi(x) in double precision; for diagnostics, plots and tests.
double phi_evaluate(const PhiConfig& phi, double x);

/// Level of phi_n(W / (n * 10^k)) derived by evaluating phi forward in high
/// precision and applying nearest-value rounding (values exactly on a half
/// level round down). Shares no code with compute_thresholds.
int phi_n_direct(const PhiConfig& phi, int n, int precision, std::int64_t scaled_sum);

}  // namespace typik
