#pragma once

#include <cassert>
#include <compare>
#include <string>

#include "typik/rational.hpp"

namespace typik {

/// A membership degree v/n on the chain {0, 1/n, ..., 1}.
class TruthDegree {
 public:
  constexpr TruthDegree(int numerator, int resolution) : value_(numerator), n_(resolution) {
    assert(resolution >= 1 && numerator >= 0 && numerator <= resolution);
  }

  static constexpr TruthDegree zero(int n) { return {0, n}; }
  static constexpr TruthDegree one(int n) { return {n, n}; }

  constexpr int numerator() const noexcept { return value_; }
  constexpr int resolution() const noexcept { return n_; }

  bool satisfies(Relation rel, const Rational& alpha) const { return holds(value_, n_, rel, alpha); }

  /// "v/n".
  std::string to_string() const { return std::to_string(value_) + "/" + std::to_string(n_); }

  constexpr bool operator==(const TruthDegree&) const = default;
  constexpr std::strong_ordering operator<=>(const TruthDegree& other) const {
    assert(n_ == other.n_);
    return value_ <=> other.value_;
  }

 private:
  int value_;
  int n_;
};

}  // namespace typik
