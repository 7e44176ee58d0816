#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace typik {

/// Comparison used by axioms, assertions and queries: `value rel alpha`.
enum class Relation { kGe, kGt, kLe, kLt };

std::string_view to_string(Relation rel);
std::optional<Relation> parse_relation(std::string_view text);

/// Exact rational with a positive denominator, always kept reduced.
/// Built from decimal literals; used for thresholds and phi parameters.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  /// Parses `[-+]digits[.digits]`. At most 18 significant digits.
  static Rational parse_decimal(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Decimal rendering when the denominator divides a power of ten, `p/q` otherwise.
  std::string to_string() const;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// True iff (lhs_num / lhs_den) rel alpha, compared by cross-multiplication.
bool holds(std::int64_t lhs_num, std::int64_t lhs_den, Relation rel, const Rational& alpha);

/// Parses a decimal literal into an integer scaled by 10^precision.
/// Throws ParseError if the literal carries more than `precision` non-zero
/// fractional digits or the scaled value does not fit in 62 bits.
std::int64_t parse_scaled_decimal(std::string_view text, int precision);

/// Rounds a decimal literal half away from zero to `precision` fractional digits.
std::int64_t round_scaled_decimal(std::string_view text, int precision);

/// Renders `scaled / 10^precision` as a decimal literal with exactly `precision` digits.
std::string format_scaled_decimal(std::int64_t scaled, int precision);

}  // namespace typik
