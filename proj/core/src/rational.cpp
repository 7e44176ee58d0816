#include "typik/rational.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

#include "typik/error.hpp"

#include "int128.hpp"

namespace typik {

namespace {

constexpr int kMaxDigits = 18;

struct DecimalParts {
  bool negative = false;
  std::string integral;
  std::string fraction;
};

DecimalParts split_decimal(std::string_view text) {
  DecimalParts parts;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    parts.negative = text[i] == '-';
    ++i;
  }
  bool dot = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !dot) {
      dot = true;
    } else if (c >= '0' && c <= '9') {
      (dot ? parts.fraction : parts.integral).push_back(c);
    } else {
      throw ParseError("malformed decimal literal '" + std::string(text) + "'");
    }
  }
  if (parts.integral.empty() && parts.fraction.empty()) {
    throw ParseError("malformed decimal literal '" + std::string(text) + "'");
  }
  if (dot && parts.fraction.empty()) {
    throw ParseError("malformed decimal literal '" + std::string(text) + "'");
  }
  // leading zeros carry no information
  const auto first = parts.integral.find_first_not_of('0');
  parts.integral = first == std::string::npos ? "" : parts.integral.substr(first);
  return parts;
}

std::int64_t digits_to_int(const std::string& digits) {
  std::int64_t v = 0;
  for (char c : digits) v = v * 10 + (c - '0');
  return v;
}

std::int64_t pow10(int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

std::string_view to_string(Relation rel) {
  switch (rel) {
    case Relation::kGe: return ">=";
    case Relation::kGt: return ">";
    case Relation::kLe: return "<=";
    case Relation::kLt: return "<";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view text) {
  if (text == ">=") return Relation::kGe;
  if (text == ">") return Relation::kGt;
  if (text == "<=") return Relation::kLe;
  if (text == "<") return Relation::kLt;
  return std::nullopt;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse_decimal(std::string_view text) {
  DecimalParts parts = split_decimal(text);
  // trailing fractional zeros do not change the value
  while (!parts.fraction.empty() && parts.fraction.back() == '0') parts.fraction.pop_back();
  if (parts.integral.size() + parts.fraction.size() > kMaxDigits) {
    throw ParseError("decimal literal '" + std::string(text) + "' has more than 18 significant digits");
  }
  std::int64_t num = digits_to_int(parts.integral + parts.fraction);
  if (parts.negative) num = -num;
  return Rational(num, pow10(static_cast<int>(parts.fraction.size())));
}

std::string Rational::to_string() const {
  std::int64_t den = den_;
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  const int digits = std::max(twos, fives);
  if (den != 1 || digits > kMaxDigits) return std::to_string(num_) + "/" + std::to_string(den_);
  const detail::Int128 scaled = static_cast<detail::Int128>(num_) * (pow10(digits) / den_);
  if (scaled > std::numeric_limits<std::int64_t>::max() || scaled < std::numeric_limits<std::int64_t>::min()) {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  return format_scaled_decimal(static_cast<std::int64_t>(scaled), digits);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  const detail::Int128 lhs = static_cast<detail::Int128>(num_) * other.den_;
  const detail::Int128 rhs = static_cast<detail::Int128>(other.num_) * den_;
  return lhs <=> rhs;
}

bool holds(std::int64_t lhs_num, std::int64_t lhs_den, Relation rel, const Rational& alpha) {
  const detail::Int128 lhs = static_cast<detail::Int128>(lhs_num) * alpha.den();
  const detail::Int128 rhs = static_cast<detail::Int128>(alpha.num()) * lhs_den;
  switch (rel) {
    case Relation::kGe: return lhs >= rhs;
    case Relation::kGt: return lhs > rhs;
    case Relation::kLe: return lhs <= rhs;
    case Relation::kLt: return lhs < rhs;
  }
  return false;
}

std::int64_t parse_scaled_decimal(std::string_view text, int precision) {
  DecimalParts parts = split_decimal(text);
  while (static_cast<int>(parts.fraction.size()) > precision) {
    if (parts.fraction.back() != '0') {
      throw ParseError("weight '" + std::string(text) + "' has more than " + std::to_string(precision) +
                       " decimal places");
    }
    parts.fraction.pop_back();
  }
  parts.fraction.append(static_cast<std::size_t>(precision) - parts.fraction.size(), '0');
  const std::string digits = parts.integral + parts.fraction;
  if (digits.size() > kMaxDigits) {
    throw ParseError("weight '" + std::string(text) + "' overflows the scaled integer range");
  }
  const std::int64_t v = digits_to_int(digits);
  if (v >= (std::int64_t{1} << 62)) {
    throw ParseError("weight '" + std::string(text) + "' overflows the scaled integer range");
  }
  return parts.negative ? -v : v;
}

std::int64_t round_scaled_decimal(std::string_view text, int precision) {
  DecimalParts parts = split_decimal(text);
  bool round_up = false;
  if (static_cast<int>(parts.fraction.size()) > precision) {
    round_up = parts.fraction[static_cast<std::size_t>(precision)] >= '5';
    parts.fraction.resize(static_cast<std::size_t>(precision));
  }
  parts.fraction.append(static_cast<std::size_t>(precision) - parts.fraction.size(), '0');
  const std::string digits = parts.integral + parts.fraction;
  if (digits.size() > kMaxDigits) {
    throw ParseError("weight '" + std::string(text) + "' overflows the scaled integer range");
  }
  std::int64_t v = digits_to_int(digits) + (round_up ? 1 : 0);
  if (v >= (std::int64_t{1} << 62)) {
    throw ParseError("weight '" + std::string(text) + "' overflows the scaled integer range");
  }
  return parts.negative ? -v : v;
}

std::string format_scaled_decimal(std::int64_t scaled, int precision) {
  const bool negative = scaled < 0;
  // magnitude as unsigned to survive INT64_MIN
  std::uint64_t mag = negative ? 0 - static_cast<std::uint64_t>(scaled) : static_cast<std::uint64_t>(scaled);
  std::string digits = std::to_string(mag);
  if (precision > 0) {
    if (static_cast<int>(digits.size()) <= precision) {
      digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
  }
  return (negative ? "-" : "") + digits;
}

}  // namespace typik
