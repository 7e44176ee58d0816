#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "typik/kb.hpp"

namespace typik {

/// Parses a KB document (JSON) and validates it. Throws ParseError for shape
/// problems and ValidationError for invariant violations.
WeightedKB parse_kb(std::string_view document);
WeightedKB load_kb_file(const std::filesystem::path& path);

/// Parses without running validate_kb; shape errors still throw.
WeightedKB parse_kb_unchecked(std::string_view document);

/// Canonical JSON serialization (stable key order, two-space indent).
std::string serialize_kb(const WeightedKB& kb);

/// Surface concept syntax: `a & b | !c`, parentheses, `top`, `bot`.
/// Precedence: ! binds tightest, then &, then |; binary operators associate left.
Concept parse_concept_expr(std::string_view text);

/// Query syntax: `T(<expr>) -> <expr> <rel> <decimal>`; `::` may replace `->`.
TypicalityQuery parse_query(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace typik
