#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "typik/concept.hpp"
#include "typik/degree.hpp"
#include "typik/kb.hpp"

namespace typik {

/// Truth functions of the finitely many-valued Goedel or Lukasiewicz logic.
/// Degrees are passed as numerators v of v/n; results stay in [0, n].
class Algebra {
 public:
  constexpr Algebra(AlgebraKind kind, int n) : kind_(kind), n_(n) {}

  constexpr AlgebraKind kind() const noexcept { return kind_; }
  constexpr int resolution() const noexcept { return n_; }

  constexpr int t_norm(int a, int b) const noexcept {
    if (kind_ == AlgebraKind::kGoedel) return a < b ? a : b;
    const int s = a + b - n_;
    return s > 0 ? s : 0;
  }
  constexpr int s_norm(int a, int b) const noexcept {
    if (kind_ == AlgebraKind::kGoedel) return a > b ? a : b;
    const int s = a + b;
    return s < n_ ? s : n_;
  }
  constexpr int implication(int a, int b) const noexcept {
    if (kind_ == AlgebraKind::kGoedel) return a <= b ? n_ : b;
    const int s = n_ - a + b;
    return s < n_ ? s : n_;
  }
  constexpr int negation(int a) const noexcept { return n_ - a; }

  TruthDegree t_norm(TruthDegree a, TruthDegree b) const { return {t_norm(a.numerator(), b.numerator()), n_}; }
  TruthDegree s_norm(TruthDegree a, TruthDegree b) const { return {s_norm(a.numerator(), b.numerator()), n_}; }
  TruthDegree implication(TruthDegree a, TruthDegree b) const {
    return {implication(a.numerator(), b.numerator()), n_};
  }
  TruthDegree negation(TruthDegree a) const { return {negation(a.numerator()), n_}; }

 private:
  AlgebraKind kind_;
  int n_;
};

/// Sorted, duplicate-free list of concept names; position = concept index.
class Vocabulary {
 public:
  explicit Vocabulary(const std::set<std::string>& names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Vocabulary&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Total assignment of a degree in {0, 1/n, ..., 1} to every concept name of a
/// vocabulary. Stands in for a domain element: LC semantics is per element,
/// so an element is determined by its valuation.
class Valuation {
 public:
  Valuation(std::shared_ptr<const Vocabulary> vocabulary, int n, std::vector<int> numerators);

  /// Convenience: builds the vocabulary from the map keys.
  static Valuation from_map(const std::map<std::string, int>& numerators, int n);

  int resolution() const noexcept { return n_; }
  const Vocabulary& vocabulary() const noexcept { return *vocabulary_; }
  const std::shared_ptr<const Vocabulary>& shared_vocabulary() const noexcept { return vocabulary_; }
  std::span<const int> numerators() const noexcept { return numerators_; }
  int numerator(std::size_t index) const { return numerators_.at(index); }

  /// Throws UnknownAtomError when `name` is not in the vocabulary.
  TruthDegree at(std::string_view name) const;
  std::map<std::string, TruthDegree> to_map() const;

  /// Same vocabulary and degrees. Ordering is lexicographic on numerators.
  bool operator==(const Valuation& other) const;
  std::strong_ordering operator<=>(const Valuation& other) const;

 private:
  std::shared_ptr<const Vocabulary> vocabulary_;
  int n_;
  std::vector<int> numerators_;
};

/// Structural evaluation of a concept at a valuation.
TruthDegree eval_concept(const Concept& concept_expr, const Valuation& v, const Algebra& alg);

/// Per-element contribution eval(lhs) ▷ eval(rhs) to the degree of lhs ⊑ rhs.
TruthDegree inclusion_degree_at(const Concept& lhs, const Concept& rhs, const Valuation& v, const Algebra& alg);

/// eval(a.concept_expr, v) rel alpha, exactly.
bool assertion_satisfied(const Assertion& a, const Valuation& v, const Algebra& alg);

/// Concept flattened to postfix with resolved atom indices; the form used in
/// enumeration inner loops.
class CompiledConcept {
 public:
  /// Throws UnknownAtomError.
  CompiledConcept(const Concept& concept_expr, const Vocabulary& vocabulary);

  int eval(std::span<const int> numerators, const Algebra& alg) const;

  /// Atom indices the value depends on (sorted, unique).
  const std::vector<std::size_t>& atom_indices() const noexcept { return atoms_; }

 private:
  enum class Op : unsigned char { kAtom, kTop, kBottom, kAnd, kOr, kNeg };
  struct Instr {
    Op op;
    std::size_t atom;
  };
  void emit(const Concept& c, const Vocabulary& vocabulary);

  std::vector<Instr> code_;
  std::vector<std::size_t> atoms_;
  std::size_t max_depth_ = 0;
};

}  // namespace typik
