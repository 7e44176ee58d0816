#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace typik {

/// Boolean concept over atomic names: atoms, top, bottom, conjunction,
/// disjunction and negation. Typicality is not a concept constructor; it only
/// appears at the top level of axioms and queries.
///
/// Concepts are immutable and share structure, so copies are cheap.
class Concept {
 public:
  enum class Kind { kAtom, kTop, kBottom, kAnd, kOr, kNeg };

  /// top
  Concept();

  static Concept atom(std::string name);
  static Concept top();
  static Concept bottom();
  static Concept conj(Concept lhs, Concept rhs);
  static Concept disj(Concept lhs, Concept rhs);
  static Concept neg(Concept operand);

  Kind kind() const noexcept;
  /// Atom name; empty for non-atoms.
  const std::string& name() const noexcept;
  /// Left child of And/Or, operand of Neg.
  const Concept& lhs() const;
  const Concept& rhs() const;

  /// Concept names occurring in the expression.
  std::set<std::string> atoms() const;
  void collect_atoms(std::set<std::string>& out) const;

  /// Surface syntax: `a & (b | !c)`, `top`, `bot`.
  std::string to_string() const;

  bool operator==(const Concept& other) const;

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Reserved words that cannot be used as concept names.
bool is_reserved_concept_word(std::string_view name);

/// Identifier shape accepted for concept and individual names:
/// `[A-Za-z_][A-Za-z0-9_]*`.
bool is_valid_name(std::string_view name);

}  // namespace typik
