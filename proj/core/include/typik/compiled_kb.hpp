#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "typik/algebra.hpp"
#include "typik/kb.hpp"
#include "typik/phi.hpp"

namespace typik {

/// Index-resolved form of a validated KB shared by the enumeration engine,
/// the feedforward propagator and the annotations of list_models.
class CompiledKB {
 public:
  struct Term {
    CompiledConcept body;
    std::int64_t weight;
  };
  struct Distinguished {
    std::size_t concept_index;
    std::vector<Term> terms;
    /// Atoms of all bodies (sorted, unique).
    std::vector<std::size_t> body_atoms;
  };
  struct Axiom {
    CompiledConcept lhs;
    CompiledConcept rhs;
    Relation rel;
    Rational alpha;
    std::size_t source;  // position in strict_tbox
  };
  struct CompiledAssertion {
    CompiledConcept concept_expr;
    Relation rel;
    Rational alpha;
  };

  explicit CompiledKB(const WeightedKB& kb);

  const WeightedKB& kb() const noexcept { return *kb_; }
  const std::shared_ptr<const Vocabulary>& vocabulary() const noexcept { return vocabulary_; }
  const Algebra& algebra() const noexcept { return algebra_; }
  const PhiN& phi_n() const noexcept { return phi_n_; }
  const std::vector<Distinguished>& distinguished() const noexcept { return distinguished_; }
  const std::vector<Axiom>& axioms() const noexcept { return axioms_; }
  /// Per vocabulary index: position in distinguished(), if any.
  std::optional<std::size_t> distinguished_slot(std::size_t concept_index) const;
  /// Per vocabulary index: whether the concept is a declared input.
  bool is_input(std::size_t concept_index) const { return is_input_.at(concept_index); }
  /// Values a concept may take: {0, n} for binary inputs, 0..n otherwise.
  const std::vector<int>& domain(std::size_t concept_index) const { return domains_.at(concept_index); }

  /// Assertions grouped per individual (individual order = sorted names).
  const std::vector<std::string>& individuals() const noexcept { return individuals_; }
  const std::vector<CompiledAssertion>& assertions_of(std::size_t individual) const {
    return assertions_.at(individual);
  }

  std::int64_t weight_sum(const Distinguished& d, std::span<const int> numerators) const;
  bool axiom_holds(const Axiom& a, std::span<const int> numerators) const;
  bool coherent_at(const Distinguished& d, std::span<const int> numerators) const;
  bool individual_accepts(std::size_t individual, std::span<const int> numerators) const;

 private:
  std::shared_ptr<const WeightedKB> kb_;
  std::shared_ptr<const Vocabulary> vocabulary_;
  Algebra algebra_;
  PhiN phi_n_;
  std::vector<Distinguished> distinguished_;
  std::vector<std::optional<std::size_t>> slot_of_;
  std::vector<Axiom> axioms_;
  std::vector<bool> is_input_;
  std::vector<std::vector<int>> domains_;
  std::vector<std::string> individuals_;
  std::vector<std::vector<CompiledAssertion>> assertions_;
};

}  // namespace typik
