#include "typik/compiled_kb.hpp"

#include <algorithm>

namespace typik {
namespace {

const WeightedKB& checked(const WeightedKB& kb) {
  require_valid(kb);
  return kb;
}

}  // namespace

CompiledKB::CompiledKB(const WeightedKB& kb)
    : kb_(std::make_shared<const WeightedKB>(checked(kb))),
      vocabulary_(std::make_shared<const Vocabulary>(kb.concept_names)),
      algebra_(kb.algebra, kb.n),
      phi_n_(compute_thresholds(kb.phi, kb.n, kb.precision)) {
  const std::size_t m = vocabulary_->size();
  slot_of_.assign(m, std::nullopt);
  for (const auto& [ci, inclusions] : kb.typicality_tbox) {
    Distinguished d{*vocabulary_->index_of(ci), {}, {}};
    for (const auto& inc : inclusions) {
      d.terms.push_back({CompiledConcept(inc.body, *vocabulary_), inc.weight});
      const auto& atoms = d.terms.back().body.atom_indices();
      d.body_atoms.insert(d.body_atoms.end(), atoms.begin(), atoms.end());
    }
    std::sort(d.body_atoms.begin(), d.body_atoms.end());
    d.body_atoms.erase(std::unique(d.body_atoms.begin(), d.body_atoms.end()), d.body_atoms.end());
    slot_of_[d.concept_index] = distinguished_.size();
    distinguished_.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < kb.strict_tbox.size(); ++i) {
    const auto& ax = kb.strict_tbox[i];
    axioms_.push_back({CompiledConcept(ax.lhs, *vocabulary_), CompiledConcept(ax.rhs, *vocabulary_), ax.rel, ax.alpha, i});
  }
  is_input_.assign(m, false);
  if (kb.input_concepts) {
    for (const auto& in : *kb.input_concepts) is_input_[*vocabulary_->index_of(in)] = true;
  }
  domains_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (is_input_[i] && kb.binary_inputs) {
      domains_[i] = {0, kb.n};
    } else {
      for (int v = 0; v <= kb.n; ++v) domains_[i].push_back(v);
    }
  }
  individuals_.assign(kb.individuals.begin(), kb.individuals.end());
  assertions_.resize(individuals_.size());
  for (const auto& as : kb.abox) {
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(individuals_.begin(), individuals_.end(), as.individual) - individuals_.begin());
    assertions_[pos].push_back({CompiledConcept(as.concept_expr, *vocabulary_), as.rel, as.alpha});
  }
}

std::optional<std::size_t> CompiledKB::distinguished_slot(std::size_t concept_index) const {
  return slot_of_.at(concept_index);
}

std::int64_t CompiledKB::weight_sum(const Distinguished& d, std::span<const int> numerators) const {
  std::int64_t sum = 0;
  for (const auto& t : d.terms) sum += t.weight * t.body.eval(numerators, algebra_);
  return sum;
}

bool CompiledKB::axiom_holds(const Axiom& a, std::span<const int> numerators) const {
  const int degree = algebra_.implication(a.lhs.eval(numerators, algebra_), a.rhs.eval(numerators, algebra_));
  return holds(degree, algebra_.resolution(), a.rel, a.alpha);
}

bool CompiledKB::coherent_at(const Distinguished& d, std::span<const int> numerators) const {
  return numerators[d.concept_index] == phi_n_.level(weight_sum(d, numerators));
}

bool CompiledKB::individual_accepts(std::size_t individual, std::span<const int> numerators) const {
  for (const auto& a : assertions_.at(individual)) {
    if (!holds(a.concept_expr.eval(numerators, algebra_), algebra_.resolution(), a.rel, a.alpha)) return false;
  }
  return true;
}

}  // namespace typik
