#include "typik/oracle.hpp"

#include <algorithm>

#include "typik/error.hpp"
#include "typik/phi.hpp"

namespace typik {
namespace {

std::vector<int> values_for(const WeightedKB& kb, const std::string& name) {
  const bool binary = kb.binary_inputs && kb.input_concepts && kb.input_concepts->contains(name);
  if (binary) return {0, kb.n};
  std::vector<int> out;
  for (int v = 0; v <= kb.n; ++v) out.push_back(v);
  return out;
}

bool feasible(const Valuation& v, const WeightedKB& kb, const Algebra& alg) {
  for (const auto& ax : kb.strict_tbox) {
    const TruthDegree d = inclusion_degree_at(ax.lhs, ax.rhs, v, alg);
    if (!d.satisfies(ax.rel, ax.alpha)) return false;
  }
  for (const auto& [ci, inclusions] : kb.typicality_tbox) {
    std::int64_t sum = 0;
    for (const auto& inc : inclusions) sum += inc.weight * eval_concept(inc.body, v, alg).numerator();
    if (v.at(ci).numerator() != phi_n_direct(kb.phi, kb.n, kb.precision, sum)) return false;
  }
  return true;
}

}  // namespace

std::vector<Valuation> brute_force_feasible(const WeightedKB& kb, std::uint64_t cap) {
  require_valid(kb);
  const auto vocabulary = std::make_shared<const Vocabulary>(kb.concept_names);
  std::vector<std::vector<int>> domains;
  std::uint64_t space = 1;
  for (const auto& name : vocabulary->names()) {
    domains.push_back(values_for(kb, name));
    space *= domains.back().size();
    if (space > cap) throw ResourceError("brute-force space exceeds " + std::to_string(cap) + " valuations");
  }
  const Algebra alg(kb.algebra, kb.n);
  std::vector<Valuation> out;
  std::vector<int> values(domains.size());
  for (std::uint64_t code = 0; code < space; ++code) {
    std::uint64_t rest = code;
    for (std::size_t i = domains.size(); i-- > 0;) {
      values[i] = domains[i][rest % domains[i].size()];
      rest /= domains[i].size();
    }
    Valuation v(vocabulary, kb.n, values);
    if (feasible(v, kb, alg)) out.push_back(std::move(v));
  }
  return out;
}

EntailmentVerdict brute_force_entails(const WeightedKB& kb, const TypicalityQuery& query, std::uint64_t cap) {
  const auto models = brute_force_feasible(kb, cap);
  const Algebra alg(kb.algebra, kb.n);
  EntailmentVerdict verdict;
  verdict.stats.feasible_count = models.size();

  bool unsatisfiable = models.empty();
  for (const auto& individual : kb.individuals) {
    bool found = false;
    for (const auto& v : models) {
      bool all = true;
      for (const auto& a : kb.abox) {
        if (a.individual == individual && !assertion_satisfied(a, v, alg)) all = false;
      }
      if (all) found = true;
    }
    if (!found) unsatisfiable = true;
  }
  if (unsatisfiable) {
    verdict.mode = EntailmentVerdict::Mode::kVacuousUnsatisfiable;
    return verdict;
  }

  int best = 0;
  for (const auto& v : models) best = std::max(best, eval_concept(query.subject, v, alg).numerator());
  verdict.typical_degree = TruthDegree(best, kb.n);
  if (best == 0) {
    verdict.mode = EntailmentVerdict::Mode::kVacuousEmptyTypical;
    return verdict;
  }
  for (const auto& v : models) {
    if (eval_concept(query.subject, v, alg).numerator() != best) continue;
    const TruthDegree d = eval_concept(query.property, v, alg);
    if (!d.satisfies(query.rel, query.alpha)) {
      verdict.entailed = false;
      verdict.witness = v;
      verdict.witness_degree = d;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace typik
