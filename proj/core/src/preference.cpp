#include "typik/preference.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace typik {

std::string ElementWeight::to_string() const { return is_neg_infinity() ? "-inf" : std::to_string(*value_); }

namespace {

const std::vector<WeightedTypicalityInclusion>& inclusions_of(const WeightedKB& kb, const std::string& ci) {
  auto it = kb.typicality_tbox.find(ci);
  if (it == kb.typicality_tbox.end()) throw PreconditionError("'" + ci + "' is not a distinguished concept");
  return it->second;
}

}  // namespace

std::int64_t weight_sum(const Valuation& v, const std::string& ci, const WeightedKB& kb) {
  const Algebra alg(kb.algebra, kb.n);
  std::int64_t sum = 0;
  for (const auto& inc : inclusions_of(kb, ci)) sum += inc.weight * eval_concept(inc.body, v, alg).numerator();
  return sum;
}

ElementWeight weight_W(const Valuation& v, const std::string& ci, const WeightedKB& kb) {
  inclusions_of(kb, ci);
  if (v.at(ci).numerator() == 0) return ElementWeight::neg_infinity();
  return ElementWeight::finite(weight_sum(v, ci, kb));
}

InducedPreference induced_preference(std::span<const Valuation> vs, const Concept& c, const Algebra& alg) {
  InducedPreference pref;
  pref.degrees.reserve(vs.size());
  std::map<int, std::vector<std::size_t>, std::greater<>> by_degree;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const int d = eval_concept(c, vs[i], alg).numerator();
    pref.degrees.push_back(d);
    by_degree[d].push_back(i);
  }
  for (auto& [_, members] : by_degree) pref.strata.push_back(std::move(members));
  return pref;
}

std::vector<std::size_t> typical_elements(std::span<const Valuation> vs, const Concept& c, const Algebra& alg) {
  std::vector<std::size_t> out;
  int best = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const int d = eval_concept(c, vs[i], alg).numerator();
    if (d == 0 || d < best) continue;
    if (d > best) {
      best = d;
      out.clear();
    }
    out.push_back(i);
  }
  return out;
}

bool check_phi_coherent(const Valuation& v, const WeightedKB& kb, const PhiN& pn) {
  for (const auto& [ci, _] : kb.typicality_tbox) {
    if (v.at(ci).numerator() != pn.level(weight_sum(v, ci, kb))) return false;
  }
  return true;
}

namespace {

/// Per distinguished concept: (degree, W) of each model element, grouped by
/// degree. `strict` selects coherence (<=>) over faithfulness (=>).
bool preferences_agree(std::span<const Valuation> model, const WeightedKB& kb, bool strict) {
  for (const auto& [ci, _] : kb.typicality_tbox) {
    std::map<int, std::pair<ElementWeight, ElementWeight>> range;  // degree -> (min W, max W)
    for (const auto& v : model) {
      const int d = v.at(ci).numerator();
      const ElementWeight w = weight_W(v, ci, kb);
      auto [it, inserted] = range.try_emplace(d, w, w);
      if (!inserted) {
        it->second.first = std::min(it->second.first, w);
        it->second.second = std::max(it->second.second, w);
      }
    }
    // x <_Ci y iff deg(x) > deg(y): every element of a higher stratum must
    // outweigh every element of all lower strata.
    std::optional<ElementWeight> max_below;
    for (const auto& [d, minmax] : range) {
      if (strict && minmax.first != minmax.second) return false;
      if (max_below && !(minmax.first > *max_below)) return false;
      max_below = max_below ? std::max(*max_below, minmax.second) : minmax.second;
    }
  }
  return true;
}

}  // namespace

bool check_coherent(std::span<const Valuation> model, const WeightedKB& kb) {
  return preferences_agree(model, kb, true);
}

bool check_faithful(std::span<const Valuation> model, const WeightedKB& kb) {
  return preferences_agree(model, kb, false);
}

}  // namespace typik
