#include "typik/entailment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "typik/compiled_kb.hpp"
#include "typik/error.hpp"

namespace typik {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Dependency order: a distinguished concept goes after its body atoms when the
// graph allows it; cycles are broken at the lowest remaining index.
struct Order {
  std::vector<std::size_t> vars;
  std::vector<std::size_t> position;
  bool acyclic = true;
};

Order variable_order(const CompiledKB& ckb) {
  const std::size_t m = ckb.vocabulary()->size();
  Order order;
  order.position.assign(m, kNone);
  std::vector<bool> placed(m, false);
  auto ready = [&](std::size_t i) {
    const auto slot = ckb.distinguished_slot(i);
    if (!slot) return true;
    for (std::size_t a : ckb.distinguished()[*slot].body_atoms) {
      if (a != i && !placed[a]) return false;
      if (a == i) return false;
    }
    return true;
  };
  while (order.vars.size() < m) {
    std::size_t next = kNone;
    for (std::size_t i = 0; i < m && next == kNone; ++i) {
      if (!placed[i] && ready(i)) next = i;
    }
    if (next == kNone) {
      order.acyclic = false;
      for (std::size_t i = 0; i < m && next == kNone; ++i) {
        if (!placed[i]) next = i;
      }
    }
    placed[next] = true;
    order.position[next] = order.vars.size();
    order.vars.push_back(next);
  }
  return order;
}

// Checks become decidable at the depth of their last assigned atom.
struct Plan {
  Order order;
  std::vector<std::vector<std::size_t>> axioms_at;
  std::vector<std::vector<std::size_t>> coherence_at;
  std::vector<std::size_t> forced;  // per depth: distinguished slot or kNone
  std::vector<std::size_t> root_axioms;
};

std::size_t last_position(const Order& order, const std::vector<std::size_t>& atoms) {
  std::size_t p = kNone;
  for (std::size_t a : atoms) {
    const std::size_t q = order.position[a];
    if (p == kNone || q > p) p = q;
  }
  return p;
}

Plan make_plan(const CompiledKB& ckb) {
  Plan plan;
  plan.order = variable_order(ckb);
  const std::size_t m = plan.order.vars.size();
  plan.axioms_at.resize(m);
  plan.coherence_at.resize(m);
  plan.forced.assign(m, kNone);
  for (std::size_t a = 0; a < ckb.axioms().size(); ++a) {
    const auto& ax = ckb.axioms()[a];
    std::vector<std::size_t> atoms = ax.lhs.atom_indices();
    atoms.insert(atoms.end(), ax.rhs.atom_indices().begin(), ax.rhs.atom_indices().end());
    const std::size_t p = last_position(plan.order, atoms);
    if (p == kNone) {
      plan.root_axioms.push_back(a);
    } else {
      plan.axioms_at[p].push_back(a);
    }
  }
  for (std::size_t s = 0; s < ckb.distinguished().size(); ++s) {
    const auto& d = ckb.distinguished()[s];
    const std::size_t own = plan.order.position[d.concept_index];
    const std::size_t body = last_position(plan.order, d.body_atoms);
    if (body == kNone || body < own) {
      plan.forced[own] = s;
    } else {
      plan.coherence_at[body].push_back(s);
    }
  }
  return plan;
}

class SharedBudget {
 public:
  explicit SharedBudget(std::uint64_t cap) : cap_(cap) {}

  void charge(std::uint64_t nodes) {
    const std::uint64_t total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (total > cap_) {
      throw ResourceError("search exceeded the node cap of " + std::to_string(cap_) +
                          " (set TYPIK_NODE_CAP to raise it)");
    }
  }
  std::uint64_t used() const { return used_.load(); }

 private:
  std::uint64_t cap_;
  std::atomic<std::uint64_t> used_{0};
};

class Searcher {
 public:
  Searcher(const CompiledKB& ckb, const Plan& plan, SharedBudget& budget)
      : ckb_(ckb), plan_(plan), budget_(budget), values_(plan.order.vars.size(), 0) {}

  // Explores the subtree where the first variable takes `first_value`.
  void run_from(int first_value) {
    if (!assign(0, first_value)) return;
    descend(1);
  }

  void run_all() { descend(0); }

  std::vector<std::vector<int>>& results() { return results_; }

  void flush() {
    budget_.charge(pending_);
    pending_ = 0;
  }

 private:
  static constexpr std::uint64_t kBatch = 4096;

  void count_node() {
    if (++pending_ >= kBatch) flush();
  }

  bool assign(std::size_t depth, int value) {
    count_node();
    values_[plan_.order.vars[depth]] = value;
    for (std::size_t a : plan_.axioms_at[depth]) {
      if (!ckb_.axiom_holds(ckb_.axioms()[a], values_)) return false;
    }
    for (std::size_t s : plan_.coherence_at[depth]) {
      if (!ckb_.coherent_at(ckb_.distinguished()[s], values_)) return false;
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == plan_.order.vars.size()) {
      results_.push_back(values_);
      return;
    }
    const std::size_t slot = plan_.forced[depth];
    if (slot != kNone) {
      const int v = ckb_.phi_n().level(ckb_.weight_sum(ckb_.distinguished()[slot], values_));
      if (assign(depth, v)) descend(depth + 1);
      return;
    }
    for (int v : ckb_.domain(plan_.order.vars[depth])) {
      if (assign(depth, v)) descend(depth + 1);
    }
  }

  const CompiledKB& ckb_;
  const Plan& plan_;
  SharedBudget& budget_;
  std::vector<int> values_;
  std::vector<std::vector<int>> results_;
  std::uint64_t pending_ = 0;
};

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<std::vector<int>> search_feasible(const CompiledKB& ckb, const EnumerationOptions& options,
                                              std::uint64_t& nodes) {
  const Plan plan = make_plan(ckb);
  for (std::size_t a : plan.root_axioms) {
    if (!ckb.axiom_holds(ckb.axioms()[a], std::vector<int>(plan.order.vars.size(), 0))) {
      nodes = 0;
      return {};
    }
  }
  SharedBudget budget(options.node_cap);
  std::vector<std::vector<int>> all;
  if (plan.order.vars.empty()) {
    all.emplace_back();
    nodes = 0;
    return all;
  }

  const bool first_forced = plan.forced[0] != kNone;
  const std::vector<int>& first_domain = ckb.domain(plan.order.vars[0]);
  const unsigned threads = std::min<unsigned>(worker_count(options.threads),
                                              static_cast<unsigned>(first_domain.size()));
  if (first_forced || threads <= 1) {
    Searcher s(ckb, plan, budget);
    s.run_all();
    s.flush();
    all = std::move(s.results());
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        try {
          Searcher s(ckb, plan, budget);
          for (std::size_t i = next++; i < first_domain.size(); i = next++) {
            s.run_from(first_domain[i]);
          }
          s.flush();
          std::lock_guard lock(mu);
          for (auto& r : s.results()) all.push_back(std::move(r));
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          next = first_domain.size();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  nodes = budget.used();
  return all;
}

std::vector<std::size_t> topological_distinguished(const CompiledKB& ckb) {
  const Order order = variable_order(ckb);
  if (!order.acyclic) throw PreconditionError("the typicality dependency graph has a cycle");
  std::vector<std::size_t> slots;
  for (std::size_t var : order.vars) {
    if (auto s = ckb.distinguished_slot(var)) slots.push_back(*s);
  }
  return slots;
}

void require_feedforward_shape(const CompiledKB& ckb) {
  const auto& kb = ckb.kb();
  const auto inputs = effective_inputs(kb);
  for (const auto& name : kb.concept_names) {
    if (!inputs.contains(name) && !kb.is_distinguished(name)) {
      throw PreconditionError("concept '" + name + "' is neither an input nor distinguished");
    }
  }
}

// Input indices in vocabulary order paired with the slots to propagate.
std::vector<std::vector<int>> feedforward_feasible(const CompiledKB& ckb, const EnumerationOptions& options,
                                                   std::uint64_t& nodes) {
  require_feedforward_shape(ckb);
  const auto slots = topological_distinguished(ckb);
  std::vector<std::size_t> inputs;
  for (std::size_t i = 0; i < ckb.vocabulary()->size(); ++i) {
    if (!ckb.distinguished_slot(i)) inputs.push_back(i);
  }
  std::vector<std::vector<int>> all;
  std::vector<int> values(ckb.vocabulary()->size(), 0);
  std::vector<std::size_t> digit(inputs.size(), 0);
  nodes = 0;
  while (true) {
    if (++nodes > options.node_cap) {
      throw ResourceError("search exceeded the node cap of " + std::to_string(options.node_cap) +
                          " (set TYPIK_NODE_CAP to raise it)");
    }
    for (std::size_t k = 0; k < inputs.size(); ++k) values[inputs[k]] = ckb.domain(inputs[k])[digit[k]];
    for (std::size_t s : slots) {
      const auto& d = ckb.distinguished()[s];
      values[d.concept_index] = ckb.phi_n().level(ckb.weight_sum(d, values));
    }
    const bool ok = std::all_of(ckb.axioms().begin(), ckb.axioms().end(),
                                [&](const auto& ax) { return ckb.axiom_holds(ax, values); });
    if (ok) all.push_back(values);
    std::size_t k = inputs.size();
    while (k > 0) {
      --k;
      if (++digit[k] < ckb.domain(inputs[k]).size()) break;
      digit[k] = 0;
      if (k == 0) return all;
    }
    if (inputs.empty()) return all;
  }
}

FeasibleSet enumerate_compiled(const CompiledKB& ckb, const EnumerationOptions& options) {
  FeasibleSet out;
  out.vocabulary = ckb.vocabulary();
  out.n = ckb.kb().n;
  std::vector<std::vector<int>> raw;
  bool ff = options.strategy == EnumerationOptions::Strategy::kFeedforward;
  if (options.strategy == EnumerationOptions::Strategy::kAuto) ff = feedforward_applicable(ckb.kb());
  raw = ff ? feedforward_feasible(ckb, options, out.nodes_visited)
           : search_feasible(ckb, options, out.nodes_visited);
  out.used_feedforward = ff;
  std::sort(raw.begin(), raw.end());
  out.valuations.reserve(raw.size());
  for (auto& r : raw) out.valuations.emplace_back(out.vocabulary, out.n, std::move(r));
  return out;
}

void require_query(const WeightedKB& kb, const TypicalityQuery& query) {
  for (const auto* c : {&query.subject, &query.property}) {
    for (const auto& atom : c->atoms()) {
      if (!kb.concept_names.contains(atom)) throw UnknownAtomError(atom);
    }
  }
  auto diagnostics = validate_query(kb, query);
  if (!diagnostics.empty()) throw ValidationError(std::move(diagnostics));
}

EntailmentVerdict decide(const CompiledKB& ckb, const FeasibleSet& feasible, const TypicalityQuery& query) {
  const auto& kb = ckb.kb();
  const int n = kb.n;
  EntailmentVerdict verdict;
  verdict.stats.valuations_checked = feasible.nodes_visited;
  verdict.stats.feasible_count = feasible.valuations.size();

  bool unsatisfiable = feasible.valuations.empty();
  for (std::size_t i = 0; i < ckb.individuals().size() && !unsatisfiable; ++i) {
    unsatisfiable = std::none_of(feasible.valuations.begin(), feasible.valuations.end(),
                                 [&](const Valuation& v) { return ckb.individual_accepts(i, v.numerators()); });
  }
  if (unsatisfiable) {
    verdict.entailed = true;
    verdict.mode = EntailmentVerdict::Mode::kVacuousUnsatisfiable;
    return verdict;
  }

  const CompiledConcept subject(query.subject, *ckb.vocabulary());
  const CompiledConcept property(query.property, *ckb.vocabulary());
  int best = 0;
  for (const auto& v : feasible.valuations) best = std::max(best, subject.eval(v.numerators(), ckb.algebra()));
  verdict.typical_degree = TruthDegree(best, n);
  if (best == 0) {
    verdict.entailed = true;
    verdict.mode = EntailmentVerdict::Mode::kVacuousEmptyTypical;
    return verdict;
  }
  verdict.mode = EntailmentVerdict::Mode::kProper;
  for (const auto& v : feasible.valuations) {
    if (subject.eval(v.numerators(), ckb.algebra()) != best) continue;
    const int d = property.eval(v.numerators(), ckb.algebra());
    if (!holds(d, n, query.rel, query.alpha)) {
      verdict.entailed = false;
      verdict.witness = v;
      verdict.witness_degree = TruthDegree(d, n);
      return verdict;
    }
  }
  verdict.entailed = true;
  return verdict;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

FeasibleSet enumerate_feasible(const WeightedKB& kb, const EnumerationOptions& options) {
  const CompiledKB ckb(kb);
  return enumerate_compiled(ckb, options);
}

std::set<std::string> effective_inputs(const WeightedKB& kb) {
  if (kb.input_concepts) return *kb.input_concepts;
  std::set<std::string> out;
  for (const auto& name : kb.concept_names) {
    if (!kb.is_distinguished(name)) out.insert(name);
  }
  return out;
}

bool feedforward_applicable(const WeightedKB& kb) {
  if (!validate_kb(kb).empty()) return false;
  const auto inputs = effective_inputs(kb);
  for (const auto& name : kb.concept_names) {
    if (!inputs.contains(name) && !kb.is_distinguished(name)) return false;
  }
  const CompiledKB ckb(kb);
  return variable_order(ckb).acyclic;
}

FeedforwardResult propagate_feedforward(const WeightedKB& kb, const std::map<std::string, int>& inputs) {
  const CompiledKB ckb(kb);
  require_feedforward_shape(ckb);
  const auto slots = topological_distinguished(ckb);
  std::vector<int> values(ckb.vocabulary()->size(), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (ckb.distinguished_slot(i)) continue;
    const std::string& name = ckb.vocabulary()->name(i);
    const auto it = inputs.find(name);
    if (it == inputs.end()) throw PreconditionError("missing value for input '" + name + "'");
    const auto& dom = ckb.domain(i);
    if (std::find(dom.begin(), dom.end(), it->second) == dom.end()) {
      throw PreconditionError("value " + std::to_string(it->second) + " out of range for input '" + name + "'");
    }
    values[i] = it->second;
  }
  for (const auto& [name, value] : inputs) {
    const auto idx = ckb.vocabulary()->index_of(name);
    if (!idx) throw UnknownAtomError(name);
    if (ckb.distinguished_slot(*idx)) throw PreconditionError("'" + name + "' is not an input");
  }
  for (std::size_t s : slots) {
    const auto& d = ckb.distinguished()[s];
    values[d.concept_index] = ckb.phi_n().level(ckb.weight_sum(d, values));
  }
  FeedforwardResult result;
  for (const auto& ax : ckb.axioms()) {
    if (!ckb.axiom_holds(ax, values)) {
      result.rejected_by = ax.source;
      return result;
    }
  }
  result.valuation = Valuation(ckb.vocabulary(), kb.n, std::move(values));
  return result;
}

std::string_view to_string(EntailmentVerdict::Mode mode) {
  switch (mode) {
    case EntailmentVerdict::Mode::kProper: return "proper";
    case EntailmentVerdict::Mode::kVacuousEmptyTypical: return "vacuous-empty-typical";
    case EntailmentVerdict::Mode::kVacuousUnsatisfiable: return "vacuous-unsatisfiable";
  }
  return "proper";
}

SatisfiabilityResult check_satisfiable(const WeightedKB& kb, const EnumerationOptions& options) {
  const CompiledKB ckb(kb);
  const FeasibleSet feasible = enumerate_compiled(ckb, options);
  SatisfiabilityResult result;
  result.feasible_count = feasible.valuations.size();
  if (feasible.valuations.empty()) {
    result.reason = "no valuation satisfies the strict TBox together with phi_n-coherence";
    return result;
  }
  for (std::size_t i = 0; i < ckb.individuals().size(); ++i) {
    const auto it = std::find_if(feasible.valuations.begin(), feasible.valuations.end(),
                                 [&](const Valuation& v) { return ckb.individual_accepts(i, v.numerators()); });
    if (it == feasible.valuations.end()) {
      result.sample.clear();
      result.reason = "no feasible valuation satisfies the assertions about '" + ckb.individuals()[i] + "'";
      return result;
    }
    result.sample.emplace(ckb.individuals()[i], *it);
  }
  result.satisfiable = true;
  return result;
}

EntailmentVerdict entails(const WeightedKB& kb, const TypicalityQuery& query, const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_valid(kb);
  require_query(kb, query);
  const CompiledKB ckb(kb);
  const FeasibleSet feasible = enumerate_compiled(ckb, options);
  EntailmentVerdict verdict = decide(ckb, feasible, query);
  verdict.stats.elapsed_ms = elapsed_since(start);
  return verdict;
}

EntailmentVerdict entails_over(const WeightedKB& kb, const FeasibleSet& feasible, const TypicalityQuery& query) {
  require_valid(kb);
  require_query(kb, query);
  const CompiledKB ckb(kb);
  if (!(*feasible.vocabulary == *ckb.vocabulary()) || feasible.n != kb.n) {
    throw PreconditionError("feasible set was computed for a different knowledge base");
  }
  return decide(ckb, feasible, query);
}

std::vector<AnnotatedModel> list_models(const WeightedKB& kb, std::size_t limit, const EnumerationOptions& options) {
  const CompiledKB ckb(kb);
  FeasibleSet feasible = enumerate_compiled(ckb, options);
  std::vector<AnnotatedModel> out;
  for (auto& v : feasible.valuations) {
    if (out.size() >= limit) break;
    AnnotatedModel m{v, {}};
    for (const auto& d : ckb.distinguished()) {
      const std::int64_t w = ckb.weight_sum(d, v.numerators());
      m.annotations.push_back({ckb.vocabulary()->name(d.concept_index), w, phi_n_apply(ckb.phi_n(), w)});
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace typik
