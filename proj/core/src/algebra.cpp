#include "typik/algebra.hpp"

#include <algorithm>

#include "typik/error.hpp"

namespace typik {

Vocabulary::Vocabulary(const std::set<std::string>& names) : names_(names.begin(), names.end()) {}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Valuation::Valuation(std::shared_ptr<const Vocabulary> vocabulary, int n, std::vector<int> numerators)
    : vocabulary_(std::move(vocabulary)), n_(n), numerators_(std::move(numerators)) {
  if (!vocabulary_ || numerators_.size() != vocabulary_->size()) {
    throw Error("valuation must assign a degree to every concept name");
  }
  for (int v : numerators_) {
    if (v < 0 || v > n_) throw Error("degree numerator " + std::to_string(v) + " outside [0, " + std::to_string(n_) + "]");
  }
}

Valuation Valuation::from_map(const std::map<std::string, int>& numerators, int n) {
  std::set<std::string> names;
  std::vector<int> values;
  for (const auto& [name, v] : numerators) {
    names.insert(name);
    values.push_back(v);
  }
  return Valuation(std::make_shared<const Vocabulary>(names), n, std::move(values));
}

TruthDegree Valuation::at(std::string_view name) const {
  auto idx = vocabulary_->index_of(name);
  if (!idx) throw UnknownAtomError(std::string(name));
  return {numerators_[*idx], n_};
}

std::map<std::string, TruthDegree> Valuation::to_map() const {
  std::map<std::string, TruthDegree> out;
  for (std::size_t i = 0; i < numerators_.size(); ++i) out.emplace(vocabulary_->name(i), TruthDegree(numerators_[i], n_));
  return out;
}

bool Valuation::operator==(const Valuation& other) const {
  return n_ == other.n_ && numerators_ == other.numerators_ &&
         (vocabulary_ == other.vocabulary_ || *vocabulary_ == *other.vocabulary_);
}

std::strong_ordering Valuation::operator<=>(const Valuation& other) const {
  return numerators_ <=> other.numerators_;
}

namespace {

int eval_rec(const Concept& c, const Valuation& v, const Algebra& alg) {
  switch (c.kind()) {
    case Concept::Kind::kAtom: return v.at(c.name()).numerator();
    case Concept::Kind::kTop: return alg.resolution();
    case Concept::Kind::kBottom: return 0;
    case Concept::Kind::kAnd: return alg.t_norm(eval_rec(c.lhs(), v, alg), eval_rec(c.rhs(), v, alg));
    case Concept::Kind::kOr: return alg.s_norm(eval_rec(c.lhs(), v, alg), eval_rec(c.rhs(), v, alg));
    case Concept::Kind::kNeg: return alg.negation(eval_rec(c.lhs(), v, alg));
  }
  return 0;
}

}  // namespace

TruthDegree eval_concept(const Concept& concept_expr, const Valuation& v, const Algebra& alg) {
  if (v.resolution() != alg.resolution()) throw Error("valuation and algebra disagree on n");
  return {eval_rec(concept_expr, v, alg), alg.resolution()};
}

TruthDegree inclusion_degree_at(const Concept& lhs, const Concept& rhs, const Valuation& v, const Algebra& alg) {
  return alg.implication(eval_concept(lhs, v, alg), eval_concept(rhs, v, alg));
}

bool assertion_satisfied(const Assertion& a, const Valuation& v, const Algebra& alg) {
  return eval_concept(a.concept_expr, v, alg).satisfies(a.rel, a.alpha);
}

CompiledConcept::CompiledConcept(const Concept& concept_expr, const Vocabulary& vocabulary) {
  emit(concept_expr, vocabulary);
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  std::size_t depth = 0;
  for (const auto& ins : code_) {
    switch (ins.op) {
      case Op::kAtom:
      case Op::kTop:
      case Op::kBottom: max_depth_ = std::max(max_depth_, ++depth); break;
      case Op::kAnd:
      case Op::kOr: --depth; break;
      case Op::kNeg: break;
    }
  }
}

void CompiledConcept::emit(const Concept& c, const Vocabulary& vocabulary) {
  switch (c.kind()) {
    case Concept::Kind::kAtom: {
      auto idx = vocabulary.index_of(c.name());
      if (!idx) throw UnknownAtomError(c.name());
      code_.push_back({Op::kAtom, *idx});
      atoms_.push_back(*idx);
      return;
    }
    case Concept::Kind::kTop: code_.push_back({Op::kTop, 0}); return;
    case Concept::Kind::kBottom: code_.push_back({Op::kBottom, 0}); return;
    case Concept::Kind::kAnd:
    case Concept::Kind::kOr:
      emit(c.lhs(), vocabulary);
      emit(c.rhs(), vocabulary);
      code_.push_back({c.kind() == Concept::Kind::kAnd ? Op::kAnd : Op::kOr, 0});
      return;
    case Concept::Kind::kNeg:
      emit(c.lhs(), vocabulary);
      code_.push_back({Op::kNeg, 0});
      return;
  }
}

int CompiledConcept::eval(std::span<const int> numerators, const Algebra& alg) const {
  // single atoms dominate bodies of imported networks
  if (code_.size() == 1) {
    switch (code_[0].op) {
      case Op::kAtom: return numerators[code_[0].atom];
      case Op::kTop: return alg.resolution();
      default: return 0;
    }
  }
  constexpr std::size_t kInline = 32;
  int inline_stack[kInline];
  std::vector<int> heap_stack;
  int* stack = inline_stack;
  if (max_depth_ > kInline) {
    heap_stack.resize(max_depth_);
    stack = heap_stack.data();
  }
  std::size_t sp = 0;
  for (const auto& ins : code_) {
    switch (ins.op) {
      case Op::kAtom: stack[sp++] = numerators[ins.atom]; break;
      case Op::kTop: stack[sp++] = alg.resolution(); break;
      case Op::kBottom: stack[sp++] = 0; break;
      case Op::kAnd:
        --sp;
        stack[sp - 1] = alg.t_norm(stack[sp - 1], stack[sp]);
        break;
      case Op::kOr:
        --sp;
        stack[sp - 1] = alg.s_norm(stack[sp - 1], stack[sp]);
        break;
      case Op::kNeg: stack[sp - 1] = alg.negation(stack[sp - 1]); break;
    }
  }
  return stack[0];
}

}  // namespace typik
