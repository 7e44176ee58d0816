#include "typik/concept.hpp"

#include <array>
#include <cassert>
#include <optional>

#include "typik/error.hpp"

namespace typik {

struct Concept::Node {
  Kind kind;
  std::string name;
  std::optional<Concept> lhs;
  std::optional<Concept> rhs;
};

namespace {

const std::string kEmpty;

int precedence(Concept::Kind kind) {
  switch (kind) {
    case Concept::Kind::kOr: return 1;
    case Concept::Kind::kAnd: return 2;
    default: return 3;
  }
}

}  // namespace

Concept::Concept() : Concept(top()) {}

Concept Concept::atom(std::string name) {
  return Concept(std::make_shared<const Node>(Node{Kind::kAtom, std::move(name), std::nullopt, std::nullopt}));
}

Concept Concept::top() {
  static const Concept c(std::make_shared<const Node>(Node{Kind::kTop, {}, std::nullopt, std::nullopt}));
  return c;
}

Concept Concept::bottom() {
  static const Concept c(std::make_shared<const Node>(Node{Kind::kBottom, {}, std::nullopt, std::nullopt}));
  return c;
}

Concept Concept::conj(Concept lhs, Concept rhs) {
  return Concept(std::make_shared<const Node>(Node{Kind::kAnd, {}, std::move(lhs), std::move(rhs)}));
}

Concept Concept::disj(Concept lhs, Concept rhs) {
  return Concept(std::make_shared<const Node>(Node{Kind::kOr, {}, std::move(lhs), std::move(rhs)}));
}

Concept Concept::neg(Concept operand) {
  return Concept(std::make_shared<const Node>(Node{Kind::kNeg, {}, std::move(operand), std::nullopt}));
}

Concept::Kind Concept::kind() const noexcept { return node_->kind; }

const std::string& Concept::name() const noexcept { return node_->kind == Kind::kAtom ? node_->name : kEmpty; }

const Concept& Concept::lhs() const {
  if (!node_->lhs) throw Error("concept has no operand");
  return *node_->lhs;
}

const Concept& Concept::rhs() const {
  if (!node_->rhs) throw Error("concept has no right operand");
  return *node_->rhs;
}

void Concept::collect_atoms(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::kAtom: out.insert(node_->name); return;
    case Kind::kTop:
    case Kind::kBottom: return;
    case Kind::kAnd:
    case Kind::kOr:
      lhs().collect_atoms(out);
      rhs().collect_atoms(out);
      return;
    case Kind::kNeg: lhs().collect_atoms(out); return;
  }
}

std::set<std::string> Concept::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

std::string Concept::to_string() const {
  auto wrap = [](const Concept& child, int parent) {
    const std::string s = child.to_string();
    // same-precedence children on the right are parenthesised by the caller
    return precedence(child.kind()) < parent ? "(" + s + ")" : s;
  };
  switch (kind()) {
    case Kind::kAtom: return node_->name;
    case Kind::kTop: return "top";
    case Kind::kBottom: return "bot";
    case Kind::kNeg: return "!" + wrap(lhs(), 3);
    case Kind::kAnd:
    case Kind::kOr: {
      const int p = precedence(kind());
      const std::string op = kind() == Kind::kAnd ? " & " : " | ";
      const std::string right = precedence(rhs().kind()) <= p ? "(" + rhs().to_string() + ")" : rhs().to_string();
      return wrap(lhs(), p) + op + right;
    }
  }
  return {};
}

bool Concept::operator==(const Concept& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::kAtom: return node_->name == other.node_->name;
    case Kind::kTop:
    case Kind::kBottom: return true;
    case Kind::kNeg: return lhs() == other.lhs();
    case Kind::kAnd:
    case Kind::kOr: return lhs() == other.lhs() && rhs() == other.rhs();
  }
  return false;
}

bool is_reserved_concept_word(std::string_view name) {
  static constexpr std::array<std::string_view, 3> kReserved{"top", "bot", "T"};
  for (auto r : kReserved) {
    if (name == r) return true;
  }
  return false;
}

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  for (char c : name) {
    if (!alpha(c) && !digit(c)) return false;
  }
  return true;
}

}  // namespace typik
