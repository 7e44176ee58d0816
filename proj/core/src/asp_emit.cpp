#include "typik/asp_emit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "typik/error.hpp"
#include "typik/phi.hpp"

namespace typik {
namespace {

bool plain_constant(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

bool reserved_term(const std::string& s) {
  static const std::set<std::string> words = {"and", "or", "neg", "top", "bot", "auxc", "n", "not"};
  return words.contains(s);
}

std::string lower_first(std::string s) {
  if (!s.empty() && s[0] >= 'A' && s[0] <= 'Z') s[0] = static_cast<char>(s[0] - 'A' + 'a');
  return s;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

class Namer {
 public:
  explicit Namer(const WeightedKB& kb) {
    std::map<std::string, int> uses;
    std::set<std::string> all(kb.concept_names.begin(), kb.concept_names.end());
    all.insert(kb.individuals.begin(), kb.individuals.end());
    for (const auto& name : all) ++uses[lower_first(name)];
    for (const auto& name : all) {
      names_[name] = uses[lower_first(name)] > 1 ? quoted(name) : asp_constant(name);
    }
  }

  const std::string& operator()(const std::string& name) const { return names_.at(name); }

 private:
  std::map<std::string, std::string> names_;
};

std::string term(const Concept& c, const Namer& name) {
  switch (c.kind()) {
    case Concept::Kind::kAtom: return name(c.name());
    case Concept::Kind::kTop: return "top";
    case Concept::Kind::kBottom: return "bot";
    case Concept::Kind::kAnd: return "and(" + term(c.lhs(), name) + "," + term(c.rhs(), name) + ")";
    case Concept::Kind::kOr: return "or(" + term(c.lhs(), name) + "," + term(c.rhs(), name) + ")";
    case Concept::Kind::kNeg: return "neg(" + term(c.lhs(), name) + ")";
  }
  return "bot";
}

// "lhs*q op p*n" for alpha = p/q, dropping unit factors.
std::string scaled_compare(const std::string& lhs, const char* op, const Rational& alpha) {
  std::string left = lhs;
  if (alpha.den() != 1) {
    const bool compound = lhs.find_first_of("+-") != std::string::npos;
    left = (compound ? "(" + lhs + ")" : lhs) + "*" + std::to_string(alpha.den());
  }
  std::string right;
  if (alpha.num() == 0) {
    right = "0";
  } else if (alpha.num() == 1) {
    right = "n";
  } else {
    right = std::to_string(alpha.num()) + "*n";
  }
  return left + op + right;
}

// Comparison that makes `value rel alpha` false.
const char* violating_op(Relation rel) {
  switch (rel) {
    case Relation::kGe: return " < ";
    case Relation::kGt: return " <= ";
    case Relation::kLe: return " > ";
    case Relation::kLt: return " >= ";
  }
  return " < ";
}

const char* holding_op(Relation rel) {
  switch (rel) {
    case Relation::kGe: return " >= ";
    case Relation::kGt: return " > ";
    case Relation::kLe: return " <= ";
    case Relation::kLt: return " < ";
  }
  return " >= ";
}

std::string bound(const Threshold& t) {
  switch (t.kind()) {
    case Threshold::Kind::kNegInfinity: return "#inf";
    case Threshold::Kind::kPosInfinity: return "#sup";
    case Threshold::Kind::kFinite: break;
  }
  return std::to_string(t.value());
}

void append_lines(std::string& out, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out += l + "\n";
}

}  // namespace

std::string AspProgram::to_string() const {
  std::string out;
  out += "% knowledge base\n";
  append_lines(out, facts);
  out += "\n% evaluation and coherence\n";
  append_lines(out, rules);
  out += "\n% axioms and assertions\n";
  append_lines(out, constraints);
  out += "\n% query\n";
  append_lines(out, query);
  return out;
}

std::string asp_constant(const std::string& name) {
  const std::string lowered = lower_first(name);
  if (!plain_constant(lowered) || reserved_term(lowered)) return quoted(name);
  return lowered;
}

AspProgram emit_program(const WeightedKB& kb, const TypicalityQuery& query, const AspEmitOptions& options) {
  require_valid(kb);
  if (auto diagnostics = validate_query(kb, query); !diagnostics.empty()) {
    throw ValidationError(std::move(diagnostics));
  }
  for (const auto& ax : kb.strict_tbox) {
    if (ax.rel != Relation::kGe && ax.rel != Relation::kGt) {
      throw PreconditionError("TBox relation " + std::string(to_string(ax.rel)) + " has no ASP encoding");
    }
  }
  const Namer name(kb);
  const bool goedel = kb.algebra == AlgebraKind::kGoedel;
  AspProgram p;

  // Facts.
  p.facts.push_back("#const n=" + std::to_string(kb.n) + ".");
  p.facts.push_back("val(0..n).");
  for (const auto& a : kb.individuals) p.facts.push_back("nom(" + name(a) + ").");
  for (const auto& c : kb.concept_names) p.facts.push_back("cls(" + name(c) + ").");
  for (const auto& [ci, incs] : kb.typicality_tbox) p.facts.push_back("dcls(" + name(ci) + ").");
  std::set<std::string> concepts;
  for (const auto& ax : kb.strict_tbox) {
    concepts.insert(term(ax.lhs, name));
    concepts.insert(term(ax.rhs, name));
  }
  for (const auto& [ci, incs] : kb.typicality_tbox) {
    concepts.insert(name(ci));
    for (const auto& inc : incs) concepts.insert(term(inc.body, name));
  }
  for (const auto& as : kb.abox) concepts.insert(term(as.concept_expr, name));
  concepts.insert(term(query.subject, name));
  concepts.insert(term(query.property, name));
  for (const auto& c : concepts) p.facts.push_back("concept(" + c + ").");

  // Duplicate bodies share one subTyp fact carrying the summed weight.
  std::map<std::string, std::vector<std::pair<std::string, std::int64_t>>> merged;
  for (const auto& [ci, incs] : kb.typicality_tbox) {
    auto& terms = merged[ci];
    for (const auto& inc : incs) {
      const std::string body = term(inc.body, name);
      auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& t) { return t.first == body; });
      if (it == terms.end()) {
        terms.emplace_back(body, inc.weight);
      } else {
        it->second += inc.weight;
      }
    }
    for (const auto& [body, w] : terms) {
      p.facts.push_back("subTyp(" + name(ci) + "," + body + "," + std::to_string(w) + ").");
    }
  }

  // Rules.
  p.rules.push_back("concept(A) :- concept(and(A,B)).");
  p.rules.push_back("concept(B) :- concept(and(A,B)).");
  p.rules.push_back("concept(A) :- concept(or(A,B)).");
  p.rules.push_back("concept(B) :- concept(or(A,B)).");
  p.rules.push_back("concept(A) :- concept(neg(A)).");
  p.rules.push_back("1{inst(X,A,V) : val(V)}1 :- cls(A), nom(X).");
  p.rules.push_back("eval(A,X,V) :- cls(A), inst(X,A,V).");
  p.rules.push_back("eval(top,X,n) :- nom(X).");
  p.rules.push_back("eval(bot,X,0) :- nom(X).");
  if (goedel) {
    p.rules.push_back("min(V,V,V) :- val(V).");
    p.rules.push_back("min(V1,V2,V1) :- val(V1), val(V2), V1 < V2.");
    p.rules.push_back("min(V1,V2,V2) :- val(V1), val(V2), V2 < V1.");
    p.rules.push_back("max(V,V,V) :- val(V).");
    p.rules.push_back("max(V1,V2,V2) :- val(V1), val(V2), V1 < V2.");
    p.rules.push_back("max(V1,V2,V1) :- val(V1), val(V2), V2 < V1.");
    p.rules.push_back("eval(and(A,B),X,V) :- concept(and(A,B)), eval(A,X,V1), eval(B,X,V2), min(V1,V2,V).");
    p.rules.push_back("eval(or(A,B),X,V) :- concept(or(A,B)), eval(A,X,V1), eval(B,X,V2), max(V1,V2,V).");
  } else {
    p.rules.push_back("luk_and(V1,V2,0) :- val(V1), val(V2), V1+V2 <= n.");
    p.rules.push_back("luk_and(V1,V2,V) :- val(V1), val(V2), V1+V2 > n, V = V1+V2-n.");
    p.rules.push_back("luk_or(V1,V2,V) :- val(V1), val(V2), V1+V2 < n, V = V1+V2.");
    p.rules.push_back("luk_or(V1,V2,n) :- val(V1), val(V2), V1+V2 >= n.");
    p.rules.push_back("eval(and(A,B),X,V) :- concept(and(A,B)), eval(A,X,V1), eval(B,X,V2), luk_and(V1,V2,V).");
    p.rules.push_back("eval(or(A,B),X,V) :- concept(or(A,B)), eval(A,X,V1), eval(B,X,V2), luk_or(V1,V2,V).");
  }
  p.rules.push_back("eval(neg(A),X,V) :- concept(neg(A)), eval(A,X,V1), V = n-V1.");

  if (!kb.typicality_tbox.empty()) {
    if (options.aggregate_weights) {
      p.rules.push_back("weight(X,C,W) :- dcls(C), nom(X), W = #sum{ Wi*V,D : subTyp(C,D,Wi), eval(D,X,V) }.");
    } else {
      for (const auto& [ci, terms] : merged) {
        if (terms.empty()) {
          p.rules.push_back("weight(X," + name(ci) + ",0) :- nom(X).");
          continue;
        }
        std::string sum;
        std::string body;
        for (std::size_t h = 0; h < terms.size(); ++h) {
          const std::string idx = std::to_string(h + 1);
          sum += (h > 0 ? "+" : "") + ("W" + idx + "*V" + idx);
          body += ", subTyp(" + name(ci) + "," + terms[h].first + ",W" + idx + "), eval(" + terms[h].first +
                  ",X,V" + idx + ")";
        }
        p.rules.push_back("weight(X," + name(ci) + ",W) :- nom(X), W = " + sum + body + ".");
      }
    }
    p.rules.push_back("num(W) :- nom(X), weight(X,C,W), dcls(C).");
    const PhiN pn = compute_thresholds(kb.phi, kb.n, kb.precision);
    const auto& k = pn.thresholds();
    for (int level = 0; level <= kb.n; ++level) {
      std::string body = "num(W)";
      if (level > 0) body += ", W > " + bound(k[level - 1]);
      if (level < kb.n) body += ", W <= " + bound(k[level]);
      p.rules.push_back("valphi(n,W," + std::to_string(level) + ") :- " + body + ".");
    }
  }

  // Constraints.
  if (!kb.typicality_tbox.empty()) {
    p.constraints.push_back(":- nom(X), dcls(C), eval(C,X,V), weight(X,C,W), valphi(n,W,V1), V != V1.");
  }
  for (const auto& ax : kb.strict_tbox) {
    const std::string head = ":- eval(" + term(ax.lhs, name) + ",X,V1), eval(" + term(ax.rhs, name) + ",X,V2), ";
    const std::string below = goedel ? "V2" : "n-V1+V2";
    p.constraints.push_back(head + "V1 > V2, " + scaled_compare(below, violating_op(ax.rel), ax.alpha) + ".");
    if (ax.rel == Relation::kGt) {
      p.constraints.push_back(head + "V1 <= V2, " + scaled_compare("n", " <= ", ax.alpha) + ".");
    }
  }
  for (const auto& as : kb.abox) {
    p.constraints.push_back(":- eval(" + term(as.concept_expr, name) + "," + name(as.individual) + ",V), " +
                            scaled_compare("V", violating_op(as.rel), as.alpha) + ".");
  }

  // Query.
  const std::string subject = term(query.subject, name);
  const std::string property = term(query.property, name);
  p.query.push_back("nom(auxc).");
  p.query.push_back("auxtc(auxc," + subject + ").");
  p.query.push_back("ok :- eval(" + property + ",auxc,V), " + scaled_compare("V", holding_op(query.rel), query.alpha) +
                    ".");
  p.query.push_back("notok :- not ok.");
  return p;
}

std::string emit_preference() {
  return "#program preference(cwise).\n"
         "better(P) :- preference(P,cwise), holds(auxtc(auxc,C)), betterwrt(C).\n"
         "betterwrt(C) :- holds(eval(C,auxc,V1)), holds'(eval(C,auxc,V2)), V1>V2.\n"
         "\n"
         "#program base.\n"
         "#preference(p,cwise) { }.\n"
         "#optimize(p).\n";
}

}  // namespace typik
