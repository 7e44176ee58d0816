#include <cctype>
#include <vector>

#include "typik/kb_io.hpp"

namespace typik {

namespace {

struct Token {
  enum class Kind { kName, kNumber, kAnd, kOr, kNot, kLParen, kRParen, kArrow, kRel, kEnd };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Kind::kName, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
      out.push_back({Token::Kind::kNumber, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto two = s.substr(i, 2);
    if (two == "->" || two == "::") {
      out.push_back({Token::Kind::kArrow, std::string(two), start});
      i += 2;
      continue;
    }
    if (two == ">=" || two == "<=") {
      out.push_back({Token::Kind::kRel, std::string(two), start});
      i += 2;
      continue;
    }
    switch (c) {
      case '>':
      case '<': out.push_back({Token::Kind::kRel, std::string(1, c), start}); break;
      case '&': out.push_back({Token::Kind::kAnd, "&", start}); break;
      case '|': out.push_back({Token::Kind::kOr, "|", start}); break;
      case '!':
      case '~': out.push_back({Token::Kind::kNot, "!", start}); break;
      case '(': out.push_back({Token::Kind::kLParen, "(", start}); break;
      case ')': out.push_back({Token::Kind::kRParen, ")", start}); break;
      default: throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
    ++i;
  }
  out.push_back({Token::Kind::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Concept expression() {
    Concept lhs = conjunction();
    while (peek().kind == Token::Kind::kOr) {
      next();
      lhs = Concept::disj(std::move(lhs), conjunction());
    }
    return lhs;
  }

  TypicalityQuery query() {
    const Token& t = next();
    if (t.kind != Token::Kind::kName || t.text != "T" || peek().kind != Token::Kind::kLParen) {
      error(t, "query must start with T(");
    }
    next();
    TypicalityQuery q;
    q.subject = expression();
    expect(Token::Kind::kRParen, "')'");
    expect(Token::Kind::kArrow, "'->'");
    q.property = expression();
    const Token& rel = next();
    if (rel.kind != Token::Kind::kRel) error(rel, "expected one of >= > <= <");
    q.rel = *parse_relation(rel.text);
    const Token& num = next();
    if (num.kind != Token::Kind::kNumber) error(num, "expected a decimal threshold");
    q.alpha = Rational::parse_decimal(num.text);
    expect_end();
    return q;
  }

  void expect_end() {
    if (peek().kind != Token::Kind::kEnd) error(peek(), "unexpected trailing input");
  }

 private:
  Concept conjunction() {
    Concept lhs = unary();
    while (peek().kind == Token::Kind::kAnd) {
      next();
      lhs = Concept::conj(std::move(lhs), unary());
    }
    return lhs;
  }

  Concept unary() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Kind::kNot: return Concept::neg(unary());
      case Token::Kind::kLParen: {
        Concept inner = expression();
        expect(Token::Kind::kRParen, "')'");
        return inner;
      }
      case Token::Kind::kName:
        if (t.text == "top") return Concept::top();
        if (t.text == "bot") return Concept::bottom();
        if (t.text == "T" && peek().kind == Token::Kind::kLParen) {
          error(t, "typicality operator cannot be nested inside a concept");
        }
        if (is_reserved_concept_word(t.text)) error(t, "'" + t.text + "' is reserved");
        return Concept::atom(t.text);
      default: error(t, "expected a concept");
    }
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::kEnd) ++pos_;
    return t;
  }
  void expect(Token::Kind kind, const char* what) {
    const Token& t = next();
    if (t.kind != kind) error(t, std::string("expected ") + what);
  }
  [[noreturn]] static void error(const Token& t, const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(t.pos) +
                     (t.kind == Token::Kind::kEnd ? " (end of input)" : " ('" + t.text + "')"));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Concept parse_concept_expr(std::string_view text) {
  Parser p(text);
  Concept c = p.expression();
  p.expect_end();
  return c;
}

TypicalityQuery parse_query(std::string_view text) { return Parser(text).query(); }

}  // namespace typik
