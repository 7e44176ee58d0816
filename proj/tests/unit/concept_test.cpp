#include <gtest/gtest.h>

#include "typik/concept.hpp"
#include "typik/error.hpp"
#include "typik/kb_io.hpp"

namespace typik {
namespace {

TEST(ConceptParser, NegationBindsTighterThanConjunctionThanDisjunction) {
  const Concept c = parse_concept_expr("a & !b | c");
  const Concept expected =
      Concept::disj(Concept::conj(Concept::atom("a"), Concept::neg(Concept::atom("b"))), Concept::atom("c"));
  EXPECT_EQ(c, expected);
  EXPECT_EQ(parse_concept_expr("a & (b | c)"),
            Concept::conj(Concept::atom("a"), Concept::disj(Concept::atom("b"), Concept::atom("c"))));
  EXPECT_EQ(parse_concept_expr("~top"), Concept::neg(Concept::top()));
  EXPECT_EQ(parse_concept_expr("bot"), Concept::bottom());
}

TEST(ConceptParser, BinaryOperatorsAssociateLeft) {
  EXPECT_EQ(parse_concept_expr("a & b & c"),
            Concept::conj(Concept::conj(Concept::atom("a"), Concept::atom("b")), Concept::atom("c")));
}

TEST(ConceptParser, RejectsMalformedText) {
  for (const char* bad : {"", "a &", "(a | b", "a b", "a | | b", "1a", "T(a)", "a & T(b)"}) {
    EXPECT_THROW(parse_concept_expr(bad), ParseError) << bad;
  }
}

TEST(ConceptPrinter, RoundTripsThroughParser) {
  for (const char* text : {"a", "!a", "a & b", "(a | b) & c", "!(a & b) | top", "a | b & c", "!!a", "bot"}) {
    const Concept c = parse_concept_expr(text);
    EXPECT_EQ(parse_concept_expr(c.to_string()), c) << text << " -> " << c.to_string();
  }
  EXPECT_EQ(parse_concept_expr("(a | b) & c").to_string(), "(a | b) & c");
}

TEST(Concept, CollectsAtoms) {
  const auto atoms = parse_concept_expr("a & !(b | a) | top").atoms();
  EXPECT_EQ(atoms, (std::set<std::string>{"a", "b"}));
}

TEST(Concept, NameRules) {
  EXPECT_TRUE(is_valid_name("Has_Wings"));
  EXPECT_TRUE(is_valid_name("_x1"));
  EXPECT_FALSE(is_valid_name("1x"));
  EXPECT_FALSE(is_valid_name("a-b"));
  EXPECT_TRUE(is_reserved_concept_word("top"));
  EXPECT_TRUE(is_reserved_concept_word("bot"));
  EXPECT_FALSE(is_reserved_concept_word("Top"));
}

TEST(QueryParser, AcceptsBothSeparators) {
  const TypicalityQuery a = parse_query("T(Bird) -> Fly >= 0.8");
  const TypicalityQuery b = parse_query("T(Bird) :: Fly >= 0.8");
  EXPECT_EQ(a.subject, Concept::atom("Bird"));
  EXPECT_EQ(a.property, Concept::atom("Fly"));
  EXPECT_EQ(a.rel, Relation::kGe);
  EXPECT_EQ(a.alpha, Rational(4, 5));
  EXPECT_EQ(a.subject, b.subject);
  EXPECT_EQ(a.property, b.property);
}

TEST(QueryParser, ParsesComplexSidesAndRelations) {
  const TypicalityQuery q = parse_query("T(a & !b) -> (c | d) & e < 1");
  EXPECT_EQ(q.subject, parse_concept_expr("a & !b"));
  EXPECT_EQ(q.property, parse_concept_expr("(c | d) & e"));
  EXPECT_EQ(q.rel, Relation::kLt);
  EXPECT_EQ(q.alpha, Rational(1, 1));
  EXPECT_EQ(parse_query("T(o)->x>0").rel, Relation::kGt);
  EXPECT_EQ(parse_query("T(o) -> x <= 0.25").rel, Relation::kLe);
}

TEST(QueryParser, RejectsMalformedQueries) {
  for (const char* bad : {"Bird -> Fly >= 1", "T(Bird) -> Fly", "T(Bird) -> Fly >= ", "T(T(a)) -> b >= 1",
                          "T(a) -> T(b) >= 1", "T(a) -> b >= 1 extra", "T(a) -> b == 1", "T() -> b >= 1"}) {
    EXPECT_THROW(parse_query(bad), ParseError) << bad;
  }
}

TEST(QueryParser, PrintsCanonicalForm) {
  EXPECT_EQ(parse_query("T(a)::b|c>=0.5").to_string(), "T(a) -> b | c >= 0.5");
}

}  // namespace
}  // namespace typik
