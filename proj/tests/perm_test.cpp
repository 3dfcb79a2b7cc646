#include <gtest/gtest.h>

#include "endocert/errors.hpp"
#include "endocert/perm.hpp"

using namespace endocert;

TEST(Perm, ParsesOneBasedCycles) {
  Perm p = Perm::parse("(1 2 3)(4 5)", 6);
  EXPECT_EQ(p.images(), (std::vector<Point>{1, 2, 0, 4, 3, 5}));
  EXPECT_EQ(p.to_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(Perm::parse("(1,2,3)", 3), Perm::parse("(1 2 3)", 3));
  EXPECT_TRUE(Perm::parse("()", 4).is_identity());
  EXPECT_EQ(Perm::parse("()", 4).to_string(), "()");
}

TEST(Perm, ProductAppliesLeftFactorFirst) {
  Perm a = Perm::parse("(1 2)", 3), b = Perm::parse("(2 3)", 3);
  // (a*b)(x) = b(a(x)): 1 -> 2 -> 3.
  EXPECT_EQ((a * b)(0), 2u);
  EXPECT_EQ((a * b).to_string(), "(1 3 2)");
  EXPECT_EQ((b * a).to_string(), "(1 2 3)");
}

TEST(Perm, InverseOrderAndPowers) {
  Perm p = Perm::parse("(1 2 3 4 5 6)(7 8 9 10)", 10);
  EXPECT_EQ(p.order(), 12u);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_TRUE(p.pow(12).is_identity());
  EXPECT_FALSE(p.pow(6).is_identity());
  EXPECT_EQ(p.pow(-1), p.inverse());
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{4, 6}));
}

TEST(Perm, CommutatorMatchesDefinition) {
  Perm a = Perm::parse("(1 2 3)", 4), b = Perm::parse("(2 3 4)", 4);
  EXPECT_EQ(commutator(a, b), a.inverse() * b.inverse() * a * b);
}

TEST(Perm, RoundTripsThroughText) {
  for (const char* s : {"(1 5 2)(3 4)", "(2 7)", "(1 2 3 4 5 6 7)"}) {
    Perm p = Perm::parse(s, 7);
    EXPECT_EQ(Perm::parse(p.to_string(), 7), p);
  }
}

TEST(Perm, RejectsMalformedCycles) {
  EXPECT_THROW(Perm::parse("(1 2", 3), ParseError);
  EXPECT_THROW(Perm::parse("(1 4)", 3), ParseError);
  EXPECT_THROW(Perm::parse("(1 2 1)", 3), ParseError);
  EXPECT_THROW(Perm::parse("(0 1)", 3), ParseError);
  EXPECT_THROW(Perm::parse("(1 2)(2 3)", 3), ParseError);
  EXPECT_THROW(Perm::parse("(a b)", 3), ParseError);
}

TEST(Perm, ParsesGeneratorLists) {
  auto g = parse_generators("# a comment\n(1 2 3)\n\n(1 2); (4 5)\n", 5);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[2], Perm::parse("(4 5)", 5));
}
