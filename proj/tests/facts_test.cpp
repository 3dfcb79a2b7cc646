#include <gtest/gtest.h>

#include <set>

#include "endocert/errors.hpp"
#include "endocert/facts.hpp"

using namespace endocert;

TEST(Facts, BuiltinTableIsWellFormed) {
  const FactsTable& t = FactsTable::builtin();
  EXPECT_EQ(t.version(), 1);
  EXPECT_GE(t.all().size(), 20u);
  std::set<std::string> ids;
  for (const auto& f : t.all()) {
    EXPECT_TRUE(ids.insert(f.id).second) << f.id;
    EXPECT_FALSE(f.citation.empty()) << f.id;
    EXPECT_FALSE(f.statement.empty()) << f.id;
    EXPECT_FALSE(f.kind.empty()) << f.id;
    EXPECT_EQ(t.find(f.id), &f);
  }
  for (const char* id : {"m23-schur-multiplier", "m24-min-rep-degree", "feit-tits", "minkowski-serre",
                         "central-extension-criterion", "m22-no-20-dim", "a5-char3-example"})
    EXPECT_NE(t.find(id), nullptr) << id;
  EXPECT_EQ(t.find("no-such-fact"), nullptr);
  EXPECT_THROW(t.at("no-such-fact"), InternalInconsistency);
}

TEST(Facts, ParseValidatesRecords) {
  const char* ok = R"({"version": 2, "facts": [
    {"id": "a", "key": "G", "kind": "order", "statement": "s", "citation": "c"}]})";
  FactsTable t = FactsTable::parse(ok);
  EXPECT_EQ(t.version(), 2);
  EXPECT_EQ(t.at("a").citation, "c");
  EXPECT_THROW(FactsTable::parse("{not json"), ParseError);
  EXPECT_THROW(FactsTable::parse(R"({"version": 1, "facts": [{"id": "a"}]})"), ParseError);
  EXPECT_THROW(FactsTable::parse(R"({"version": 1, "facts": [
    {"id": "a", "key": "G", "kind": "k", "statement": "s", "citation": ""}]})"),
               ParseError);
  EXPECT_THROW(FactsTable::parse(R"({"version": 1, "facts": [
    {"id": "a", "key": "G", "kind": "k", "statement": "s", "citation": "c"},
    {"id": "a", "key": "H", "kind": "k", "statement": "t", "citation": "d"}]})"),
               ParseError);
}
