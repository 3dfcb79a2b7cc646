#include <gtest/gtest.h>

#include <map>

#include "endocert/galois.hpp"
#include "endocert/named_groups.hpp"
#include "oracles.hpp"

using namespace endocert;

namespace {

std::map<Partition, std::size_t> counts(std::initializer_list<std::pair<Partition, std::size_t>> l) {
  return {l.begin(), l.end()};
}

Partition partition_of(const oracle::Images& x) {
  std::vector<bool> seen(x.size());
  Partition p;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = x[j]) {
      seen[j] = true;
      ++len;
    }
    p.push_back(len);
  }
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

// Reference counts were produced by an independent factorization over F_p
// (sympy factor_list) on the same prime stream: odd primes from 3, skipping
// primes dividing the leading coefficient or making f mod p non-squarefree.
TEST(Census, MatchesIndependentFactorization) {
  {
    CycleTypeCensus c = census(IntPoly::parse("x^7 - 7*x + 3"), 200);
    EXPECT_EQ(c.counts, counts({{{1, 1, 1, 2, 2}, 25}, {{1, 2, 4}, 55}, {{1, 3, 3}, 67}, {{7}, 53}}));
    EXPECT_EQ(c.excluded, (std::vector<std::uint64_t>{3, 7}));
    EXPECT_EQ(c.last_prime, 1237u);
    EXPECT_EQ(c.sampled, 200u);
  }
  {
    CycleTypeCensus c = census(IntPoly::parse("x^3 - 2"), 100);
    EXPECT_EQ(c.counts, counts({{{1, 1, 1}, 15}, {{1, 2}, 52}, {{3}, 33}}));
    EXPECT_EQ(c.excluded, (std::vector<std::uint64_t>{3}));
    EXPECT_EQ(c.last_prime, 557u);
  }
  {
    CycleTypeCensus c = census(IntPoly::parse("x^2 + 1"), 100);
    EXPECT_EQ(c.counts, counts({{{1, 1}, 47}, {{2}, 53}}));
    EXPECT_EQ(c.last_prime, 547u);
  }
  {
    CycleTypeCensus c = census(IntPoly::parse("x^5 - 2"), 200);
    EXPECT_EQ(c.counts, counts({{{1, 1, 1, 1, 1}, 9}, {{1, 2, 2}, 46}, {{1, 4}, 104}, {{5}, 41}}));
    EXPECT_EQ(c.excluded, (std::vector<std::uint64_t>{5}));
    EXPECT_EQ(c.last_prime, 1231u);
  }
}

TEST(Census, IsDeterministic) {
  IntPoly f = IntPoly::parse("x^7 - 7*x + 3");
  EXPECT_EQ(census(f, 300).to_text(), census(f, 300).to_text());
  EXPECT_THROW(census(f, 0), std::invalid_argument);
  EXPECT_THROW(census(IntPoly::parse("x^3 - 3*x + 2"), 10), std::invalid_argument);
}

TEST(CycleTypes, DistributionMatchesElementEnumeration) {
  using namespace groups;
  for (const auto& g : {symmetric(5), alternating(6), psl2(7), affine_line(7, 3), dihedral(6), mathieu(11)}) {
    auto elems = oracle::closure(g.generators(), g.degree());
    std::map<Partition, BigInt> want;
    for (const auto& e : elems) want[partition_of(e)] += 1;
    CycleTypeDistribution d = cycle_type_distribution(g);
    EXPECT_EQ(d.order, BigInt(elems.size()));
    EXPECT_EQ(d.counts, want);
  }
}

TEST(CycleTypes, ClosedFormForLargeSymmetricGroups) {
  CycleTypeDistribution d = cycle_type_distribution(groups::symmetric(12), 1000);
  EXPECT_EQ(d.counts.at(Partition{12}), BigInt(39916800));  // 11!
  EXPECT_EQ(d.counts.at(Partition{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2}), 66);
  CycleTypeDistribution a = cycle_type_distribution(groups::alternating(12), 1000);
  EXPECT_EQ(a.counts.count(Partition{12}), 0u);
  BigInt total = 0;
  for (const auto& [p, c] : a.counts) total += c;
  EXPECT_EQ(total, a.order);
  EXPECT_THROW(cycle_type_distribution(groups::mathieu(12), 1000), std::invalid_argument);
}

TEST(Identify, PrefersTheGroupWhoseStatisticsFit) {
  auto hyps = identify(census(IntPoly::parse("x^7 - 7*x + 3"), 200), groups::candidates_for_degree(7));
  std::map<std::string, const GroupHypothesis*> by;
  for (const auto& h : hyps) by[h.name] = &h;
  ASSERT_TRUE(by.count("PSL2(7)"));
  EXPECT_TRUE(by["PSL2(7)"]->matched);
  EXPECT_GT(by["PSL2(7)"]->confidence, BigRational(99, 100));
  EXPECT_LT(by["PSL2(7)"]->confidence, 1);
  EXPECT_FALSE(by["S7"]->matched);
  EXPECT_FALSE(by["A7"]->matched);
  for (const auto& h : hyps)
    if (h.name != "PSL2(7)") EXPECT_FALSE(h.matched) << h.name;
  EXPECT_FALSE(by["C7"]->unexplained.empty());
}

TEST(Identify, FrobeniusGroupOfDegreeFive) {
  auto hyps = identify(census(IntPoly::parse("x^5 - 2"), 200), groups::candidates_for_degree(5));
  for (const auto& h : hyps) EXPECT_EQ(h.matched, h.name == "F20") << h.name;
}

TEST(Identify, RejectsBadInput) {
  CycleTypeCensus empty;
  empty.degree = 5;
  EXPECT_THROW(identify(empty, groups::candidates_for_degree(5)), std::invalid_argument);
  auto c = census(IntPoly::parse("x^5 - 2"), 20);
  EXPECT_THROW(identify(c, groups::candidates_for_degree(7)), std::invalid_argument);
}

TEST(JointCensus, IndependentAndDependentPairs) {
  JointCensus ind = joint_census(IntPoly::parse("x^7 - 7*x + 3"), IntPoly::parse("x^5 - x - 1"), 200);
  EXPECT_EQ(ind.sampled, 200u);
  EXPECT_GT(ind.p_value, 0.01);
  // x^3 - 16 has roots 2 * 2^(1/3) * zeta, so the splitting fields coincide.
  JointCensus dep = joint_census(IntPoly::parse("x^3 - 2"), IntPoly::parse("x^3 - 16"), 200);
  EXPECT_LT(dep.p_value, 1e-6);
  std::size_t total = 0;
  for (const auto& [k, v] : dep.counts) total += v;
  EXPECT_EQ(total, dep.sampled);
}
