#include <gtest/gtest.h>

#include <map>

#include "endocert/named_groups.hpp"
#include "endocert/permgroup.hpp"
#include "oracles.hpp"

using namespace endocert;

namespace {

std::vector<std::pair<std::string, PermGroup>> small_groups() {
  using namespace groups;
  return {{"S4", symmetric(4)},          {"A5", alternating(5)},     {"S5", symmetric(5)},
          {"C7", cyclic(7)},             {"D6", dihedral(6)},        {"F20", affine_line(5, 4)},
          {"F21", affine_line(7, 3)},    {"PSL2(5)", psl2(5)},       {"PSL2(7) on 8", psl2(7)},
          {"PSL2(9)", psl2(9)},          {"GL3(2) on 7", gl3_2_on_7()}, {"AGL3(2)", agl3_2()},
          {"PSL2(11) on 11", psl2_11_on_11()}, {"GL2(3) regular", gl2_regular(3)}};
}

}  // namespace

TEST(PermGroup, OrderMatchesBreadthFirstClosure) {
  for (const auto& [name, g] : small_groups()) {
    auto elems = oracle::closure(g.generators(), g.degree());
    EXPECT_EQ(g.order(), BigInt(elems.size())) << name;
  }
}

TEST(PermGroup, KnownOrders) {
  EXPECT_EQ(groups::symmetric(10).order(), 3628800);
  EXPECT_EQ(groups::alternating(9).order(), 181440);
  for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u, 17u, 25u, 27u})
    EXPECT_EQ(groups::psl2(q).order(), BigInt(q) * (q * q - 1) / 2) << q;
  EXPECT_EQ(groups::mathieu(11).order(), 7920);
  EXPECT_EQ(groups::mathieu(12).order(), 95040);
  EXPECT_EQ(groups::mathieu(22).order(), 443520);
  EXPECT_EQ(groups::mathieu(23).order(), 10200960);
  EXPECT_EQ(groups::mathieu(24).order(), 244823040);
  EXPECT_EQ(groups::a7_on_15().order(), 2520);
  EXPECT_EQ(groups::gl2_regular(2).order(), 6);
  EXPECT_EQ(groups::gl2_regular(3).order(), 48);
}

TEST(PermGroup, MembershipAgreesWithClosure) {
  PermGroup g = groups::psl2(7);
  auto elems = oracle::closure(g.generators(), 8);
  std::mt19937_64 rng(7);
  PermGroup s8 = groups::symmetric(8);
  for (int i = 0; i < 300; ++i) {
    Perm x = s8.random_element(rng);
    EXPECT_EQ(g.contains(x), elems.count(x.images()) == 1);
  }
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(g.contains(g.random_element(rng)));
}

TEST(PermGroup, TransitivityMatchesTupleOrbits) {
  for (const auto& [name, g] : small_groups()) {
    auto elems = oracle::closure(g.generators(), g.degree());
    EXPECT_EQ(transitivity_degree(g), oracle::transitivity(elems, g.degree())) << name;
  }
  EXPECT_EQ(transitivity_degree(groups::mathieu(24)), 5u);
  EXPECT_EQ(transitivity_degree(groups::mathieu(23)), 4u);
  EXPECT_EQ(transitivity_degree(groups::mathieu(22)), 3u);
  EXPECT_EQ(transitivity_degree(groups::a7_on_15()), 2u);
}

TEST(PermGroup, ElementIndexIsABijection) {
  PermGroup g = groups::affine_line(7, 3);
  std::set<std::vector<Point>> seen;
  for (std::uint64_t i = 0; i < g.order_u64(); ++i) {
    Perm x = g.element_at(i);
    EXPECT_EQ(g.element_index(x), i);
    seen.insert(x.images());
  }
  EXPECT_EQ(seen, oracle::closure(g.generators(), 7));
}

TEST(PermGroup, PrefixStabilizer) {
  PermGroup m12 = groups::mathieu(12);
  EXPECT_EQ(m12.base_prefix_stabilizer(1).order(), 7920);
  EXPECT_EQ(m12.base_prefix_stabilizer(5).order(), 1);
  PermGroup s6 = groups::symmetric(6);
  EXPECT_EQ(s6.base_prefix_stabilizer(2).order(), 24);
}

TEST(PermGroup, ConjugacyClassesMatchBruteForce) {
  for (const auto& [name, g] : small_groups()) {
    auto elems = oracle::closure(g.generators(), g.degree());
    std::vector<oracle::Images> all(elems.begin(), elems.end());
    std::set<oracle::Images> done;
    std::multiset<std::uint64_t> sizes;
    for (const auto& x : all) {
      if (done.count(x)) continue;
      std::set<oracle::Images> cls;
      for (const auto& y : all) {
        oracle::Images yinv(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) yinv[y[i]] = static_cast<std::uint32_t>(i);
        cls.insert(oracle::compose(oracle::compose(yinv, x), y));
      }
      done.insert(cls.begin(), cls.end());
      sizes.insert(cls.size());
    }
    std::multiset<std::uint64_t> got;
    for (const auto& c : conjugacy_classes(g)) got.insert(c.size);
    EXPECT_EQ(got, sizes) << name;
  }
}

TEST(PermGroup, SimplicityPerfectnessSolvability) {
  EXPECT_EQ(is_simple(groups::alternating(5)).value, Tri::True);
  EXPECT_EQ(is_simple(groups::symmetric(5)).value, Tri::False);
  EXPECT_EQ(is_simple(groups::gl3_2_on_7()).value, Tri::True);
  EXPECT_EQ(is_simple(groups::cyclic(6)).value, Tri::False);
  EXPECT_EQ(is_simple(groups::mathieu(22)).value, Tri::True);
  EXPECT_TRUE(is_perfect(groups::alternating(6)));
  EXPECT_FALSE(is_perfect(groups::symmetric(6)));
  EXPECT_TRUE(is_solvable(groups::symmetric(4)));
  EXPECT_FALSE(is_solvable(groups::symmetric(5)));
  EXPECT_EQ(derived_subgroup(groups::symmetric(6)).order(), 360);
  auto series = derived_series(groups::symmetric(4));
  ASSERT_EQ(series.size(), 4u);
  EXPECT_EQ(series[1].order(), 12);
  EXPECT_EQ(series[2].order(), 4);
  EXPECT_EQ(series[3].order(), 1);
}

TEST(PermGroup, LargeSimpleGroupsUseTheOracle) {
  GroupCheckOptions opts;
  opts.exhaustive_limit = 1000;
  SimplicityResult r = is_simple(groups::alternating(8), opts);
  EXPECT_NE(r.method, "exact");
  opts.oracle = [](const PermGroup& g) -> std::optional<bool> {
    if (g.order() == 20160) return true;
    return std::nullopt;
  };
  EXPECT_EQ(is_simple(groups::alternating(8), opts).value, Tri::True);
}

TEST(PermGroup, NormalSubgroupsOfSmallIndex) {
  EXPECT_EQ(has_normal_subgroup_of_index_dividing(groups::symmetric(5), 2).value, Tri::True);
  EXPECT_EQ(has_normal_subgroup_of_index_dividing(groups::alternating(5), 2).value, Tri::False);
  EXPECT_EQ(has_normal_subgroup_of_index_dividing(groups::symmetric(4), 3).value, Tri::False);
  EXPECT_EQ(has_normal_subgroup_of_index_dividing(groups::symmetric(4), 6).value, Tri::True);
  EXPECT_EQ(has_normal_subgroup_of_index_dividing(groups::alternating(4), 3).value, Tri::True);
  EXPECT_EQ(has_normal_subgroup_of_index_dividing(groups::symmetric(7), 1).value, Tri::False);
  EXPECT_EQ(has_normal_subgroup_of_index_dividing(groups::mathieu(11), 5).value, Tri::False);
}

TEST(PermGroup, CenterOrder) {
  EXPECT_EQ(center_order(groups::gl2_regular(3)), 2u);
  EXPECT_EQ(center_order(groups::symmetric(5)), 1u);
  EXPECT_EQ(center_order(groups::cyclic(9)), 9u);
}

TEST(PermGroup, PrimeDivisors) {
  EXPECT_EQ(prime_divisors(std::uint64_t{95040}), (std::vector<std::uint64_t>{2, 3, 5, 11}));
  EXPECT_EQ(prime_divisors(BigInt(244823040)), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 23}));
  EXPECT_TRUE(prime_divisors(std::uint64_t{1}).empty());
}

TEST(PermGroup, RejectsWrongDegree) {
  EXPECT_THROW(PermGroup(5, {Perm::parse("(1 2)", 4)}), std::invalid_argument);
}
