#include <gtest/gtest.h>

#include <random>

#include "endocert/heart.hpp"
#include "endocert/named_groups.hpp"

using namespace endocert;

TEST(Heart, Dimension) {
  for (std::size_t n = 3; n <= 24; ++n) {
    HeartModule h(n);
    EXPECT_EQ(h.dim(), 2 * ((n - 1) / 2)) << n;
    EXPECT_EQ(h.act(Perm::identity(n)), MatF::identity(2, h.dim()));
  }
  EXPECT_THROW(HeartModule(2), std::invalid_argument);
}

TEST(Heart, MatrixColumnsAreImagesOfBasisVectors) {
  std::mt19937_64 rng(9);
  for (std::size_t n : {5u, 6u, 8u, 11u}) {
    HeartModule h(n);
    PermGroup s = groups::symmetric(n);
    for (int t = 0; t < 10; ++t) {
      Perm p = s.random_element(rng);
      MatF m = h.act(p);
      for (std::size_t i = 0; i < h.dim(); ++i) {
        std::vector<std::uint8_t> w(n, 0);
        w[p(static_cast<Point>(i))] ^= 1;
        w[p(static_cast<Point>(n - 1))] ^= 1;
        auto c = h.coordinates(w);
        for (std::size_t r = 0; r < h.dim(); ++r) EXPECT_EQ(m.get(r, i), c[r]);
      }
    }
  }
}

TEST(Heart, ActionReversesProducts) {
  std::mt19937_64 rng(1);
  for (std::size_t n : {7u, 10u}) {
    HeartModule h(n);
    PermGroup s = groups::symmetric(n);
    for (int t = 0; t < 10; ++t) {
      Perm a = s.random_element(rng), b = s.random_element(rng);
      EXPECT_EQ(h.act(a * b), h.act(b) * h.act(a));
    }
  }
}

TEST(Heart, KleinGroupActsTriviallyForFourRoots) {
  HeartModule h(4);
  EXPECT_FALSE(h.faithful());
  EXPECT_TRUE(h.act(Perm::parse("(1 2)(3 4)", 4)).is_identity());
  EXPECT_TRUE(h.act(Perm::parse("(1 3)(2 4)", 4)).is_identity());
  EXPECT_FALSE(h.act(Perm::parse("(1 2)", 4)).is_identity());
  for (std::size_t n : {5u, 6u}) EXPECT_TRUE(HeartModule(n).faithful());
}

// Frozen classifications, each cross-checked when first computed against an
// independent commutant search over F_2.
TEST(Heart, CentralizerCensus) {
  using namespace groups;
  struct Case {
    PermGroup g;
    CentralizerKind kind;
    std::size_t dim;
  };
  std::vector<Case> cases = {
      {symmetric(5), CentralizerKind::Scalars, 1},    {alternating(6), CentralizerKind::Scalars, 1},
      {gl3_2_on_7(), CentralizerKind::Scalars, 1},    {agl3_2(), CentralizerKind::Scalars, 1},
      {mathieu(11), CentralizerKind::Scalars, 1},     {a7_on_15(), CentralizerKind::Scalars, 1},
      {affine_line(5, 4), CentralizerKind::Scalars, 1}, {psl2(5), CentralizerKind::Field, 2},
      {psl2(13), CentralizerKind::Field, 2},          {psl2(9), CentralizerKind::NonField, 2},
      {psl2(7), CentralizerKind::NonField, 2},        {cyclic(5), CentralizerKind::Field, 4},
      {dihedral(5), CentralizerKind::Field, 2},       {alternating(3), CentralizerKind::Field, 2},
  };
  for (const auto& c : cases) {
    CentralizerReport r = heart_centralizer(c.g);
    EXPECT_EQ(r.kind, c.kind) << c.g.degree() << " " << c.g.order();
    EXPECT_EQ(r.algebra.dim(), c.dim) << c.g.degree() << " " << c.g.order();
    if (c.kind == CentralizerKind::Field) EXPECT_EQ(r.field_size, std::uint64_t{1} << c.dim);
  }
}

TEST(Heart, GroupAlgebraOfSymmetricGroupIsFull) {
  FSubalgebra a = heart_group_algebra(groups::symmetric(5));
  EXPECT_EQ(a.dim(), 16u);
  EXPECT_TRUE(double_centralizer_check(a));
}
