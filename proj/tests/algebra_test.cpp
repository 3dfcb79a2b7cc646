#include <gtest/gtest.h>

#include <random>

#include "endocert/algebra.hpp"
#include "endocert/errors.hpp"
#include "oracles.hpp"

using namespace endocert;

namespace {

MatF from_bits(std::uint32_t m, std::size_t d) {
  MatF x(2, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) x.set(i, j, (m >> (i * d + j)) & 1u);
  return x;
}

MatF upper_triangular_unit(std::uint32_t ell, std::size_t d, std::size_t i, std::size_t j) {
  MatF x(ell, d, d);
  x.set(i, j, 1);
  return x;
}

}  // namespace

TEST(Algebra, FlattenIsColumnMajor) {
  MatF x = MatF::from_rows(3, {{1, 2}, {0, 1}});
  MatF f = flatten(x);
  EXPECT_EQ(f.rows(), 1u);
  EXPECT_EQ(f.get(0, 0), 1u);
  EXPECT_EQ(f.get(0, 1), 0u);
  EXPECT_EQ(f.get(0, 2), 2u);
  EXPECT_EQ(unflatten(f, 2), x);
}

TEST(Algebra, CentralizerMatchesBruteForceCommutant) {
  std::mt19937_64 rng(2024);
  for (std::size_t d : {3u, 4u}) {
    oracle::Bits B{d};
    const std::uint32_t total = 1u << (d * d);
    for (int t = 0; t < 6; ++t) {
      std::vector<std::uint32_t> gens;
      std::size_t k = 1 + rng() % 3;
      for (std::size_t i = 0; i < k; ++i) gens.push_back(static_cast<std::uint32_t>(rng() % total));
      std::vector<std::uint32_t> commutant;
      for (std::uint32_t x = 0; x < total; ++x) {
        bool ok = true;
        for (auto g : gens) ok = ok && B.mul(x, g) == B.mul(g, x);
        if (ok) commutant.push_back(x);
      }
      std::vector<MatF> mats;
      for (auto g : gens) mats.push_back(from_bits(g, d));
      FSubalgebra c = centralizer_basis(mats, 2, d);
      EXPECT_EQ(std::size_t{1} << c.dim(), commutant.size());
      for (auto x : commutant) EXPECT_TRUE(c.contains(from_bits(x, d)));
    }
  }
}

TEST(Algebra, EmptyCentralizerIsFullMatrixAlgebra) {
  FSubalgebra a = centralizer_basis({}, 3, 3);
  EXPECT_EQ(a.dim(), 9u);
  EXPECT_EQ(a.radical_dim(), 0u);
  EXPECT_FALSE(a.commutative());
  EXPECT_TRUE(double_centralizer_check(a));
}

TEST(Algebra, FieldFromIrreducibleCompanion) {
  // x^3 + x + 1 and x^4 + x + 1 are irreducible over F_2.
  MatF c3 = MatF::from_rows(2, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}});
  FSubalgebra a = algebra_closure({c3}, 2, 3);
  EXPECT_EQ(a.dim(), 3u);
  FieldTest f = is_field_algebra(a);
  EXPECT_TRUE(f.is_field);
  EXPECT_EQ(f.field_size, 8u);
  MatF c4 = MatF::from_rows(2, {{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  FieldTest g = is_field_algebra(algebra_closure({c4}, 2, 4));
  EXPECT_TRUE(g.is_field);
  EXPECT_EQ(g.field_size, 16u);
  // x^2 + 1 = (x + 1)^2 is not.
  MatF n2 = MatF::from_rows(2, {{0, 1}, {1, 0}});
  FSubalgebra b = algebra_closure({n2}, 2, 2);
  EXPECT_FALSE(is_field_algebra(b).is_field);
  EXPECT_EQ(b.radical_dim(), 1u);
}

TEST(Algebra, SplitProductIsNotAField) {
  MatF e = MatF::from_rows(5, {{1, 0}, {0, 0}});
  FSubalgebra a = algebra_closure({e}, 5, 2);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a.radical_dim(), 0u);
  EXPECT_EQ(a.factor_count(), 2u);
  EXPECT_FALSE(a.is_field());
}

TEST(Algebra, TriangularRadical) {
  for (std::uint32_t ell : {2u, 3u, 5u})
    for (std::size_t d : {2u, 3u, 4u}) {
      std::vector<MatF> span;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) span.push_back(upper_triangular_unit(ell, d, i, j));
      FSubalgebra t(ell, d, span);
      EXPECT_EQ(t.dim(), d * (d + 1) / 2);
      EXPECT_EQ(t.radical_dim(), d * (d - 1) / 2) << ell << " " << d;
      EXPECT_EQ(radical_basis(t).rows(), d * (d - 1) / 2);
      EXPECT_THROW(double_centralizer_check(t), std::invalid_argument);
    }
}

TEST(Algebra, RejectsNonAlgebras) {
  MatF n = MatF::from_rows(2, {{0, 1}, {0, 0}});
  EXPECT_THROW(FSubalgebra(2, 2, {n}), std::invalid_argument);  // no identity
  MatF i = MatF::identity(2, 2);
  MatF e12 = MatF::from_rows(2, {{0, 1}, {0, 0}}), e21 = MatF::from_rows(2, {{0, 0}, {1, 0}});
  EXPECT_THROW(FSubalgebra(2, 2, {i, e12, e21}), std::invalid_argument);  // not closed
}

TEST(Algebra, CoordinatesAndSpans) {
  MatF c3 = MatF::from_rows(2, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}});
  FSubalgebra a = algebra_closure({c3}, 2, 3);
  FSubalgebra b = algebra_closure({c3 * c3}, 2, 3);
  EXPECT_TRUE(a.same_span(b));
  auto co = a.coordinates(c3 * c3 + MatF::identity(2, 3));
  ASSERT_TRUE(co.has_value());
  MatF back(2, 3, 3);
  for (std::size_t i = 0; i < co->size(); ++i) back = back + a.basis()[i].scaled((*co)[i]);
  EXPECT_EQ(back, c3 * c3 + MatF::identity(2, 3));
  EXPECT_FALSE(a.coordinates(MatF::from_rows(2, {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})).has_value());
}
