#include "k3pol/error.hpp"
#include "k3pol/matrix.hpp"
#include "k3pol/random.hpp"

#include <gtest/gtest.h>

using namespace k3pol;

namespace {

// Cofactor expansion; independent of the Bareiss implementation.
Integer laplace(const IntegerMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * laplace(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

}  // namespace

TEST(Matrix, BasicConstruction) {
  const IntegerMatrix a{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(a.rows(), 2u);
  EXPECT_EQ(a.cols(), 3u);
  EXPECT_EQ(a(1, 2), 6);
  EXPECT_EQ(a.transpose()(2, 1), 6);
  EXPECT_EQ(IntegerMatrix::identity(3) * a.transpose(), a.transpose());
  const IntegerMatrix empty(0, 3);
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.transpose().cols(), 0u);
}

TEST(Matrix, MultiplicationAndVector) {
  const IntegerMatrix a{{1, 2}, {3, 4}};
  const IntegerMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (IntegerMatrix{{2, 1}, {4, 3}}));
  const IntVector x{1, -1};
  EXPECT_EQ(a * std::span<const Integer>(x), (IntVector{-1, -1}));
  EXPECT_THROW(a * IntegerMatrix(3, 1), Error);
}

TEST(Matrix, DeterminantMatchesCofactorExpansion) {
  random::Engine rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(random::uniform(rng, 1, 5));
    const auto m = random::matrix(rng, n, n, 20);
    EXPECT_EQ(m.determinant(), laplace(m));
  }
}

TEST(Matrix, RankAndUnimodularity) {
  EXPECT_EQ((IntegerMatrix{{1, 2}, {2, 4}}).rank(), 1u);
  EXPECT_EQ((IntegerMatrix{{1, 2}, {3, 4}}).rank(), 2u);
  EXPECT_FALSE(is_unimodular(IntegerMatrix{{1, 2}, {3, 4}}));
  random::Engine rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto u = random::unimodular(rng, 6, 30);
    EXPECT_TRUE(is_unimodular(u.matrix));
    EXPECT_EQ(u.matrix * u.inverse, IntegerMatrix::identity(6));
  }
}

TEST(Matrix, RowAndColumnOperations) {
  IntegerMatrix a{{1, 2}, {3, 4}};
  a.add_row_multiple(1, 0, -3);
  EXPECT_EQ(a, (IntegerMatrix{{1, 2}, {0, -2}}));
  a.swap_cols(0, 1);
  EXPECT_EQ(a, (IntegerMatrix{{2, 1}, {-2, 0}}));
  a.negate_row(1);
  EXPECT_EQ(a, (IntegerMatrix{{2, 1}, {2, 0}}));
  EXPECT_TRUE((IntegerMatrix{{0, 1}, {1, 0}}).is_symmetric());
}
