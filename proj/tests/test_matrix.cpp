#include <gtest/gtest.h>

#include "common.hpp"

using namespace sesq;
using testutil::mat;

TEST(Matrix, InverseAndDeterminant) {
  const Field k = Field::prime(5);
  const Matrix m = mat(k, 2, 2, {1, 2, 3, 4});
  EXPECT_EQ(m.determinant(), k.from_int(-2));
  EXPECT_EQ(m * m.inverse(), Matrix::identity(k, 2));
  EXPECT_THROW(mat(k, 2, 2, {1, 2, 2, 4}).inverse(), Error);
}

TEST(Matrix, RankAndNullspaceAreCanonical) {
  const Field k = Field::prime(3);
  const Matrix m = mat(k, 2, 3, {1, 1, 0, 2, 2, 0});
  EXPECT_EQ(m.rank(), 1u);
  const auto ns = m.nullspace();
  ASSERT_EQ(ns.size(), 2u);
  // One vector per free column, with 1 there.
  EXPECT_EQ(ns[0], testutil::vec(k, {2, 1, 0}));
  EXPECT_EQ(ns[1], testutil::vec(k, {0, 0, 1}));
  for (const auto& v : ns) EXPECT_TRUE(is_zero(m * v));
}

TEST(Matrix, SolveConsistentAndInconsistent) {
  const Field q = Field::rational();
  const Matrix m = mat(q, 2, 2, {2, 1, 4, 2});
  EXPECT_TRUE(m.solve(testutil::vec(q, {1, 2})).has_value());
  EXPECT_FALSE(m.solve(testutil::vec(q, {1, 3})).has_value());
  const Matrix inv = mat(q, 2, 2, {1, 2, 3, 4});
  const auto x = inv.solve(testutil::vec(q, {5, 6}));
  ASSERT_TRUE(x);
  EXPECT_EQ(inv * *x, testutil::vec(q, {5, 6}));
}

TEST(Matrix, RationalDeterminantMatchesCofactorExpansion) {
  const Field q = Field::rational();
  const Matrix m = mat(q, 3, 3, {2, -1, 0, -1, 2, -1, 0, -1, 2});
  EXPECT_EQ(m.determinant(), q.from_int(4));
}

TEST(Matrix, SweepOrderFirstCoordinateMostSignificant) {
  const Field k = Field::prime(2);
  FiniteSweep s(k, 2);
  std::vector<Vec> seen;
  do seen.push_back(s.current());
  while (s.next());
  ASSERT_EQ(seen.size(), 4u);
  EXPECT_EQ(seen[1], testutil::vec(k, {0, 1}));
  EXPECT_EQ(seen[2], testutil::vec(k, {1, 0}));
}

TEST(Matrix, SweepSizeRespectsCap) {
  EXPECT_EQ(sweep_size(Field::prime(3), 4, 81), std::optional<std::uint64_t>(81));
  EXPECT_FALSE(sweep_size(Field::prime(3), 4, 80));
  EXPECT_FALSE(sweep_size(Field::rational(), 1, 1000));
}

TEST(Matrix, SpanCoordinates) {
  const Field k = Field::prime(5);
  const Span s(k, 3, {testutil::vec(k, {1, 0, 1}), testutil::vec(k, {0, 1, 1})});
  EXPECT_EQ(s.coords(testutil::vec(k, {2, 3, 0})), testutil::vec(k, {2, 3}));
  EXPECT_FALSE(s.contains(testutil::vec(k, {1, 0, 0})));
  EXPECT_EQ(span_basis(k, 3, {testutil::vec(k, {2, 0, 2}), testutil::vec(k, {1, 0, 1})}).size(), 1u);
}
