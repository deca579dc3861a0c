/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/gomory.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace dfrob {
namespace {

CanonicalSystem tight(long p, std::size_t n) {
  IntMatrix A(n + 1, n);
  IntVector b(n + 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    A(i, i) = 1;
  A(n - 1, n - 1) = p;
  b[n - 1] = p - 1;
  A(n, n - 1) = -p;
  b[n] = -1;
  return CanonicalSystem(A, b);
}

Integer l1(const IntVector &v) {
  Integer s = 0;
  for (const auto &x : v)
    s += abs(x);
  return s;
}

TEST(SolveCorner, Identity) {
  auto c = solve_corner(IntMatrix::identity(3), IntVector{4, -2, 7});
  EXPECT_EQ(c.z, (IntVector{4, -2, 7}));
  EXPECT_EQ(c.y, (IntVector{0, 0, 0}));
}

TEST(SolveCorner, DiagonalExample) {
  auto c = solve_corner(IntMatrix{{1, 0}, {0, 3}}, IntVector{0, 2});
  EXPECT_EQ(c.z, (IntVector{0, 0}));
  EXPECT_EQ(c.y, (IntVector{0, 2}));
}

TEST(SolveCorner, Scalar) {
  for (long p = 1; p <= 9; ++p) {
    auto c = solve_corner(IntMatrix{{p}}, IntVector{p - 1});
    EXPECT_EQ(c.z, IntVector{0});
    EXPECT_EQ(c.y, IntVector{p - 1});
  }
}

TEST(SolveCorner, Singular) {
  try {
    solve_corner(IntMatrix{{1, 2}, {2, 4}}, IntVector{0, 0});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::Singular);
  }
}

TEST(SolveCorner, SlackNormBoundOnRandomBases) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix AB = testing::random_matrix(rng, n, n, -9, 9);
    const Integer d = abs(testing::cofactor_det(AB));
    if (d == 0)
      continue;
    IntVector b = testing::random_vector(rng, n, -50, 50);
    auto c = solve_corner(AB, b);
    IntVector lhs = AB * c.z;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(lhs[i] + c.y[i], b[i]);
      EXPECT_GE(c.y[i], 0);
    }
    EXPECT_LE(l1(c.y), d - 1);
  }
}

TEST(CanonicalGomory, TightFamilyMissesByOne) {
  for (long p = 2; p <= 10; ++p)
    for (std::size_t n = 1; n <= 3; ++n) {
      CanonicalSystem sys = tight(p, n);
      IndexSet diag;
      for (std::size_t i = 0; i < n; ++i)
        diag.push_back(i);
      auto r = solve_canonical_gomory(sys, diag);
      EXPECT_EQ(r.delta, p);
      EXPECT_EQ(r.delta_B, p);
      ASSERT_TRUE(r.vertex_slack.has_value());
      EXPECT_EQ(*r.vertex_slack, p - 2);
      EXPECT_FALSE(r.precondition_met);
      EXPECT_EQ(r.violated_row, n);
      EXPECT_FALSE(r.verified);
    }
}

TEST(CanonicalGomory, UnimodularBaseReturnsVertex) {
  CanonicalSystem sys(IntMatrix{{1, 0}, {1, 1}, {-1, -1}}, IntVector{3, 5, 0});
  auto r = solve_canonical_gomory(sys, {0, 1});
  EXPECT_EQ(r.z, (IntVector{3, 2}));
  EXPECT_EQ(r.slack_B, (IntVector{0, 0}));
  EXPECT_TRUE(r.precondition_met);
  EXPECT_TRUE(r.verified);
}

TEST(CanonicalGomory, InflatedRhsIsFeasible) {
  std::mt19937_64 rng(4);
  int done = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t k = 1 + trial % 3;
    IntMatrix A = testing::random_matrix(rng, n + k, n, -4, 4);
    if (rank(to_rational(A)) < n)
      continue;
    CanonicalSystem probe(A, IntVector(n + k));
    IndexSet B = independent_rows(to_rational(A));
    IntVector b(n + k);
    IntVector bB = testing::random_vector(rng, n, -10, 10);
    for (std::size_t i = 0; i < n; ++i)
      b[B[i]] = bB[i];
    const RatVector v = solve(to_rational(A.select_rows(B)), to_rational(bB));
    for (std::size_t i = 0; i < n + k; ++i) {
      if (std::find(B.begin(), B.end(), i) != B.end())
        continue;
      Rational av = 0;
      for (std::size_t j = 0; j < n; ++j)
        av += A(i, j) * v[j];
      b[i] = ceil(av + Rational(probe.delta() - 1));
    }
    CanonicalSystem sys = probe.with_rhs(b);
    auto r = solve_canonical_gomory(sys, B);
    EXPECT_TRUE(r.precondition_met);
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(testing::leq(A, r.z, b));
    ++done;
  }
  EXPECT_GT(done, 60);
}

TEST(StandardGomory, IdentityIsDirect) {
  StandardSystem sys(IntMatrix::identity(3), IntVector{2, 0, 5});
  auto r = solve_standard_gomory(sys, {0, 1, 2});
  EXPECT_EQ(r.z, (IntVector{2, 0, 5}));
  EXPECT_TRUE(r.verified);
}

TEST(StandardGomory, TwoThree) {
  StandardSystem sys(IntMatrix{{2, 3}}, IntVector{12});
  auto r = solve_standard_gomory(sys, {0});
  EXPECT_TRUE(r.precondition_met);
  ASSERT_TRUE(r.verified);
  EXPECT_EQ(2 * r.z[0] + 3 * r.z[1], 12);

  StandardSystem one = sys.with_rhs({1});
  for (std::size_t c = 0; c < 2; ++c) {
    auto q = solve_standard_gomory(one, {c});
    EXPECT_FALSE(q.precondition_met);
    EXPECT_FALSE(q.verified);
  }
  EXPECT_TRUE(testing::nonneg_solutions(IntMatrix{{2, 3}}, {1}).empty());
}

TEST(StandardGomory, RandomPreconditionImpliesSolution) {
  std::mt19937_64 rng(17);
  int done = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t k = 1 + trial % 2;
    const std::size_t n = k + 1 + trial % 3;
    IntMatrix A = testing::random_matrix(rng, k, n, -5, 5);
    if (rank(to_rational(A)) < k)
      continue;
    StandardSystem probe(A, IntVector(k));
    if (!probe.normalized())
      continue;
    IndexSet B = independent_rows(to_rational(A.transpose()));
    IntVector x(n);
    for (std::size_t j : B)
      x[j] = probe.delta() - 1 + static_cast<long>(rng() % 5);
    StandardSystem sys = probe.with_rhs(A * x);
    auto r = solve_standard_gomory(sys, B);
    EXPECT_TRUE(r.precondition_met);
    EXPECT_TRUE(r.verified);
    EXPECT_TRUE(sys.contains(r.z));
    ++done;
  }
  EXPECT_GT(done, 40);
}

} // namespace
} // namespace dfrob
