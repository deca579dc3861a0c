/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/discrepancy.hpp"
#include "dfrob/systems.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace dfrob {
namespace {

Rational err(const RatMatrix &M, const RatVector &x, const IntVector &z) {
  Rational best = 0;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < M.cols(); ++j)
      s += M(i, j) * (x[j] - Rational(z[j]));
    if (abs(s) > best)
      best = abs(s);
  }
  return best;
}

/// First minimizer in lexicographic sigma order, sigma_0 most significant.
IntVector brute_round(const RatMatrix &M, const RatVector &x) {
  IndexSet support;
  IntVector base(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    base[j] = floor(x[j]);
    if (Rational(base[j]) != x[j])
      support.push_back(j);
  }
  const std::size_t s = support.size();
  IntVector best;
  Rational best_err;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << s); ++code) {
    IntVector z = base;
    for (std::size_t t = 0; t < s; ++t)
      if ((code >> (s - 1 - t)) & 1)
        z[support[t]] += 1;
    Rational e = err(M, x, z);
    if (best.empty() || e < best_err) {
      best = z;
      best_err = e;
    }
  }
  return best;
}

RatMatrix random_rat_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c) {
  RatMatrix M(r, c);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      M(i, j) = fraction(num(rng), den(rng));
  return M;
}

RatVector random_point(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_int_distribution<int> num(0, 20), den(1, 5);
  RatVector x(n);
  for (auto &v : x)
    v = fraction(num(rng), den(rng));
  return x;
}

TEST(RoundNonneg, IntegerPointIsKept) {
  RatMatrix M{{1, 2}, {3, 4}};
  auto r = round_nonneg(M, {3, 5});
  EXPECT_EQ(r.z, (IntVector{3, 5}));
  EXPECT_EQ(r.achieved, 0);
  EXPECT_TRUE(r.support.empty());
  EXPECT_TRUE(r.certified);
}

TEST(RoundNonneg, ZeroMapFloors) {
  RatMatrix M(2, 3);
  auto r = round_nonneg(M, {fraction(1, 2), fraction(7, 3), 1});
  EXPECT_EQ(r.z, (IntVector{0, 2, 1}));
  EXPECT_EQ(r.achieved, 0);
}

TEST(RoundNonneg, AllOnesRow) {
  RatMatrix M{{1, 1, 1}};
  Rational h = fraction(1, 2);
  auto r = round_nonneg(M, {h, h, h});
  EXPECT_EQ(r.achieved, h);
  EXPECT_EQ(r.z, (IntVector{0, 0, 1}));
}

TEST(RoundNonneg, RejectsNegative) {
  RatMatrix M{{1}};
  EXPECT_THROW(round_nonneg(M, {-1}), Error);
}

TEST(RoundNonneg, MatchesBruteForce) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + trial % 10;
    RatMatrix M = random_rat_matrix(rng, rows, cols);
    RatVector x = random_point(rng, cols);
    auto r = round_nonneg(M, x);
    ASSERT_TRUE(r.certified);
    EXPECT_EQ(r.achieved, err(M, x, r.z));
    EXPECT_EQ(r.z, brute_round(M, x));
    Rational envelope = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      Rational row = 0;
      for (std::size_t j : r.support)
        row += abs(M(i, j));
      if (row > envelope)
        envelope = row;
    }
    EXPECT_LE(r.achieved, envelope);
  }
}

TEST(RoundNonneg, ZeroColumnsDoNotChangeError) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    RatMatrix M = random_rat_matrix(rng, 3, 4);
    RatVector x = random_point(rng, 4);
    RatMatrix W(3, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        W(i, j) = M(i, j);
    RatVector y = x;
    y.push_back(2);
    y.push_back(5);
    EXPECT_EQ(round_nonneg(M, x).achieved, round_nonneg(W, y).achieved);
  }
}

TEST(RoundNonneg, HeuristicBeyondCap) {
  std::mt19937_64 rng(6);
  RatMatrix M = random_rat_matrix(rng, 3, 30);
  RatVector x(30, fraction(1, 2));
  RoundingOptions opts;
  opts.exhaustive_cap = 10;
  opts.restarts = 200;
  auto r = round_nonneg(M, x, opts);
  EXPECT_FALSE(r.certified);
  EXPECT_EQ(r.method, RoundingMethod::Heuristic);
  EXPECT_EQ(r.achieved, err(M, x, r.z));
  for (std::size_t j = 0; j < 30; ++j)
    EXPECT_TRUE(r.z[j] == 0 || r.z[j] == 1);
  // Deterministic under a fixed seed.
  EXPECT_EQ(round_nonneg(M, x, opts).z, r.z);
}

TEST(RoundNonneg, HugeEntriesUseWideArithmetic) {
  RatMatrix M{{Rational(Integer("100000000000000000000")), 1}};
  auto r = round_nonneg(M, {fraction(1, 2), fraction(1, 2)});
  EXPECT_EQ(r.z, (IntVector{0, 1}));
  EXPECT_EQ(r.achieved, Rational(Integer("50000000000000000000")) - fraction(1, 2));
}

TEST(ExactDisc, Examples) {
  EXPECT_EQ(exact_disc(RatMatrix{{1}}), 1);
  EXPECT_EQ(exact_disc(RatMatrix{{1, 1}}), 0);
  EXPECT_EQ(exact_disc(RatMatrix{{1, 1}, {1, -1}}), 2);
  EXPECT_THROW(exact_disc(RatMatrix(1, 30), 24), Error);
}

TEST(ExactDisc, MatchesSignEnumeration) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 3, cols = 1 + trial % 7;
    RatMatrix M = random_rat_matrix(rng, rows, cols);
    Rational best = -1;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << cols); ++code) {
      Rational worst = 0;
      for (std::size_t i = 0; i < rows; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols; ++j)
          s += ((code >> j) & 1) ? Rational(-M(i, j)) : M(i, j);
        if (abs(s) > worst)
          worst = abs(s);
      }
      if (best < 0 || worst < best)
        best = worst;
    }
    EXPECT_EQ(exact_disc(M), best);
  }
}

TEST(DiscBound, ZeroMatrix) {
  auto b = disc_bound(RatMatrix(2, 3));
  EXPECT_EQ(b.numeric_envelope, 0);
  EXPECT_EQ(b.delta1, 0);
}

TEST(DiscBound, UnitMinorsGiveUnitDetlb) {
  auto b = disc_bound(to_rational(IntMatrix{{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(b.detlb.minor, 1);
  for (const auto &m : b.minor_maxima)
    EXPECT_LE(m, 1);
  EXPECT_FALSE(b.describe().empty());
}

TEST(DiscBound, MaxdetBaseHasUnitMinors) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2, k = 1 + trial % 3;
    IntMatrix A = testing::random_matrix(rng, n + k, n, -5, 5);
    if (rank(to_rational(A)) < n)
      continue;
    IndexSet best;
    Integer best_det = 0;
    testing::subsets(n + k, n, [&](const auto &rs) {
      Integer d = abs(testing::cofactor_det(A.select_rows(rs)));
      if (d > best_det) {
        best_det = d;
        best = rs;
      }
    });
    auto base = make_row_base(A, best);
    auto b = disc_bound(base.M);
    for (const auto &m : b.minor_maxima)
      EXPECT_LE(m, 1);
    EXPECT_LE(b.numeric_envelope, Rational(static_cast<long>(n)));
  }
}

} // namespace
} // namespace dfrob
