/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/basefind.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace dfrob {
namespace {

Rational max_entry(const RatMatrix &M) {
  Rational best = 0;
  for (const auto &v : M.values())
    if (abs(v) > best)
      best = abs(v);
  return best;
}

/// Delta_i of a rational matrix by cofactor expansion.
Rational brute_rat_minor(const RatMatrix &M, std::size_t order) {
  Rational best = 0;
  testing::subsets(M.rows(), order, [&](const auto &rs) {
    testing::subsets(M.cols(), order, [&](const auto &cs) {
      Rational d = abs(testing::cofactor_det(M.submatrix(rs, cs)));
      if (d > best)
        best = d;
    });
  });
  return best;
}

Rational pow(const Rational &q, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i)
    r *= q;
  return r;
}

void expect_swaps_grow(const BaseSearchReport &rep, const Rational &c) {
  for (const auto &s : rep.swaps)
    EXPECT_GT(s.growth, c);
}

TEST(ESurrogate, JustBelowE) {
  EXPECT_LT(e_surrogate().get_d(), 2.718281828459046);
  EXPECT_GT(e_surrogate().get_d(), 2.718281828459);
}

TEST(Maxdet, Examples) {
  EXPECT_EQ(maxdet_subset(to_rational(IntMatrix::identity(3)), 3).cols,
            (IndexSet{0, 1, 2}));
  auto one = maxdet_subset(RatMatrix{{1, 10}}, 1);
  EXPECT_EQ(one.cols, IndexSet{1});
  EXPECT_TRUE(one.exact);
  EXPECT_EQ(maxdet_subset(RatMatrix{{1, 2, 3}, {4, 5, 6}}, 2).cols,
            (IndexSet{0, 2}));
  EXPECT_THROW(maxdet_subset(RatMatrix{{1, 2}, {2, 4}}, 2), Error);
}

TEST(Maxdet, GreedyIsWithinReportedRatio) {
  std::mt19937_64 rng(19);
  BaseSearchOptions greedy;
  greedy.maxdet_cap = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + trial % 3, n = k + 2 + trial % 4;
    IntMatrix A = testing::random_matrix(rng, k, n, -7, 7);
    if (rank(to_rational(A)) < k)
      continue;
    RatMatrix M = to_rational(A);
    auto exact = maxdet_subset(M, k);
    auto approx = maxdet_subset(M, k, greedy);
    EXPECT_FALSE(approx.exact);
    Rational best = abs(det(M.select_cols(exact.cols)));
    Rational got = abs(det(M.select_cols(approx.cols)));
    ASSERT_GT(got, 0);
    EXPECT_LE(best, got * approx.ratio_bound);
  }
}

TEST(PolySearch, AlreadyBounded) {
  IntMatrix A{{1, 0, 0, 0}, {0, 1, 0, 0}};
  auto rep = poly_subdet_search(A);
  EXPECT_TRUE(rep.swaps.empty());
  EXPECT_EQ(rep.base.indices, (IndexSet{0, 1}));
  EXPECT_LE(max_entry(rep.base.M), 1);
}

TEST(PolySearch, SinglePivot) {
  auto rep = poly_subdet_search(IntMatrix{{1, 10}});
  ASSERT_EQ(rep.swaps.size(), 1u);
  EXPECT_EQ(rep.swaps[0].out, IndexSet{0});
  EXPECT_EQ(rep.swaps[0].in, IndexSet{1});
  EXPECT_EQ(rep.swaps[0].growth, 10);
  EXPECT_EQ(rep.base.indices, IndexSet{1});
  EXPECT_EQ(rep.base.M, (RatMatrix{{fraction(1, 10)}}));
}

TEST(PolySearch, RandomWithHugeColumn) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t k = 1 + trial % 3, n = k + 1 + trial % 4;
    IntMatrix A = testing::random_matrix(rng, k, n, -9, 9);
    for (std::size_t i = 0; i < k; ++i)
      A(i, n - 1) *= 1000;
    if (rank(to_rational(A)) < k)
      continue;
    auto rep = poly_subdet_search(A);
    EXPECT_LE(max_entry(rep.base.M), e_surrogate());
    expect_swaps_grow(rep, e_surrogate());
    // Iterations are bounded by log_c(Delta / delta_start) + 1.
    Rational start = rep.base.det_abs;
    for (const auto &s : rep.swaps)
      start /= s.growth;
    EXPECT_GE(start, 1);
  }
}

TEST(PolySearch, RowOrientation) {
  IntMatrix A{{1, 0}, {0, 1}, {5, 7}};
  auto rep = poly_subdet_search(A, BaseOrientation::Rows);
  EXPECT_EQ(rep.base.orientation, BaseOrientation::Rows);
  EXPECT_LE(max_entry(rep.base.M), e_surrogate());
}

TEST(PolySearch, RankDeficient) {
  EXPECT_THROW(poly_subdet_search(IntMatrix{{1, 2}, {2, 4}}), Error);
}

TEST(ExpSearch, UnimodularUnchanged) {
  auto rep = exp_subdet_search(IntMatrix{{1, 0, 1}, {0, 1, 1}});
  EXPECT_TRUE(rep.swaps.empty());
  EXPECT_EQ(rep.base.det_abs, 1);
  EXPECT_LE(max_entry(rep.base.M), 1);
}

TEST(ExpSearch, IdentityPlusColumn) {
  IntMatrix A{{1, 0, 7}, {0, 1, 7}};
  auto rep = exp_subdet_search(A);
  EXPECT_EQ(rep.base.det_abs, 7);
  for (std::size_t i = 1; i <= 1; ++i)
    EXPECT_LE(brute_rat_minor(rep.base.M, i), pow(e_surrogate(), i + 1));
}

TEST(ExpSearch, BudgetExceeded) {
  IntMatrix A = IntMatrix::identity(25);
  try {
    exp_subdet_search(A);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(ExpSearch, GreedyStartStillMeetsBound) {
  std::mt19937_64 rng(29);
  BaseSearchOptions opts;
  opts.maxdet_cap = 0; // force the greedy oracle everywhere
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + trial % 3, n = k + 1 + trial % 3;
    IntMatrix A = testing::random_matrix(rng, k, n, -9, 9);
    if (rank(to_rational(A)) < k)
      continue;
    auto rep = exp_subdet_search(A, opts);
    expect_swaps_grow(rep, e_surrogate());
    for (std::size_t i = 1; i <= rep.minor_bounds.size(); ++i)
      EXPECT_LE(brute_rat_minor(rep.base.M, i), rep.minor_bounds[i - 1]);
  }
}

TEST(ExpSearch, ExactMaxdetHitsDelta) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + trial % 4, n = k + 1 + trial % 3;
    IntMatrix A = testing::random_matrix(rng, k, n, -9, 9);
    if (rank(to_rational(A)) < k)
      continue;
    auto rep = exp_subdet_search(A);
    EXPECT_EQ(rep.base.det_abs, testing::brute_minors(A, k).first);
    for (std::size_t i = 1; i <= std::min(k, n - k); ++i)
      EXPECT_LE(brute_rat_minor(rep.base.M, i), pow(e_surrogate(), i + 1));
  }
}

TEST(ExpSearchDual, SquareHasNoSweep) {
  auto rep = exp_subdet_search_dual(IntMatrix{{1, 1}, {0, 1}});
  EXPECT_TRUE(rep.swaps.empty());
  EXPECT_EQ(rep.base.indices, (IndexSet{0, 1}));
}

TEST(ExpSearchDual, KernelOfTwoThree) {
  auto rep = exp_subdet_search_dual(IntMatrix{{3}, {-2}});
  EXPECT_EQ(rep.base.indices, IndexSet{0});
  EXPECT_EQ(rep.base.M, (RatMatrix{{fraction(-2, 3)}}));
  EXPECT_LE(max_entry(rep.base.M), 1);
}

TEST(ExpSearchDual, RankDeficient) {
  EXPECT_THROW(exp_subdet_search_dual(IntMatrix{{1, 2}, {2, 4}, {3, 6}}), Error);
}

TEST(ExpSearchDual, RandomBounds) {
  std::mt19937_64 rng(37);
  BaseSearchOptions greedy;
  greedy.maxdet_cap = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 3, k = 1 + trial % 3;
    IntMatrix A = testing::random_matrix(rng, d + k, d, -9, 9);
    if (rank(to_rational(A)) < d)
      continue;
    for (const auto &opts : {BaseSearchOptions{}, greedy}) {
      auto rep = exp_subdet_search_dual(A, opts);
      expect_swaps_grow(rep, e_surrogate());
      for (std::size_t i = 1; i <= std::min(d, k); ++i)
        EXPECT_LE(brute_rat_minor(rep.base.M, i), pow(e_surrogate(), i + 1));
    }
  }
}

} // namespace
} // namespace dfrob
