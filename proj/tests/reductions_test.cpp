/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/reductions.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace dfrob {
namespace {

std::vector<Integer> sorted_abs_minors(const IntMatrix &m, std::size_t order) {
  std::vector<Integer> out;
  testing::subsets(m.rows(), order, [&](const auto &rs) {
    testing::subsets(m.cols(), order, [&](const auto &cs) {
      Integer d = abs(testing::cofactor_det(m.submatrix(rs, cs)));
      if (d != 0)
        out.push_back(d);
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

TEST(NormalizeGcd, AlreadyPrimitive) {
  StandardSystem sys(IntMatrix{{2, 3}}, IntVector{7});
  auto r = normalize_gcd(sys);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->matrix(), sys.matrix());
  EXPECT_EQ(r->rhs(), sys.rhs());
}

TEST(NormalizeGcd, DividesOutTheGcd) {
  StandardSystem sys(IntMatrix{{2, 4}}, IntVector{6});
  auto r = normalize_gcd(sys);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->matrix(), (IntMatrix{{1, 2}}));
  EXPECT_EQ(r->rhs(), IntVector{3});
  EXPECT_FALSE(normalize_gcd(sys.with_rhs({5})).has_value());
}

TEST(NormalizeGcd, RandomPreservesSolutionsAndDelta) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + trial % 2;
    const std::size_t n = k + 1 + trial % 2;
    IntMatrix A = testing::random_matrix(rng, k, n, -6, 6);
    for (std::size_t j = 0; j < n; ++j)
      A(0, j) = 1 + static_cast<long>(rng() % 4) * 2; // odd, positive
    if (k > 1)
      for (std::size_t j = 0; j < n; ++j)
        A(1, j) *= 2;
    if (rank(to_rational(A)) < k)
      continue;
    StandardSystem sys(A, testing::random_vector(rng, k, 0, 12));
    auto r = normalize_gcd(sys);
    const auto sols = testing::nonneg_solutions(A, sys.rhs());
    if (!r) {
      EXPECT_TRUE(sols.empty());
      continue;
    }
    EXPECT_TRUE(r->normalized());
    EXPECT_EQ(r->delta() * sys.stats()->delta_gcd(), sys.delta());
    for (const auto &x : sols)
      EXPECT_TRUE(r->contains(x));
  }
}

TEST(StandardToCanonical, TwoThree) {
  StandardSystem sys(IntMatrix{{2, 3}}, IntVector{5});
  auto red = standard_to_canonical(sys);
  ASSERT_TRUE(red.system.has_value());
  EXPECT_EQ(red.A_hat.rows(), 2u);
  EXPECT_EQ(red.A_hat.cols(), 1u);
  EXPECT_TRUE((sys.matrix() * red.A_hat).is_zero());
  EXPECT_EQ(sys.matrix() * red.offset, IntVector{5});
  EXPECT_EQ(red.system->delta(), 3);
  // The only nonnegative solution is (1, 1).
  std::vector<IntVector> pts;
  for (long t = -10; t <= 10; ++t)
    if (red.system->contains(IntVector{t}))
      pts.push_back(red.to_standard(IntVector{t}));
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], (IntVector{1, 1}));
  EXPECT_EQ(red.to_standard(red.to_canonical(pts[0])), pts[0]);
}

TEST(StandardToCanonical, SquareIsDegenerate) {
  StandardSystem sys(IntMatrix::identity(2), IntVector{3, 4});
  auto red = standard_to_canonical(sys);
  EXPECT_FALSE(red.system.has_value());
  EXPECT_EQ(red.offset, (IntVector{3, 4}));
}

TEST(StandardToCanonical, RejectsUnnormalized) {
  StandardSystem sys(IntMatrix{{2, 4}}, IntVector{6});
  try {
    standard_to_canonical(sys);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrimitive);
  }
}

TEST(StandardToCanonical, RandomBijectionAndMinors) {
  std::mt19937_64 rng(33);
  int done = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t k = 1 + trial % 2;
    const std::size_t n = k + 1 + trial % 3;
    IntMatrix A = testing::random_matrix(rng, k, n, -3, 3);
    for (std::size_t j = 0; j < n; ++j)
      A(0, j) = 1 + static_cast<long>(rng() % 3);
    if (rank(to_rational(A)) < k)
      continue;
    StandardSystem sys(A, testing::random_vector(rng, k, 0, 6));
    if (!sys.normalized())
      continue;
    auto red = standard_to_canonical(sys);
    ASSERT_TRUE(red.system.has_value());
    const IntMatrix &Ah = red.A_hat;
    EXPECT_TRUE((A * Ah).is_zero());
    EXPECT_EQ(sorted_abs_minors(A, k), sorted_abs_minors(Ah, n - k));

    std::set<IntVector> standard;
    for (const auto &x : testing::nonneg_solutions(A, sys.rhs()))
      standard.insert(x);
    std::set<IntVector> mapped;
    auto box = testing::vertex_box(Ah, red.offset);
    if (box)
      for (const auto &t : testing::box_points(Ah, red.offset, box->first,
                                               box->second)) {
        IntVector x = red.to_standard(t);
        EXPECT_EQ(red.to_canonical(x), t);
        mapped.insert(x);
      }
    EXPECT_EQ(mapped, standard);
    for (const auto &x : standard)
      EXPECT_TRUE(red.system->contains(red.to_canonical(x)));
    ++done;
  }
  EXPECT_GT(done, 30);
}

TEST(CanonicalToModular, UnimodularSquare) {
  CanonicalSystem sys(IntMatrix{{1, 1}, {0, 1}}, IntVector{0, 0});
  auto red = canonical_to_modular_standard(sys);
  EXPECT_EQ(red.system.A.rows(), 0u);
  for (const auto &m : red.system.moduli)
    EXPECT_EQ(m, 1);
}

TEST(CanonicalToModular, TightInstanceModuli) {
  CanonicalSystem sys(IntMatrix{{1, 0}, {0, 3}, {0, -3}}, IntVector{0, 2, -1});
  auto red = canonical_to_modular_standard(sys);
  Integer prod = 1;
  for (const auto &m : red.system.moduli)
    prod *= m;
  EXPECT_EQ(prod, sys.stats()->delta_gcd());
  EXPECT_EQ(prod, 3);
  EXPECT_TRUE((red.system.A * sys.matrix()).is_zero());
}

TEST(CanonicalToModular, RandomBijection) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const std::size_t k = 1 + trial % 2;
    IntMatrix A = testing::random_matrix(rng, n + k, n, -4, 4);
    if (rank(to_rational(A)) < n)
      continue;
    IntVector b = testing::random_vector(rng, n + k, 0, 8);
    CanonicalSystem sys(A, b);
    auto red = canonical_to_modular_standard(sys);
    Integer prod = 1;
    for (const auto &m : red.system.moduli)
      prod *= m;
    EXPECT_EQ(prod, sys.stats()->delta_gcd());
    EXPECT_EQ(abs(testing::cofactor_det(red.system.A.stack(red.system.G))), 1);
    IntVector lo(n, -12), hi(n, 12);
    for (const auto &z : testing::box_points(A, b, lo, hi)) {
      IntVector xh = red.to_modular(z);
      EXPECT_TRUE(red.system.contains(xh));
      EXPECT_EQ(red.to_canonical(xh), z);
    }
  }
}

} // namespace
} // namespace dfrob
