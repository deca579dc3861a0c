/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
// Cross-module properties on random instances.

#include "dfrob/io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace dfrob;
using namespace dfrob::testing;

namespace {

IntMatrix random_rank_n(std::mt19937_64 &rng, std::size_t rows, std::size_t n) {
  for (;;) {
    IntMatrix A = random_matrix(rng, rows, n, -4, 4);
    if (brute_rank(A) == n)
      return A;
  }
}

} // namespace

// An infeasible b seen by the oracle never reaches the pipeline's threshold,
// and the empirical threshold stays below the constructive bound.
TEST(Properties, OracleNeverBeatsThePipeline) {
  std::mt19937_64 rng(41);
  int scanned = 0;
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 1 + it % 2;
    IntMatrix A = random_rank_n(rng, n + 2, n);
    IntVector b = A * random_vector(rng, n, -2, 2);
    IntVector lo = b, hi = b;
    for (std::size_t i = 0; i < b.size(); ++i) {
      lo[i] -= 1;
      hi[i] += 1;
    }
    OracleReport rep;
    try {
      rep = oracle_slackfrob_box(A, lo, hi);
    } catch (const Error &e) {
      ASSERT_EQ(e.code(), ErrorCode::UnboundedPolytope);
      continue;
    }
    ++scanned;
    Rational worst = 0;
    for (const auto &row : rep.rows) {
      if (row.feasible || !row.slack)
        continue;
      SolveResult r = solve_canonical_with_slack(CanonicalSystem(A, row.b));
      ASSERT_TRUE(r.certificate);
      EXPECT_LT(*row.slack, r.required);
      EXPECT_FALSE(r.certificate->verified);
      worst = std::max(worst, r.required);
    }
    EXPECT_LE(rep.empirical_threshold, ceil(worst));
  }
  EXPECT_GT(scanned, 10);
}

TEST(Properties, VerifiedMeansFeasibleInEveryMode) {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 90; ++it) {
    const std::size_t n = 1 + it % 3, k = 1 + (it / 3) % 3;
    IntMatrix A = random_rank_n(rng, n + k, n);
    IntVector b = A * random_vector(rng, n, -3, 3);
    for (auto &v : b)
      v += it % 7;
    CanonicalSystem sys(A, b);
    SolveOptions opts;
    opts.mode = static_cast<SolveMode>(it % 3);
    SolveResult r = solve_canonical_with_slack(sys, opts);
    ASSERT_NE(r.status, SolveStatus::PipelineFailed);
    const bool verified = r.certificate && r.certificate->verified;
    EXPECT_EQ(verified, r.status == SolveStatus::Verified);
    if (verified)
      EXPECT_TRUE(leq(A, r.certificate->z, b));
    CertificateText c = parse_certificate(format_certificate(sys, r));
    EXPECT_EQ(recheck(c), verified);
  }
}

TEST(Properties, StandardPointsSolveTheSystem) {
  std::mt19937_64 rng(43);
  int verified = 0;
  for (int it = 0; it < 60; ++it) {
    const std::size_t k = 1 + it % 2, n = k + 1 + it % 3;
    IntMatrix A = random_matrix(rng, k, n, -3, 3);
    if (brute_rank(A) != k)
      continue;
    IntVector x(n);
    for (auto &v : x)
      v = 2 + it % 4;
    const IntVector b = A * x;
    SolveOptions opts;
    opts.mode = static_cast<SolveMode>(it % 3);
    StandardSolveResult r = solve_standard_with_slack(StandardSystem(A, b), opts);
    ASSERT_NE(r.status, SolveStatus::PipelineFailed);
    if (!r.verified)
      continue;
    ++verified;
    EXPECT_EQ(A * r.z, b);
    for (const auto &v : r.z)
      EXPECT_GE(v, 0);
  }
  EXPECT_GT(verified, 10);
}
