/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include "dfrob/basefind.hpp"
#include "dfrob/discrepancy.hpp"
#include "dfrob/gomory.hpp"
#include "dfrob/lp.hpp"
#include "dfrob/reductions.hpp"

#include <optional>
#include <string>

namespace dfrob {

enum class SolveMode { MaxdetGiven, Poly, ExpSweep };

const char *to_string(SolveMode m);
/// Accepts "maxdet", "poly", "exp". Throws Parse.
SolveMode parse_solve_mode(const std::string &s);

struct SolveOptions {
  SolveMode mode = SolveMode::MaxdetGiven;
  /// Base rows to use in MaxdetGiven mode instead of computing one.
  std::optional<IndexSet> base;
  RoundingOptions rounding;
  BaseSearchOptions search;
};

enum class SolveStatus {
  Verified,       ///< z satisfies the system
  NoSlackPoint,   ///< the slack point is below the required threshold
  PipelineFailed, ///< slack was sufficient but the point failed; a bug
  Infeasible      ///< certified: no integer solution exists
};

const char *to_string(SolveStatus s);

/// Audit trail of one pipeline run on a canonical system A x <= b.
struct FeasibilityCertificate {
  SolveMode mode = SolveMode::MaxdetGiven;
  IntVector z;
  BaseSearchReport base;
  SlackPoint slack_input;
  RoundingResult rounding;
  DiscBound bound;
  /// Delta(A), or the Hadamard bound when not certified.
  Integer delta;
  bool delta_certified = false;
  /// Delta - 1 + rounding.achieved.
  Rational threshold_t;
  /// Right-hand side after shifting the base rows by the rounding vector.
  IntVector b_hat;
  GomoryResult gomory;
  bool verified = false;
};

struct SolveResult {
  SolveStatus status = SolveStatus::PipelineFailed;
  std::optional<FeasibilityCertificate> certificate;
  /// Slack the pipeline needed and the best slack available. `required` is
  /// Delta - 1 when no rounding could be attempted.
  Rational required;
  Rational available;
  std::string message;
};

/// Finds a max-min-slack point, rounds its base slacks against
/// M = A_N A_B^{-1}, shifts b_B by the rounding and runs the corner
/// construction on the shifted system. Succeeds whenever the available slack
/// is at least Delta - 1 + achieved rounding error.
SolveResult solve_canonical_with_slack(const CanonicalSystem &sys,
                                       const SolveOptions &opts = {});

struct StandardSolveResult {
  SolveStatus status = SolveStatus::PipelineFailed;
  IntVector z;
  /// The Delta_gcd-normalized system actually solved.
  std::optional<StandardSystem> normalized;
  /// Canonical run on the reduced system; absent when n = k.
  std::optional<SolveResult> canonical;
  Rational required;
  Rational available;
  std::string message;
  bool verified = false;
};

/// Normalizes Delta_gcd, reduces to canonical form, solves there and maps the
/// point back with x = b_hat - A_hat t.
StandardSolveResult solve_standard_with_slack(const StandardSystem &sys,
                                              const SolveOptions &opts = {});

// ---------------------------------------------------------------------------
// Brute-force oracles
// ---------------------------------------------------------------------------

enum class LatticeVerdict { Feasible, Infeasible, Undecided };

struct LatticeSearch {
  LatticeVerdict verdict = LatticeVerdict::Undecided;
  std::optional<IntVector> witness;
  /// Why the answer is Infeasible, for reports.
  std::string reason;
  std::uint64_t visited = 0;
};

/// Decides whether A x <= b has an integer point by enumerating the integer
/// box given by LP bounds on each coordinate (the last coordinate is solved
/// as an interval). Undecided when some coordinate is unbounded and no
/// bounded coordinate already has an empty integer range. Throws
/// BudgetExceeded when the box holds more than `cap` points.
LatticeSearch find_integer_point(const CanonicalSystem &sys,
                                 std::uint64_t cap = 10000000);

/// Same decision for A x = b, x >= 0 through the canonical reduction.
/// Non-primitive matrices are normalized first.
LatticeSearch find_nonneg_solution(const StandardSystem &sys,
                                   std::uint64_t cap = 10000000);

struct OracleRow {
  IntVector b;
  /// max-min slack (canonical) or max min_j x_j (standard); absent when the
  /// LP is infeasible, +infinity is reported as `unbounded`.
  std::optional<Rational> slack;
  bool unbounded = false;
  bool feasible = false;
  std::optional<IntVector> witness;
};

struct OracleWitness {
  IntVector b;
  RatVector point;
  Rational slack;
  std::string proof;
};

struct OracleReport {
  IntMatrix A;
  IntVector box_lo;
  IntVector box_hi;
  std::vector<OracleRow> rows;
  /// Smallest integer t >= 0 such that, inside the box, slack >= t always
  /// came with an integer solution.
  Integer empirical_threshold;
  /// Infeasible right-hand sides whose slack reaches empirical_threshold - 1.
  std::vector<OracleWitness> witnesses;
};

/// Scans every b with box_lo <= b <= box_hi (componentwise). Throws
/// UnboundedPolytope when integer feasibility cannot be decided and
/// BudgetExceeded when the box holds more than `max_rhs` vectors.
OracleReport oracle_slackfrob_box(const IntMatrix &A, const IntVector &box_lo,
                                  const IntVector &box_hi,
                                  std::uint64_t max_rhs = 100000);

/// Standard-form analogue. A must have Delta_gcd = 1 (NotPrimitive
/// otherwise).
OracleReport oracle_diagfrob_box(const IntMatrix &A, const IntVector &box_lo,
                                 const IntVector &box_hi,
                                 std::uint64_t max_rhs = 100000);

/// diag(1, ..., 1, p) x <= (0, ..., 0, p - 1) stacked over -p x_n <= -1.
CanonicalSystem gen_tight_instance(long p, std::size_t n);

} // namespace dfrob
