/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include "dfrob/linalg.hpp"

#include <string>

namespace dfrob {

enum class RoundingMethod { Exhaustive, Heuristic };

const char *to_string(RoundingMethod m);

struct RoundingOptions {
  /// Largest fractional support minimized exhaustively.
  std::size_t exhaustive_cap = 24;
  std::uint64_t seed = 0;
  std::size_t restarts = 10000;
};

struct RoundingResult {
  IntVector z;
  /// |M (x - z)|_inf, exact.
  Rational achieved;
  RoundingMethod method = RoundingMethod::Exhaustive;
  /// True when z is a global minimizer over floor(x) + {0,1}^support.
  bool certified = false;
  /// Coordinates where x is fractional.
  IndexSet support;
};

/// z = floor(x) + sigma with sigma in {0,1} on the fractional coordinates of
/// x, chosen to minimize |M (x - z)|_inf. Ties go to the lexicographically
/// smallest sigma. Requires x >= 0.
RoundingResult round_nonneg(const RatMatrix &M, const RatVector &x,
                            const RoundingOptions &opts = {});

/// min over s in {-1,1}^n of |M s|_inf. Throws TooLarge when M has more than
/// `cap` columns.
Rational exact_disc(const RatMatrix &M, std::size_t cap = 24);

enum class BoundForm { Spencer, DetlbLog, DetlbSqrtLog };

const char *to_string(BoundForm f);

/// Reporting-only summary of the discrepancy envelopes for M. The symbolic
/// forms carry an unknown absolute constant; `form_value` evaluates them
/// with that constant set to 1 and natural logarithms floored at log 2.
struct DiscBound {
  /// Delta_j(M) for j = 1..order (empty if enumeration was too large).
  RatVector minor_maxima;
  Detlb detlb;
  Rational delta1;
  BoundForm form = BoundForm::Spencer;
  double form_value = 0;
  /// max_i sum_j |M_ij|: a true upper bound on any {0,1} rounding error.
  Rational numeric_envelope;

  std::string describe() const;
};

DiscBound disc_bound(const RatMatrix &M, std::uint64_t minor_cap = kDefaultMinorCap);

} // namespace dfrob
