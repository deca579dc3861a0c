/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include "dfrob/systems.hpp"

#include <optional>

namespace dfrob {

struct CornerSolution {
  IntVector z;
  IntVector y; ///< b_B - A_B z, with 0 <= y and |y|_1 <= |det A_B| - 1
};

/// Integer point of the corner polyhedron {A_B z <= b_B}. With A_B = H Q
/// (Hermite form) and w = Q z, the triangular system H w + y = b_B is solved
/// row by row taking y_i = r_i mod H_ii. Throws Singular.
CornerSolution solve_corner(const IntMatrix &AB, const IntVector &bB);

struct GomoryResult {
  IntVector z;
  IntVector slack_B;
  IntVector slack_rest; ///< b_N - A_N z, in the order of base.nonbasic
  IndexSet base;
  Integer delta_B;
  Integer delta;
  /// b_N - A_N v_B >= (Delta - 1) 1 at the base vertex v_B.
  bool precondition_met = false;
  /// Smallest row index (in the full system) where the condition fails.
  std::optional<std::size_t> violated_row;
  /// min over N of b_N - A_N v_B; absent when N is empty.
  std::optional<Rational> vertex_slack;
  /// A z <= b checked on the full system.
  bool verified = false;
};

/// Corner solution on the base rows, checked against the whole system. The
/// point is returned even when the precondition fails; `verified` records
/// whether it is actually feasible.
GomoryResult solve_canonical_gomory(const CanonicalSystem &sys,
                                    const IndexSet &base_rows);

struct StandardGomoryResult {
  IntVector z;
  IndexSet base;
  /// A_B^{-1} b >= (Delta - 1) 1.
  bool precondition_met = false;
  std::optional<std::size_t> violated_row;
  bool verified = false;
};

/// Standard-form variant: A must have Delta_gcd = 1 and `base_cols` must
/// index k linearly independent columns. Runs the canonical construction on
/// the reduced system with the complementary base.
StandardGomoryResult solve_standard_gomory(const StandardSystem &sys,
                                           const IndexSet &base_cols);

} // namespace dfrob
