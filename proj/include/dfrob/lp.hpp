/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include "dfrob/systems.hpp"

#include <variant>

namespace dfrob {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  /// Optimal point, or the last basic feasible point when unbounded.
  RatVector x;
  Rational value;
  /// Improving recession direction when unbounded.
  RatVector ray;
};

/// maximize c.x subject to A x <= b with x free. Exact two-phase tableau
/// simplex with Bland's rule; deterministic.
LpSolution maximize(const RatMatrix &A, const RatVector &b, const RatVector &c);

struct SlackPoint {
  RatVector x;
  Rational min_slack;
  IndexSet tight_rows; ///< rows attaining min_slack
};

SlackPoint make_slack_point(const CanonicalSystem &sys, RatVector x);

/// A d + rate * 1 <= 0 with rate > 0: walking along d raises every slack.
struct SlackRay {
  RatVector direction;
  Rational rate;
};

struct UnboundedSlack {
  SlackPoint start;
  SlackRay ray;
};

using MaxMinSlack = std::variant<SlackPoint, UnboundedSlack>;

/// Point maximizing min_i (b_i - A_i x), solved as max s s.t. A x + s 1 <= b.
/// A negative optimum means the polyhedron is empty.
MaxMinSlack max_min_slack(const CanonicalSystem &sys);

/// A point whose minimum slack is at least t when one exists, otherwise the
/// max-min-slack point. Unbounded instances are resolved by walking the ray.
SlackPoint slack_point_at_least(const CanonicalSystem &sys, const Rational &t);

/// Moves a feasible x to a vertex without leaving the polyhedron (each step
/// makes the lowest-index independent row tight) and returns the
/// lexicographically first n independent tight rows as the base.
/// Throws Precondition if x is infeasible, NoBase if rank(A) < n.
BaseSelection feasible_base(const CanonicalSystem &sys, const RatVector &x);

/// Vertex A_B^{-1} b_B of a row base.
RatVector base_vertex(const CanonicalSystem &sys, const BaseSelection &base);

} // namespace dfrob
