/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/gomory.hpp"

#include "dfrob/reductions.hpp"

#include <algorithm>

namespace dfrob {

CornerSolution solve_corner(const IntMatrix &AB, const IntVector &bB) {
  const std::size_t n = AB.rows();
  if (AB.cols() != n || bB.size() != n)
    throw Error(ErrorCode::Dimension, "solve_corner needs a square base");
  HermiteForm h;
  try {
    h = hnf(AB);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::RankDeficient)
      throw Error(ErrorCode::Singular, "base matrix is singular");
    throw;
  }
  IntVector w(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer r = bB[i];
    for (std::size_t j = 0; j < i; ++j)
      r -= h.H(i, j) * w[j];
    mpz_fdiv_qr(w[i].get_mpz_t(), y[i].get_mpz_t(), r.get_mpz_t(),
                h.H(i, i).get_mpz_t());
  }
  return {h.Q_inv * w, y};
}

GomoryResult solve_canonical_gomory(const CanonicalSystem &sys,
                                    const IndexSet &base_rows) {
  const IntMatrix &A = sys.matrix();
  const BaseSelection base = make_row_base(A, base_rows);
  GomoryResult r;
  r.base = base.indices;
  r.delta_B = base.det_abs;
  r.delta = sys.delta();

  IntVector bB;
  for (std::size_t i : base.indices)
    bB.push_back(sys.rhs()[i]);
  const RatVector v = solve(to_rational(A.select_rows(base.indices)),
                            to_rational(bB));
  const RatVector vs = sys.slacks(v);
  const Rational need = r.delta - 1;
  r.precondition_met = true;
  for (std::size_t i : base.nonbasic) {
    if (!r.vertex_slack || vs[i] < *r.vertex_slack)
      r.vertex_slack = vs[i];
    if (vs[i] < need && r.precondition_met) {
      r.precondition_met = false;
      r.violated_row = i;
    }
  }

  CornerSolution c = solve_corner(A.select_rows(base.indices), bB);
  r.z = std::move(c.z);
  r.slack_B = std::move(c.y);
  const IntVector s = sys.slacks(r.z);
  for (std::size_t i : base.nonbasic)
    r.slack_rest.push_back(s[i]);
  r.verified = std::all_of(s.begin(), s.end(),
                           [](const Integer &v) { return v >= 0; });
  return r;
}

StandardGomoryResult solve_standard_gomory(const StandardSystem &sys,
                                           const IndexSet &base_cols) {
  const BaseSelection base = make_column_base(sys.matrix(), base_cols);
  StandardGomoryResult r;
  r.base = base.indices;
  const Integer delta = sys.delta();
  const RatVector vB = solve(to_rational(sys.matrix().select_cols(base.indices)),
                             to_rational(sys.rhs()));
  r.precondition_met = true;
  for (std::size_t i = 0; i < vB.size(); ++i)
    if (vB[i] < Rational(delta - 1)) {
      r.precondition_met = false;
      r.violated_row = base.indices[i];
      break;
    }

  const CanonicalReduction red = standard_to_canonical(sys);
  if (!red.system) {
    r.z = red.offset;
  } else {
    // Basic columns become the nonbasic rows of the canonical system: the
    // canonical base is the complement of the standard base.
    GomoryResult g = solve_canonical_gomory(*red.system, base.nonbasic);
    r.z = red.to_standard(g.z);
  }
  r.verified = sys.contains(r.z);
  return r;
}

} // namespace dfrob
