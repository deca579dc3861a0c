/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/frobenius.hpp"

#include <algorithm>
#include <sstream>

namespace dfrob {

const char *to_string(SolveMode m) {
  switch (m) {
  case SolveMode::MaxdetGiven:
    return "maxdet";
  case SolveMode::Poly:
    return "poly";
  case SolveMode::ExpSweep:
    return "exp";
  }
  return "?";
}

SolveMode parse_solve_mode(const std::string &s) {
  if (s == "maxdet" || s == "maxdet-given")
    return SolveMode::MaxdetGiven;
  if (s == "poly")
    return SolveMode::Poly;
  if (s == "exp" || s == "exp-sweep")
    return SolveMode::ExpSweep;
  throw Error(ErrorCode::Parse, "unknown mode '" + s + "'");
}

const char *to_string(SolveStatus s) {
  switch (s) {
  case SolveStatus::Verified:
    return "verified";
  case SolveStatus::NoSlackPoint:
    return "no-slack-point";
  case SolveStatus::PipelineFailed:
    return "pipeline-failed";
  case SolveStatus::Infeasible:
    return "infeasible";
  }
  return "?";
}

namespace {

IndexSet complement(std::size_t n, const IndexSet &s) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end())
      out.push_back(i);
  return out;
}

BaseSearchReport choose_base(const CanonicalSystem &sys, const SolveOptions &opts) {
  const IntMatrix &A = sys.matrix();
  switch (opts.mode) {
  case SolveMode::MaxdetGiven: {
    if (!opts.base)
      return maxdet_base(A, BaseOrientation::Rows, opts.search);
    BaseSearchReport rep;
    rep.base = make_row_base(A, *opts.base);
    rep.iterations = 0;
    const bool exact = sys.delta_certified() && rep.base.det_abs == sys.delta();
    rep.guarantee = exact ? BaseGuarantee::MaxdetExact : BaseGuarantee::MaxdetGreedy;
    rep.ratio_bound = fraction(sys.delta(), rep.base.det_abs);
    return rep;
  }
  case SolveMode::Poly:
    return poly_subdet_search(A, BaseOrientation::Rows, opts.search);
  case SolveMode::ExpSweep:
    return exp_subdet_search_dual(A, opts.search);
  }
  throw Error(ErrorCode::Precondition, "unknown solve mode");
}

std::string rational_text(const Rational &q) { return q.get_str(); }

} // namespace

SolveResult solve_canonical_with_slack(const CanonicalSystem &sys,
                                       const SolveOptions &opts) {
  SolveResult res;
  FeasibilityCertificate cert;
  cert.mode = opts.mode;
  cert.delta = sys.delta();
  cert.delta_certified = sys.delta_certified();
  cert.base = choose_base(sys, opts);
  const BaseSelection &base = cert.base.base;
  cert.bound = disc_bound(base.M);

  // Any rounding error stays below the row l1 norm of M, so walking an
  // unbounded slack ray up to Delta - 1 + that envelope always suffices.
  const Rational want = Rational(cert.delta - 1) + cert.bound.numeric_envelope;
  cert.slack_input = slack_point_at_least(sys, want);
  res.available = cert.slack_input.min_slack;

  if (res.available < 0) {
    res.status = SolveStatus::NoSlackPoint;
    res.required = cert.delta - 1;
    res.message = "the polyhedron is empty: best slack " +
                  rational_text(res.available) + " is negative";
    res.certificate = std::move(cert);
    return res;
  }

  const RatVector slacks = sys.slacks(cert.slack_input.x);
  RatVector yB;
  for (std::size_t i : base.indices)
    yB.push_back(slacks[i]);
  cert.rounding = round_nonneg(base.M, yB, opts.rounding);
  cert.threshold_t = Rational(cert.delta - 1) + cert.rounding.achieved;
  res.required = cert.threshold_t;

  cert.b_hat = sys.rhs();
  for (std::size_t t = 0; t < base.indices.size(); ++t)
    cert.b_hat[base.indices[t]] -= cert.rounding.z[t];
  cert.gomory = solve_canonical_gomory(sys.with_rhs(cert.b_hat), base.indices);
  cert.z = cert.gomory.z;
  cert.verified = sys.contains(cert.z);

  if (cert.verified) {
    res.status = SolveStatus::Verified;
    res.message = "integer point found";
  } else if (res.available < res.required) {
    res.status = SolveStatus::NoSlackPoint;
    res.message = "available slack " + rational_text(res.available) +
                  " is below the required " + rational_text(res.required);
  } else {
    res.status = SolveStatus::PipelineFailed;
    res.message = "slack condition held but the constructed point is infeasible";
  }
  res.certificate = std::move(cert);
  return res;
}

StandardSolveResult solve_standard_with_slack(const StandardSystem &sys,
                                              const SolveOptions &opts) {
  StandardSolveResult out;
  out.normalized = normalize_gcd(sys);
  if (!out.normalized) {
    out.status = SolveStatus::Infeasible;
    out.message = "b is not in the lattice spanned by the columns of A";
    return out;
  }
  const CanonicalReduction red = standard_to_canonical(*out.normalized);
  if (!red.system) {
    out.z = red.offset;
    out.available = *std::min_element(red.offset.begin(), red.offset.end());
    out.verified = sys.contains(out.z);
    out.status = out.verified ? SolveStatus::Verified : SolveStatus::Infeasible;
    out.message = out.verified ? "unique solution is nonnegative"
                               : "unique solution has a negative coordinate";
    return out;
  }
  SolveOptions copt = opts;
  if (opts.base)
    copt.base = complement(sys.cols(), *opts.base);
  out.canonical = solve_canonical_with_slack(*red.system, copt);
  out.status = out.canonical->status;
  out.required = out.canonical->required;
  out.available = out.canonical->available;
  out.message = out.canonical->message;
  if (out.canonical->certificate && !out.canonical->certificate->z.empty()) {
    out.z = red.to_standard(out.canonical->certificate->z);
    out.verified = sys.contains(out.z);
  }
  if (out.status == SolveStatus::Verified && !out.verified) {
    out.status = SolveStatus::PipelineFailed;
    out.message = "mapped point fails the standard system";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

namespace {

struct CoordBounds {
  std::vector<std::optional<Integer>> lo, hi;
  bool lp_empty = false;
};

CoordBounds lp_bounds(const CanonicalSystem &sys) {
  const RatMatrix A = to_rational(sys.matrix());
  const RatVector b = to_rational(sys.rhs());
  const std::size_t n = A.cols();
  CoordBounds cb;
  cb.lo.resize(n);
  cb.hi.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector c(n);
    c[j] = 1;
    LpSolution up = maximize(A, b, c);
    if (up.status == LpStatus::Infeasible) {
      cb.lp_empty = true;
      return cb;
    }
    if (up.status == LpStatus::Optimal)
      cb.hi[j] = floor(up.value);
    c[j] = -1;
    LpSolution down = maximize(A, b, c);
    if (down.status == LpStatus::Optimal)
      cb.lo[j] = ceil(-down.value);
  }
  return cb;
}

/// Rounds the deepest available slack point to the nearest integer vector.
/// Feasible whenever that slack reaches max_i |A_i|_1 / 2, since rounding
/// moves each row by at most that much; otherwise the check may fail.
std::optional<IntVector> round_deep_point(const CanonicalSystem &sys) {
  Integer widest = 0;
  const IntMatrix &A = sys.matrix();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < A.cols(); ++j)
      row += abs(A(i, j));
    widest = std::max(widest, row);
  }
  SlackPoint p = slack_point_at_least(sys, Rational(widest));
  IntVector z(p.x.size());
  for (std::size_t j = 0; j < z.size(); ++j)
    z[j] = floor(p.x[j] + fraction(1, 2));
  if (!sys.contains(z))
    return std::nullopt;
  return z;
}

std::string empty_range_reason(const CoordBounds &cb) {
  for (std::size_t j = 0; j < cb.lo.size(); ++j)
    if (cb.lo[j] && cb.hi[j] && *cb.lo[j] > *cb.hi[j]) {
      std::ostringstream os;
      os << "x" << j << " ranges over reals in (" << *cb.hi[j] << ", "
         << *cb.lo[j] << ") with no integer";
      return os.str();
    }
  return {};
}

} // namespace

LatticeSearch find_integer_point(const CanonicalSystem &sys, std::uint64_t cap) {
  LatticeSearch out;
  const CoordBounds cb = lp_bounds(sys);
  if (cb.lp_empty) {
    out.verdict = LatticeVerdict::Infeasible;
    out.reason = "linear relaxation is empty";
    return out;
  }
  if (auto why = empty_range_reason(cb); !why.empty()) {
    out.verdict = LatticeVerdict::Infeasible;
    out.reason = why;
    return out;
  }
  const IntMatrix &A = sys.matrix();
  const IntVector &b = sys.rhs();
  const std::size_t n = A.cols();

  // Enumerate every coordinate but one; the free one is solved as an
  // interval. Prefer an unbounded coordinate as the free one.
  std::size_t free_coord = n - 1;
  std::size_t unbounded = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (!cb.lo[j] || !cb.hi[j]) {
      ++unbounded;
      free_coord = j;
    }
  if (unbounded > 1) {
    if (auto z = round_deep_point(sys)) {
      out.verdict = LatticeVerdict::Feasible;
      out.witness = std::move(z);
      return out;
    }
    out.verdict = LatticeVerdict::Undecided;
    out.reason = "more than one coordinate is unbounded";
    return out;
  }

  IndexSet order;
  Integer volume = 1;
  for (std::size_t j = 0; j < n; ++j)
    if (j != free_coord) {
      order.push_back(j);
      volume *= *cb.hi[j] - *cb.lo[j] + 1;
    }
  if (volume > Integer(static_cast<unsigned long>(cap)))
    throw Error(ErrorCode::BudgetExceeded,
                "lattice box holds " + volume.get_str() + " points");

  IntVector x(n);
  for (std::size_t j : order)
    x[j] = *cb.lo[j];
  while (true) {
    ++out.visited;
    std::optional<Integer> lo = cb.lo[free_coord], hi = cb.hi[free_coord];
    bool ok = true;
    for (std::size_t i = 0; i < A.rows() && ok; ++i) {
      Integer r = b[i];
      for (std::size_t j : order)
        r -= A(i, j) * x[j];
      const Integer &a = A(i, free_coord);
      if (a == 0) {
        ok = r >= 0;
      } else if (a > 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t());
        if (!hi || q < *hi)
          hi = q;
      } else {
        Integer q;
        mpz_cdiv_q(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t());
        if (!lo || q > *lo)
          lo = q;
      }
    }
    if (ok && (!lo || !hi || *lo <= *hi)) {
      x[free_coord] = lo ? *lo : (hi ? *hi : Integer(0));
      out.verdict = LatticeVerdict::Feasible;
      out.witness = x;
      return out;
    }
    std::size_t t = 0;
    while (t < order.size()) {
      const std::size_t j = order[t];
      if (x[j] < *cb.hi[j]) {
        x[j] += 1;
        break;
      }
      x[j] = *cb.lo[j];
      ++t;
    }
    if (t == order.size())
      break;
  }
  out.verdict = LatticeVerdict::Infeasible;
  out.reason = "exhausted " + std::to_string(out.visited) + " lattice lines";
  return out;
}

LatticeSearch find_nonneg_solution(const StandardSystem &sys, std::uint64_t cap) {
  LatticeSearch out;
  auto norm = normalize_gcd(sys);
  if (!norm) {
    out.verdict = LatticeVerdict::Infeasible;
    out.reason = "b is outside the column lattice";
    return out;
  }
  const CanonicalReduction red = standard_to_canonical(*norm);
  if (!red.system) {
    const bool ok = std::all_of(red.offset.begin(), red.offset.end(),
                                [](const Integer &v) { return v >= 0; });
    out.verdict = ok ? LatticeVerdict::Feasible : LatticeVerdict::Infeasible;
    if (ok)
      out.witness = red.offset;
    else
      out.reason = "unique solution has a negative coordinate";
    return out;
  }
  out = find_integer_point(*red.system, cap);
  if (out.witness)
    out.witness = red.to_standard(*out.witness);
  return out;
}

namespace {

/// Plain re-check of an infeasibility verdict: the empty-range argument, or
/// a full scan of the bounded LP box.
bool confirm_infeasible(const CanonicalSystem &sys, std::uint64_t cap) {
  const CoordBounds cb = lp_bounds(sys);
  if (cb.lp_empty || !empty_range_reason(cb).empty())
    return true;
  const std::size_t n = sys.dimension();
  Integer volume = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (!cb.lo[j] || !cb.hi[j])
      return false;
    volume *= *cb.hi[j] - *cb.lo[j] + 1;
  }
  if (volume > Integer(static_cast<unsigned long>(cap)))
    throw Error(ErrorCode::BudgetExceeded, "confirmation box too large");
  IntVector x(n);
  for (std::size_t j = 0; j < n; ++j)
    x[j] = *cb.lo[j];
  while (true) {
    if (sys.contains(x))
      return false;
    std::size_t j = 0;
    while (j < n) {
      if (x[j] < *cb.hi[j]) {
        x[j] += 1;
        break;
      }
      x[j] = *cb.lo[j];
      ++j;
    }
    if (j == n)
      return true;
  }
}

template <class F>
void for_each_rhs(const IntVector &lo, const IntVector &hi, std::uint64_t max_rhs,
                  F &&f) {
  if (lo.size() != hi.size())
    throw Error(ErrorCode::Dimension, "box bounds differ in length");
  Integer volume = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i])
      throw Error(ErrorCode::Precondition, "empty box");
    volume *= hi[i] - lo[i] + 1;
  }
  if (volume > Integer(static_cast<unsigned long>(max_rhs)))
    throw Error(ErrorCode::BudgetExceeded,
                "box holds " + volume.get_str() + " right-hand sides");
  IntVector b = lo;
  while (true) {
    f(b);
    std::size_t i = 0;
    while (i < b.size()) {
      if (b[i] < hi[i]) {
        b[i] += 1;
        break;
      }
      b[i] = lo[i];
      ++i;
    }
    if (i == b.size())
      return;
  }
}

void finish_report(OracleReport &rep) {
  rep.empirical_threshold = 0;
  for (const auto &row : rep.rows)
    if (!row.feasible && row.slack && *row.slack >= 0)
      rep.empirical_threshold =
          std::max(rep.empirical_threshold, Integer(floor(*row.slack) + 1));
}

} // namespace

OracleReport oracle_slackfrob_box(const IntMatrix &A, const IntVector &box_lo,
                                  const IntVector &box_hi,
                                  std::uint64_t max_rhs) {
  if (box_lo.size() != A.rows())
    throw Error(ErrorCode::Dimension, "box must have one range per row");
  OracleReport rep;
  rep.A = A;
  rep.box_lo = box_lo;
  rep.box_hi = box_hi;
  const CanonicalSystem proto(A, box_lo);
  std::vector<SlackPoint> points;
  std::vector<std::string> reasons;
  for_each_rhs(box_lo, box_hi, max_rhs, [&](const IntVector &b) {
    const CanonicalSystem sys = proto.with_rhs(b);
    OracleRow row;
    row.b = b;
    MaxMinSlack mm = max_min_slack(sys);
    SlackPoint point;
    if (auto *p = std::get_if<SlackPoint>(&mm)) {
      row.slack = p->min_slack;
      point = *p;
    } else {
      row.unbounded = true;
      point = std::get<UnboundedSlack>(mm).start;
    }
    LatticeSearch ls = find_integer_point(sys);
    if (ls.verdict == LatticeVerdict::Undecided)
      throw Error(ErrorCode::UnboundedPolytope,
                  "cannot decide integer feasibility: " + ls.reason);
    row.feasible = ls.verdict == LatticeVerdict::Feasible;
    row.witness = ls.witness;
    rep.rows.push_back(std::move(row));
    points.push_back(std::move(point));
    reasons.push_back(ls.reason);
  });
  finish_report(rep);
  for (std::size_t r = 0; r < rep.rows.size(); ++r) {
    const auto &row = rep.rows[r];
    if (row.feasible || !row.slack || *row.slack < 0 ||
        floor(*row.slack) + 1 != rep.empirical_threshold)
      continue;
    if (!confirm_infeasible(proto.with_rhs(row.b), 10000000))
      throw Error(ErrorCode::Precondition, "witness failed re-verification");
    rep.witnesses.push_back({row.b, points[r].x, *row.slack, reasons[r]});
  }
  return rep;
}

OracleReport oracle_diagfrob_box(const IntMatrix &A, const IntVector &box_lo,
                                 const IntVector &box_hi,
                                 std::uint64_t max_rhs) {
  if (box_lo.size() != A.rows())
    throw Error(ErrorCode::Dimension, "box must have one range per row");
  const StandardSystem proto(A, box_lo);
  if (normalize_gcd(proto)->matrix() != A)
    throw Error(ErrorCode::NotPrimitive, "normalize Delta_gcd to 1 first");
  OracleReport rep;
  rep.A = A;
  rep.box_lo = box_lo;
  rep.box_hi = box_hi;
  const std::size_t k = A.rows(), n = A.cols();
  // max s subject to A x = b, x_j >= s, over (x, s).
  RatMatrix L(2 * k + n, n + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      L(i, j) = A(i, j);
      L(k + i, j) = -A(i, j);
    }
  for (std::size_t j = 0; j < n; ++j) {
    L(2 * k + j, j) = -1;
    L(2 * k + j, n) = 1;
  }
  RatVector c(n + 1);
  c[n] = 1;
  std::vector<RatVector> points;
  std::vector<std::string> reasons;
  for_each_rhs(box_lo, box_hi, max_rhs, [&](const IntVector &b) {
    const StandardSystem sys = proto.with_rhs(b);
    OracleRow row;
    row.b = b;
    RatVector rhs(2 * k + n);
    for (std::size_t i = 0; i < k; ++i) {
      rhs[i] = b[i];
      rhs[k + i] = -Rational(b[i]);
    }
    LpSolution sol = maximize(L, rhs, c);
    RatVector point;
    if (sol.status == LpStatus::Optimal) {
      row.slack = sol.value;
      point.assign(sol.x.begin(), sol.x.begin() + static_cast<long>(n));
    } else if (sol.status == LpStatus::Unbounded) {
      row.unbounded = true;
    }
    LatticeSearch ls = find_nonneg_solution(sys);
    if (ls.verdict == LatticeVerdict::Undecided)
      throw Error(ErrorCode::UnboundedPolytope,
                  "cannot decide integer feasibility: " + ls.reason);
    row.feasible = ls.verdict == LatticeVerdict::Feasible;
    row.witness = ls.witness;
    rep.rows.push_back(std::move(row));
    points.push_back(std::move(point));
    reasons.push_back(ls.reason);
  });
  finish_report(rep);
  const CanonicalReduction red = standard_to_canonical(proto);
  for (std::size_t r = 0; r < rep.rows.size(); ++r) {
    const auto &row = rep.rows[r];
    if (row.feasible || !row.slack || *row.slack < 0 ||
        floor(*row.slack) + 1 != rep.empirical_threshold)
      continue;
    bool confirmed;
    if (red.system) {
      const CanonicalReduction rb = standard_to_canonical(proto.with_rhs(row.b));
      confirmed = confirm_infeasible(*rb.system, 10000000);
    } else {
      confirmed = !proto.with_rhs(row.b).contains(
          standard_to_canonical(proto.with_rhs(row.b)).offset);
    }
    if (!confirmed)
      throw Error(ErrorCode::Precondition, "witness failed re-verification");
    rep.witnesses.push_back({row.b, points[r], *row.slack, reasons[r]});
  }
  return rep;
}

CanonicalSystem gen_tight_instance(long p, std::size_t n) {
  if (p < 2 || n < 1)
    throw Error(ErrorCode::Precondition, "tight instance needs p >= 2, n >= 1");
  IntMatrix A(n + 1, n);
  IntVector b(n + 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    A(i, i) = 1;
  A(n - 1, n - 1) = p;
  b[n - 1] = p - 1;
  A(n, n - 1) = -p;
  b[n] = -1;
  return CanonicalSystem(std::move(A), std::move(b));
}

} // namespace dfrob
