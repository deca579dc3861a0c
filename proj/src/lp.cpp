/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/lp.hpp"

#include <algorithm>

namespace dfrob {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

/// maximize c.u  s.t.  G u <= h, u >= 0.
class Tableau {
public:
  Tableau(const RatMatrix &G, const RatVector &h)
      : m_(G.rows()), structural_(G.cols()) {
    std::size_t artificial = 0;
    for (const auto &v : h)
      if (v < 0)
        ++artificial;
    width_ = structural_ + m_ + artificial;
    first_artificial_ = structural_ + m_;
    T_ = RatMatrix(m_, width_ + 1);
    basis_.resize(m_);
    std::size_t a = first_artificial_;
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = h[i] < 0;
      const Rational sgn = flip ? -1 : 1;
      for (std::size_t j = 0; j < structural_; ++j)
        T_(i, j) = sgn * G(i, j);
      T_(i, structural_ + i) = sgn;
      T_(i, width_) = sgn * h[i];
      if (flip) {
        T_(i, a) = 1;
        basis_[i] = a++;
      } else {
        basis_[i] = structural_ + i;
      }
    }
    allowed_.assign(width_, true);
  }

  LpStatus phase_one() {
    if (first_artificial_ == width_)
      return LpStatus::Optimal;
    RatVector w(width_);
    for (std::size_t j = first_artificial_; j < width_; ++j)
      w[j] = -1;
    run(w);
    if (objective(w) < 0)
      return LpStatus::Infeasible;
    // Drive zero-level artificials out of the basis.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_artificial_)
        continue;
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_artificial_ && col == kNone; ++j)
        if (T_(i, j) != 0)
          col = j;
      if (col != kNone)
        pivot(i, col);
      else
        redundant_.push_back(i);
    }
    for (std::size_t j = first_artificial_; j < width_; ++j)
      allowed_[j] = false;
    return LpStatus::Optimal;
  }

  /// Returns Optimal or Unbounded; `entering_` holds the unbounded column.
  LpStatus run(const RatVector &w) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!allowed_[j] || is_basic(j))
          continue;
        if (reduced_cost(w, j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone)
        return LpStatus::Optimal;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (is_redundant(i) || T_(i, enter) <= 0)
          continue;
        Rational ratio = T_(i, width_) / T_(i, enter);
        if (leave == kNone || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) {
        entering_ = enter;
        return LpStatus::Unbounded;
      }
      pivot(leave, enter);
    }
  }

  RatVector point() const {
    RatVector u(structural_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < structural_ && !is_redundant(i))
        u[basis_[i]] = T_(i, width_);
    return u;
  }

  RatVector ray() const {
    RatVector d(structural_);
    if (entering_ < structural_)
      d[entering_] = 1;
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < structural_ && !is_redundant(i))
        d[basis_[i]] = -T_(i, entering_);
    return d;
  }

  Rational objective(const RatVector &w) const {
    Rational v = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (!is_redundant(i))
        v += w[basis_[i]] * T_(i, width_);
    return v;
  }

private:
  bool is_basic(std::size_t j) const {
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] == j && !is_redundant(i))
        return true;
    return false;
  }

  bool is_redundant(std::size_t i) const {
    return std::find(redundant_.begin(), redundant_.end(), i) !=
           redundant_.end();
  }

  Rational reduced_cost(const RatVector &w, std::size_t j) const {
    Rational r = w[j];
    for (std::size_t i = 0; i < m_; ++i)
      if (!is_redundant(i) && T_(i, j) != 0)
        r -= w[basis_[i]] * T_(i, j);
    return r;
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / T_(r, c);
    for (std::size_t j = 0; j <= width_; ++j)
      T_(r, j) *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || T_(i, c) == 0)
        continue;
      const Rational f = T_(i, c);
      for (std::size_t j = 0; j <= width_; ++j)
        if (T_(r, j) != 0)
          T_(i, j) -= f * T_(r, j);
    }
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t structural_;
  std::size_t width_ = 0;
  std::size_t first_artificial_ = 0;
  RatMatrix T_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  std::vector<std::size_t> redundant_;
  std::size_t entering_ = kNone;
};

IndexSet argmin_rows(const RatVector &s, const Rational &v) {
  IndexSet out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == v)
      out.push_back(i);
  return out;
}

} // namespace

LpSolution maximize(const RatMatrix &A, const RatVector &b, const RatVector &c) {
  if (A.rows() != b.size() || A.cols() != c.size())
    throw Error(ErrorCode::Dimension, "lp: shape mismatch");
  const std::size_t n = A.cols();
  // Free variables are split as x = u+ - u-.
  RatMatrix G(A.rows(), 2 * n);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      G(i, j) = A(i, j);
      G(i, n + j) = -A(i, j);
    }
  RatVector w(2 * n + A.rows() + A.rows());
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = c[j];
    w[n + j] = -c[j];
  }
  Tableau t(G, b);
  LpSolution sol;
  if (t.phase_one() == LpStatus::Infeasible) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }
  sol.status = t.run(w);
  const RatVector u = t.point();
  sol.x.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    sol.x[j] = u[j] - u[n + j];
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j)
    sol.value += c[j] * sol.x[j];
  if (sol.status == LpStatus::Unbounded) {
    const RatVector d = t.ray();
    sol.ray.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      sol.ray[j] = d[j] - d[n + j];
  }
  return sol;
}

SlackPoint make_slack_point(const CanonicalSystem &sys, RatVector x) {
  SlackPoint p;
  const RatVector s = sys.slacks(x);
  p.x = std::move(x);
  p.min_slack = *std::min_element(s.begin(), s.end());
  p.tight_rows = argmin_rows(s, p.min_slack);
  return p;
}

namespace {

RatMatrix slack_lp_matrix(const CanonicalSystem &sys, bool capped) {
  const IntMatrix &A = sys.matrix();
  const std::size_t n = A.cols();
  RatMatrix L(A.rows() + (capped ? 1 : 0), n + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j)
      L(i, j) = A(i, j);
    L(i, n) = 1;
  }
  if (capped)
    L(A.rows(), n) = 1;
  return L;
}

RatVector slack_objective(std::size_t n) {
  RatVector c(n + 1);
  c[n] = 1;
  return c;
}

} // namespace

MaxMinSlack max_min_slack(const CanonicalSystem &sys) {
  const std::size_t n = sys.dimension();
  LpSolution sol = maximize(slack_lp_matrix(sys, false),
                            to_rational(sys.rhs()), slack_objective(n));
  // The auxiliary LP is always feasible (s can be made very negative).
  RatVector x(sol.x.begin(), sol.x.begin() + static_cast<long>(n));
  if (sol.status == LpStatus::Unbounded) {
    UnboundedSlack u;
    u.start = make_slack_point(sys, std::move(x));
    u.ray.direction.assign(sol.ray.begin(), sol.ray.begin() + static_cast<long>(n));
    u.ray.rate = sol.ray[n];
    return u;
  }
  return make_slack_point(sys, std::move(x));
}

SlackPoint slack_point_at_least(const CanonicalSystem &sys, const Rational &t) {
  MaxMinSlack r = max_min_slack(sys);
  if (auto *p = std::get_if<SlackPoint>(&r))
    return *p;
  const auto &u = std::get<UnboundedSlack>(r);
  Rational step = 0;
  if (u.start.min_slack < t)
    step = (t - u.start.min_slack) / u.ray.rate;
  RatVector x = u.start.x;
  for (std::size_t j = 0; j < x.size(); ++j)
    x[j] += step * u.ray.direction[j];
  return make_slack_point(sys, std::move(x));
}

BaseSelection feasible_base(const CanonicalSystem &sys, const RatVector &x0) {
  const IntMatrix &A = sys.matrix();
  const std::size_t n = A.cols();
  const RatMatrix Ar = to_rational(A);
  if (rank(Ar) < n)
    throw Error(ErrorCode::NoBase, "rank(A) < n");
  RatVector x = x0;
  RatVector s = sys.slacks(x);
  for (const auto &v : s)
    if (v < 0)
      throw Error(ErrorCode::Precondition, "point violates A x <= b");

  while (true) {
    IndexSet tight;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] == 0)
        tight.push_back(i);
    const RatMatrix AT = Ar.select_rows(tight);
    const std::size_t r = tight.empty() ? 0 : rank(AT);
    if (r == n)
      break;
    // Null space of the tight rows; project the first row that extends
    // their span onto it to get a direction that increases that row.
    RatMatrix N = tight.empty() ? RatMatrix::identity(n) : null_space(AT);
    RatMatrix NtN = N.transpose() * N;
    RatMatrix proj = N * inverse(NtN) * N.transpose();
    RatVector d;
    for (std::size_t i = 0; i < A.rows() && d.empty(); ++i) {
      if (s[i] == 0)
        continue;
      RatVector ai(Ar.row(i).begin(), Ar.row(i).end());
      RatVector cand = proj * ai;
      bool nonzero = std::any_of(cand.begin(), cand.end(),
                                 [](const Rational &v) { return v != 0; });
      if (nonzero)
        d = std::move(cand);
    }
    Rational step;
    bool found = false;
    for (std::size_t j = 0; j < A.rows(); ++j) {
      Rational ad = 0;
      for (std::size_t c = 0; c < n; ++c)
        ad += Ar(j, c) * d[c];
      if (ad <= 0)
        continue;
      Rational ratio = s[j] / ad;
      if (!found || ratio < step) {
        step = ratio;
        found = true;
      }
    }
    for (std::size_t c = 0; c < n; ++c)
      x[c] += step * d[c];
    s = sys.slacks(x);
  }

  IndexSet tight;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == 0)
      tight.push_back(i);
  IndexSet pick = independent_rows(Ar.select_rows(tight));
  IndexSet rows;
  for (std::size_t p : pick)
    rows.push_back(tight[p]);
  return make_row_base(A, rows);
}

RatVector base_vertex(const CanonicalSystem &sys, const BaseSelection &base) {
  const IntMatrix AB = sys.matrix().select_rows(base.indices);
  RatVector bB;
  for (std::size_t i : base.indices)
    bB.emplace_back(sys.rhs()[i]);
  return solve(to_rational(AB), bB);
}

} // namespace dfrob
