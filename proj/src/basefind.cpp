/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/basefind.hpp"

#include <algorithm>

namespace dfrob {

const Rational &e_surrogate() {
  static const Rational c = fraction(Integer("2718281828459045"),
                                     Integer("1000000000000000"));
  return c;
}

const char *to_string(BaseGuarantee g) {
  switch (g) {
  case BaseGuarantee::Delta1LeC:
    return "delta1_le_c";
  case BaseGuarantee::DeltaiLeExp:
    return "deltai_le_exp";
  case BaseGuarantee::MaxdetExact:
    return "maxdet_exact";
  case BaseGuarantee::MaxdetGreedy:
    return "maxdet_greedy";
  }
  return "?";
}

namespace {

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= static_cast<unsigned long>(i);
  return f;
}

Rational power(const Rational &q, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i)
    r *= q;
  return r;
}

/// Squared volume of the selected columns.
Rational gram(const RatMatrix &M, const IndexSet &cols) {
  const RatMatrix S = M.select_cols(cols);
  if (S.rows() == S.cols()) {
    Rational d = det(S);
    return d * d;
  }
  return det(S.transpose() * S);
}

IndexSet complement(std::size_t n, const IndexSet &s) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end())
      out.push_back(i);
  return out;
}

MaxdetChoice greedy_maxdet(const RatMatrix &M, std::size_t order,
                           const BaseSearchOptions &opts) {
  // Greedy volume: repeatedly take the column with the largest residual
  // after projecting out the chosen ones (exact Gram-Schmidt).
  const std::size_t n = M.cols();
  std::vector<RatVector> residual;
  for (std::size_t j = 0; j < n; ++j)
    residual.push_back(M.column(j));
  auto norm2 = [](const RatVector &v) {
    Rational s = 0;
    for (const auto &x : v)
      s += x * x;
    return s;
  };
  MaxdetChoice out;
  for (std::size_t step = 0; step < order; ++step) {
    std::size_t best = n;
    Rational best_norm = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(out.cols.begin(), out.cols.end(), j) != out.cols.end())
        continue;
      Rational v = norm2(residual[j]);
      if (v > best_norm) {
        best_norm = v;
        best = j;
      }
    }
    if (best == n)
      throw Error(ErrorCode::RankDeficient, "maxdet: order exceeds rank");
    out.cols.push_back(best);
    const RatVector u = residual[best];
    for (std::size_t j = 0; j < n; ++j) {
      Rational dot = 0;
      for (std::size_t i = 0; i < u.size(); ++i)
        dot += u[i] * residual[j][i];
      if (dot == 0)
        continue;
      const Rational f = dot / best_norm;
      for (std::size_t i = 0; i < u.size(); ++i)
        residual[j][i] -= f * u[i];
    }
  }
  std::sort(out.cols.begin(), out.cols.end());

  const Rational factor2 = opts.local_factor * opts.local_factor;
  Rational current = gram(M, out.cols);
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t p = 0; p < order && !improved; ++p) {
      for (std::size_t q = 0; q < n && !improved; ++q) {
        if (std::find(out.cols.begin(), out.cols.end(), q) != out.cols.end())
          continue;
        IndexSet cand = out.cols;
        cand[p] = q;
        std::sort(cand.begin(), cand.end());
        Rational g = gram(M, cand);
        if (g > factor2 * current) {
          out.cols = cand;
          current = g;
          improved = true;
        }
      }
    }
  }
  out.exact = false;
  out.ratio_bound = power(opts.local_factor, order) * factorial(order);
  return out;
}

/// Row-base state over R (m x d, rank d): M = R_N R_B^{-1}.
struct RowState {
  const IntMatrix &R;
  IndexSet B;
  IndexSet N;
  RatMatrix M;
  Integer det_abs;

  RowState(const IntMatrix &r, IndexSet base) : R(r) { reset(std::move(base)); }

  void reset(IndexSet base) {
    std::sort(base.begin(), base.end());
    B = std::move(base);
    N = complement(R.rows(), B);
    const IntMatrix RB = R.select_rows(B);
    det_abs = abs(det(RB));
    if (det_abs == 0)
      throw Error(ErrorCode::Singular, "base rows are singular");
    M = N.empty() ? RatMatrix(0, B.size())
                  : to_rational(R.select_rows(N)) * inverse(RB);
  }

  /// Replace base positions `pos` by nonbasic positions `rows`.
  BaseSwap exchange(const IndexSet &pos, const IndexSet &rows,
                    const Rational &growth) {
    BaseSwap s;
    for (std::size_t p : pos)
      s.out.push_back(B[p]);
    for (std::size_t r : rows)
      s.in.push_back(N[r]);
    s.growth = growth;
    IndexSet next;
    for (std::size_t i = 0; i < B.size(); ++i)
      if (std::find(pos.begin(), pos.end(), i) == pos.end())
        next.push_back(B[i]);
    next.insert(next.end(), s.in.begin(), s.in.end());
    const Integer before = det_abs;
    reset(next);
    if (Rational(det_abs) != growth * before)
      throw Error(ErrorCode::Precondition, "base exchange growth mismatch");
    return s;
  }
};

IntMatrix row_form(const IntMatrix &A, BaseOrientation o) {
  return o == BaseOrientation::Columns ? A.transpose() : A;
}

void require_full_rank(const IntMatrix &R) {
  if (R.cols() == 0 || R.rows() < R.cols() || rank(R) != R.cols())
    throw Error(ErrorCode::RankDeficient, "base search needs full rank");
}

BaseSelection finish(const IntMatrix &A, BaseOrientation o, const IndexSet &B) {
  return o == BaseOrientation::Columns ? make_column_base(A, B)
                                       : make_row_base(A, B);
}

MaxdetChoice row_maxdet(const IntMatrix &R, const BaseSearchOptions &opts) {
  return maxdet_subset(to_rational(R.transpose()), R.cols(), opts);
}

BaseSearchReport subset_sweep(const IntMatrix &A, BaseOrientation o,
                              bool sweep_nonbasic,
                              const BaseSearchOptions &opts) {
  const IntMatrix R = row_form(A, o);
  require_full_rank(R);
  const std::size_t d = R.cols(), k = R.rows() - d;
  const std::size_t sweep_size = sweep_nonbasic ? k : d;
  if (sweep_size > opts.sweep_cap)
    throw Error(ErrorCode::BudgetExceeded,
                "subset sweep over " + std::to_string(sweep_size) +
                    " indices exceeds the cap of " +
                    std::to_string(opts.sweep_cap));

  const MaxdetChoice start = row_maxdet(R, opts);
  RowState st(R, start.cols);
  BaseSearchReport rep;
  rep.guarantee = BaseGuarantee::DeltaiLeExp;
  const std::size_t max_order = std::min(k, d);
  bool inner_exact = true;
  Rational inner_ratio = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    ++rep.iterations;
    for (std::size_t j = 1; j <= max_order && !changed; ++j) {
      for_each_subset(sweep_size, j, [&](const IndexSet &J) {
        RatMatrix block = sweep_nonbasic ? st.M.select_rows(J)
                                         : st.M.select_cols(J).transpose();
        if (rank(block) < j) {
          // No base extends J; its mixed minors reduce to smaller J.
          ++rep.skipped_rank_deficient;
          return true;
        }
        MaxdetChoice pick = maxdet_subset(block, j, opts);
        if (!pick.exact) {
          inner_exact = false;
          inner_ratio = std::max(inner_ratio, pick.ratio_bound);
        }
        const Rational g = abs(det(block.select_cols(pick.cols)));
        if (g <= opts.threshold)
          return true;
        rep.swaps.push_back(sweep_nonbasic ? st.exchange(pick.cols, J, g)
                                           : st.exchange(J, pick.cols, g));
        changed = true;
        return false;
      });
    }
  }

  rep.base = finish(A, o, st.B);
  for (std::size_t j = 1; j <= max_order; ++j)
    rep.minor_bounds.push_back(inner_exact ? opts.threshold
                                           : opts.threshold * inner_ratio);
  Rational gained = 1;
  for (const auto &s : rep.swaps)
    gained *= s.growth;
  rep.ratio_bound = std::max(Rational(1), Rational(start.ratio_bound / gained));
  return rep;
}

} // namespace

MaxdetChoice maxdet_subset(const RatMatrix &M, std::size_t order,
                           const BaseSearchOptions &opts) {
  if (order > M.cols() || order > M.rows())
    throw Error(ErrorCode::RankDeficient, "maxdet: order exceeds dimensions");
  if (binomial(M.cols(), order) > opts.maxdet_cap)
    return greedy_maxdet(M, order, opts);
  MaxdetChoice out;
  Rational best = 0;
  for_each_subset(M.cols(), order, [&](const IndexSet &I) {
    Rational g = gram(M, I);
    if (g > best) {
      best = g;
      out.cols = I;
    }
    return true;
  });
  if (best == 0)
    throw Error(ErrorCode::RankDeficient, "maxdet: order exceeds rank");
  out.exact = true;
  out.ratio_bound = 1;
  return out;
}

BaseSearchReport maxdet_base(const IntMatrix &A, BaseOrientation o,
                             const BaseSearchOptions &opts) {
  const IntMatrix R = row_form(A, o);
  require_full_rank(R);
  const MaxdetChoice pick = row_maxdet(R, opts);
  BaseSearchReport rep;
  rep.base = finish(A, o, pick.cols);
  rep.iterations = 1;
  rep.guarantee = pick.exact ? BaseGuarantee::MaxdetExact : BaseGuarantee::MaxdetGreedy;
  rep.ratio_bound = pick.ratio_bound;
  // Cramer: every minor of M(B) is a ratio of maximal minors to det A_B.
  const std::size_t orders = std::min(R.cols(), R.rows() - R.cols());
  for (std::size_t j = 1; j <= orders; ++j)
    rep.minor_bounds.push_back(pick.ratio_bound);
  return rep;
}

BaseSearchReport poly_subdet_search(const IntMatrix &A, BaseOrientation o,
                                    const BaseSearchOptions &opts) {
  const IntMatrix R = row_form(A, o);
  require_full_rank(R);
  RowState st(R, independent_rows(to_rational(R)));
  BaseSearchReport rep;
  rep.guarantee = BaseGuarantee::Delta1LeC;
  while (true) {
    ++rep.iterations;
    bool swapped = false;
    for (std::size_t r = 0; r < st.M.rows() && !swapped; ++r)
      for (std::size_t i = 0; i < st.M.cols() && !swapped; ++i) {
        const Rational g = abs(st.M(r, i));
        if (g > opts.threshold) {
          rep.swaps.push_back(st.exchange({i}, {r}, g));
          swapped = true;
        }
      }
    if (!swapped)
      break;
  }
  rep.base = finish(A, o, st.B);
  // Hadamard on M(B) restricted to any i x i block with entries <= c.
  const std::size_t d = R.cols();
  const std::size_t orders = std::min(d, R.rows() - d);
  for (std::size_t j = 1; j <= orders; ++j)
    rep.minor_bounds.push_back(power(opts.threshold, j) * factorial(j));
  rep.ratio_bound = power(opts.threshold, d) * factorial(d);
  return rep;
}

BaseSearchReport exp_subdet_search(const IntMatrix &A,
                                   const BaseSearchOptions &opts) {
  return subset_sweep(A, BaseOrientation::Columns, false, opts);
}

BaseSearchReport exp_subdet_search_dual(const IntMatrix &A,
                                        const BaseSearchOptions &opts) {
  return subset_sweep(A, BaseOrientation::Rows, true, opts);
}

} // namespace dfrob
