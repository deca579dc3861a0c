/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include "dfrob/systems.hpp"

namespace dfrob {

/// 2718281828459045 / 10^15, a rational just below e.
const Rational &e_surrogate();

struct MaxdetChoice {
  IndexSet cols;
  /// True when every candidate subset was examined.
  bool exact = false;
  /// Upper bound on (best volume) / (returned volume); 1 when exact.
  Rational ratio_bound = 1;
};

struct BaseSearchOptions {
  /// Exhaustive maxdet when binomial(n, order) is at most this.
  std::uint64_t maxdet_cap = kDefaultMinorCap;
  /// Local search accepts a swap only if it multiplies the volume by more
  /// than this factor.
  Rational local_factor = 1;
  /// Subset sweeps refuse more than this many sweep indices.
  std::size_t sweep_cap = 20;
  Rational threshold = e_surrogate();
};

/// Columns of M maximizing the volume sqrt(det(M_I^T M_I)) over |I| = order
/// (|det M_I| when order = rows). Exhaustive with lexicographic tie-breaking
/// when small enough, otherwise greedy plus single-swap local search.
/// Throws RankDeficient when order exceeds rank(M).
MaxdetChoice maxdet_subset(const RatMatrix &M, std::size_t order,
                           const BaseSearchOptions &opts = {});

enum class BaseGuarantee { Delta1LeC, DeltaiLeExp, MaxdetExact, MaxdetGreedy };

const char *to_string(BaseGuarantee g);

struct BaseSwap {
  IndexSet out;
  IndexSet in;
  Rational growth; ///< |det| after / |det| before
};

struct BaseSearchReport {
  BaseSelection base;
  std::size_t iterations = 0;
  std::vector<BaseSwap> swaps;
  BaseGuarantee guarantee = BaseGuarantee::MaxdetExact;
  /// minor_bounds[i-1] bounds Delta_i(M(B)) at termination.
  RatVector minor_bounds;
  /// Bound on Delta / |det A_B|.
  Rational ratio_bound = 1;
  /// Sweep subsets whose block of M(B) was singular and thus skipped.
  std::size_t skipped_rank_deficient = 0;
};

/// Base of maximal |det|. Columns orientation picks k columns of a k x n
/// matrix; Rows picks n rows of an (n+k) x n matrix.
BaseSearchReport maxdet_base(const IntMatrix &A, BaseOrientation orientation,
                             const BaseSearchOptions &opts = {});

/// Starts from the lexicographically first base and swaps while some entry of
/// M(B) exceeds the threshold in absolute value. Ends with every entry of
/// M(B) at most the threshold. Throws RankDeficient.
BaseSearchReport poly_subdet_search(const IntMatrix &A,
                                    BaseOrientation orientation = BaseOrientation::Columns,
                                    const BaseSearchOptions &opts = {});

/// k x n matrix of rank k. Starts at a maxdet base, then for J subsets of the
/// k basic positions (by size, then lexicographically) replaces B_J by the
/// maxdet columns I of M_J whenever |det M_{J,I}| exceeds the threshold.
/// Throws BudgetExceeded when k exceeds the sweep cap.
BaseSearchReport exp_subdet_search(const IntMatrix &A,
                                   const BaseSearchOptions &opts = {});

/// n x d matrix of rank d (k = n - d). Row-base analogue of
/// exp_subdet_search that sweeps the subsets of the k nonbasic rows.
BaseSearchReport exp_subdet_search_dual(const IntMatrix &A,
                                        const BaseSearchOptions &opts = {});

} // namespace dfrob
