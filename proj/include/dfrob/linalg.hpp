/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include "dfrob/matrix.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace dfrob {

inline constexpr std::uint64_t kDefaultMinorCap = 1'000'000;

// ---------------------------------------------------------------------------
// Determinants, rank, inverses
// ---------------------------------------------------------------------------

/// Fraction-free (Bareiss) determinant. Uses a 64-bit fast path whenever the
/// Hadamard bound guarantees that every intermediate minor fits.
Integer det(const IntMatrix &m);
Rational det(const RatMatrix &m);

std::size_t rank(const IntMatrix &m);
std::size_t rank(const RatMatrix &m);

/// Throws Singular.
RatMatrix inverse(const RatMatrix &m);
RatMatrix inverse(const IntMatrix &m);

/// Unique solution of a square nonsingular system. Throws Singular.
RatVector solve(const RatMatrix &a, const RatVector &b);

/// Lexicographically first maximal set of linearly independent rows.
IndexSet independent_rows(const RatMatrix &m);

/// Basis of {x : m x = 0}, one basis vector per column of the result.
RatMatrix null_space(const RatMatrix &m);

/// Upper bound on every maximal-order minor: product of the `order` largest
/// Euclidean row norms, rounded up.
Integer hadamard_bound(const IntMatrix &m, std::size_t order);

// ---------------------------------------------------------------------------
// Normal forms
// ---------------------------------------------------------------------------

/// Column-style Hermite form: original = H * Q with Q unimodular,
/// H = (lower triangular | 0), H_ii > 0 and 0 <= H_ij < H_ii for j < i.
/// `Q_inv` is carried so that original * Q_inv = H without a second inversion.
struct HermiteForm {
  IntMatrix H;
  IntMatrix Q;
  IntMatrix Q_inv;
  IntMatrix original;
};

/// Throws RankDeficient when the rows are linearly dependent.
HermiteForm hnf(const IntMatrix &m);

/// S = P * original * Q, S diagonal with s_1 | s_2 | ... and P, Q unimodular.
struct SmithForm {
  IntMatrix S;
  IntMatrix P;
  IntMatrix Q;
  IntMatrix original;

  /// Nonzero invariant factors s_1..s_rank.
  IntVector invariant_factors() const;
};

SmithForm snf(const IntMatrix &m);

// ---------------------------------------------------------------------------
// Subdeterminant statistics
// ---------------------------------------------------------------------------

/// max_t Delta_t^{1/t}, kept exact as the maximizing pair (t*, Delta_{t*}).
struct Detlb {
  std::size_t order = 0;
  Rational minor = 0;

  double approx() const;
  /// Exact comparison of minor^{1/order} values.
  friend bool operator<(const Detlb &a, const Detlb &b);
};

Detlb detlb_of(std::span<const Rational> maxima);

struct DeltaStats {
  std::size_t rank = 0;
  /// delta_j[j-1] = Delta_j, gcd_j[j-1] = Delta_gcd(., j) for j = 1..max_order.
  IntVector delta_j;
  IntVector gcd_j;
  Detlb detlb;

  bool complete() const { return delta_j.size() == rank; }
  /// Delta(A) = Delta_rank(A). Throws Precondition unless complete().
  const Integer &delta() const;
  const Integer &delta_gcd() const;
};

/// Exact Delta_j and Delta_gcd(., j) for j = 1..max_order by full minor
/// enumeration. `max_order` defaults to the rank. Throws TooLarge when the
/// number of minors exceeds `cap`.
DeltaStats delta_stats(const IntMatrix &m,
                       std::optional<std::size_t> max_order = std::nullopt,
                       std::uint64_t cap = kDefaultMinorCap);

/// Delta_j of a rational matrix for j = 1..max_order (via a common
/// denominator). Throws TooLarge like delta_stats.
RatVector rational_minor_maxima(const RatMatrix &m, std::size_t max_order,
                                std::uint64_t cap = kDefaultMinorCap);

/// Number of minors of orders 1..max_order of a rows x cols matrix,
/// saturating at UINT64_MAX.
std::uint64_t minor_count(std::size_t rows, std::size_t cols,
                          std::size_t max_order);

std::uint64_t binomial(std::size_t n, std::size_t k);

/// Calls f on every k-subset of {0..n-1} in lexicographic order. Stops early
/// when f returns false.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const IndexSet &)> &f);

/// G with (m; G) unimodular. Throws NotPrimitive unless Delta_gcd(m) = 1.
IntMatrix unimodular_completion(const IntMatrix &m);

} // namespace dfrob
