/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include "dfrob/linalg.hpp"

#include <memory>

namespace dfrob {

/// A x <= b with A of shape (n+k) x n and rank n. Subdeterminant statistics
/// are computed once at construction and shared by copies.
class CanonicalSystem {
public:
  CanonicalSystem(IntMatrix A, IntVector b,
                  std::uint64_t minor_cap = kDefaultMinorCap);

  const IntMatrix &matrix() const { return A_; }
  const IntVector &rhs() const { return b_; }
  std::size_t dimension() const { return A_.cols(); }
  std::size_t constraints() const { return A_.rows(); }
  std::size_t extra_rows() const { return A_.rows() - A_.cols(); }

  /// Null when minor enumeration exceeded the cap.
  const DeltaStats *stats() const { return stats_.get(); }
  bool delta_certified() const { return stats_ != nullptr; }
  /// Exact Delta(A) when certified, otherwise the Hadamard upper bound.
  const Integer &delta() const { return delta_; }

  /// Same matrix and statistics, new right-hand side.
  CanonicalSystem with_rhs(IntVector b) const;

  /// Per-row slack b - A x.
  RatVector slacks(const RatVector &x) const;
  IntVector slacks(const IntVector &z) const;
  bool contains(const IntVector &z) const;

private:
  CanonicalSystem() = default;

  IntMatrix A_;
  IntVector b_;
  std::shared_ptr<const DeltaStats> stats_;
  Integer delta_;
};

/// A x = b, x >= 0 with A of shape k x n and rank k.
class StandardSystem {
public:
  StandardSystem(IntMatrix A, IntVector b,
                 std::uint64_t minor_cap = kDefaultMinorCap);

  const IntMatrix &matrix() const { return A_; }
  const IntVector &rhs() const { return b_; }
  std::size_t rows() const { return A_.rows(); }
  std::size_t cols() const { return A_.cols(); }

  const DeltaStats *stats() const { return stats_.get(); }
  /// Delta_gcd(A) = 1. Requires certified statistics.
  bool normalized() const;
  const Integer &delta() const;

  StandardSystem with_rhs(IntVector b) const;
  bool contains(const IntVector &z) const;

private:
  StandardSystem() = default;

  IntMatrix A_;
  IntVector b_;
  std::shared_ptr<const DeltaStats> stats_;
};

enum class BaseOrientation { Rows, Columns };

/// Index set B with delta_B = |det A_B| and the derived matrix
/// M = A_N A_B^{-1} (rows of a canonical system) or
/// M = A_B^{-1} A_N (columns of a standard system).
struct BaseSelection {
  IndexSet indices;
  IndexSet nonbasic;
  Integer det_abs;
  RatMatrix M;
  BaseOrientation orientation = BaseOrientation::Rows;
};

/// Throws Singular if A_B is not invertible.
BaseSelection make_row_base(const IntMatrix &A, IndexSet rows);
BaseSelection make_column_base(const IntMatrix &A, IndexSet cols);

} // namespace dfrob
