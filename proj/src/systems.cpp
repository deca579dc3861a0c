/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/systems.hpp"

#include <algorithm>

namespace dfrob {

namespace {

std::shared_ptr<const DeltaStats> try_stats(const IntMatrix &A,
                                            std::uint64_t cap) {
  try {
    return std::make_shared<const DeltaStats>(delta_stats(A, std::nullopt, cap));
  } catch (const Error &e) {
    if (e.code() != ErrorCode::TooLarge)
      throw;
    return nullptr;
  }
}

IndexSet complement(std::size_t n, const IndexSet &basic) {
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(basic.begin(), basic.end(), i) == basic.end())
      out.push_back(i);
  return out;
}

} // namespace

CanonicalSystem::CanonicalSystem(IntMatrix A, IntVector b,
                                 std::uint64_t minor_cap)
    : A_(std::move(A)), b_(std::move(b)) {
  if (A_.rows() != b_.size())
    throw Error(ErrorCode::Dimension, "rhs length differs from row count");
  if (A_.cols() == 0 || A_.rows() < A_.cols() || rank(A_) != A_.cols())
    throw Error(ErrorCode::RankDeficient, "canonical matrix needs rank n");
  stats_ = try_stats(A_, minor_cap);
  delta_ = stats_ ? stats_->delta() : hadamard_bound(A_, A_.cols());
}

CanonicalSystem CanonicalSystem::with_rhs(IntVector b) const {
  if (b.size() != A_.rows())
    throw Error(ErrorCode::Dimension, "rhs length differs from row count");
  CanonicalSystem s;
  s.A_ = A_;
  s.b_ = std::move(b);
  s.stats_ = stats_;
  s.delta_ = delta_;
  return s;
}

RatVector CanonicalSystem::slacks(const RatVector &x) const {
  RatVector s(A_.rows());
  for (std::size_t i = 0; i < A_.rows(); ++i) {
    s[i] = b_[i];
    for (std::size_t j = 0; j < A_.cols(); ++j)
      s[i] -= A_(i, j) * x[j];
  }
  return s;
}

IntVector CanonicalSystem::slacks(const IntVector &z) const {
  IntVector s(A_.rows());
  for (std::size_t i = 0; i < A_.rows(); ++i) {
    s[i] = b_[i];
    for (std::size_t j = 0; j < A_.cols(); ++j)
      s[i] -= A_(i, j) * z[j];
  }
  return s;
}

bool CanonicalSystem::contains(const IntVector &z) const {
  if (z.size() != A_.cols())
    return false;
  for (const auto &s : slacks(z))
    if (s < 0)
      return false;
  return true;
}

StandardSystem::StandardSystem(IntMatrix A, IntVector b,
                               std::uint64_t minor_cap)
    : A_(std::move(A)), b_(std::move(b)) {
  if (A_.rows() != b_.size())
    throw Error(ErrorCode::Dimension, "rhs length differs from row count");
  if (A_.rows() == 0 || rank(A_) != A_.rows())
    throw Error(ErrorCode::RankDeficient, "standard matrix needs rank k");
  stats_ = try_stats(A_, minor_cap);
}

bool StandardSystem::normalized() const {
  if (!stats_)
    throw Error(ErrorCode::TooLarge, "Delta_gcd not certified");
  return stats_->delta_gcd() == 1;
}

const Integer &StandardSystem::delta() const {
  if (!stats_)
    throw Error(ErrorCode::TooLarge, "Delta not certified");
  return stats_->delta();
}

StandardSystem StandardSystem::with_rhs(IntVector b) const {
  if (b.size() != A_.rows())
    throw Error(ErrorCode::Dimension, "rhs length differs from row count");
  StandardSystem s;
  s.A_ = A_;
  s.b_ = std::move(b);
  s.stats_ = stats_;
  return s;
}

bool StandardSystem::contains(const IntVector &z) const {
  if (z.size() != A_.cols())
    return false;
  for (const auto &v : z)
    if (v < 0)
      return false;
  return A_ * z == b_;
}

BaseSelection make_row_base(const IntMatrix &A, IndexSet rows) {
  BaseSelection base;
  base.orientation = BaseOrientation::Rows;
  std::sort(rows.begin(), rows.end());
  base.indices = rows;
  base.nonbasic = complement(A.rows(), rows);
  const IntMatrix AB = A.select_rows(base.indices);
  base.det_abs = abs(det(AB));
  if (base.det_abs == 0)
    throw Error(ErrorCode::Singular, "base rows are singular");
  base.M = to_rational(A.select_rows(base.nonbasic)) * inverse(AB);
  return base;
}

BaseSelection make_column_base(const IntMatrix &A, IndexSet cols) {
  BaseSelection base;
  base.orientation = BaseOrientation::Columns;
  std::sort(cols.begin(), cols.end());
  base.indices = cols;
  base.nonbasic = complement(A.cols(), cols);
  const IntMatrix AB = A.select_cols(base.indices);
  base.det_abs = abs(det(AB));
  if (base.det_abs == 0)
    throw Error(ErrorCode::Singular, "base columns are singular");
  base.M = inverse(AB) * to_rational(A.select_cols(base.nonbasic));
  return base;
}

} // namespace dfrob
