/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include "dfrob/systems.hpp"

#include <optional>

namespace dfrob {

/// Rewrites A x = b as H^{-1} A x = H^{-1} b where (H 0) is the Hermite form
/// of A. The new matrix has Delta_gcd = 1 and the same solution set.
/// Returns nullopt when H^{-1} b is fractional: then b is outside the lattice
/// A Z^n and the system has no integer solution.
std::optional<StandardSystem> normalize_gcd(const StandardSystem &sys);

/// Integer solutions of A x = b, x >= 0 correspond to integer solutions of
/// the canonical system A_hat t <= b_hat via x = b_hat - A_hat t and t = G x.
/// A_hat is n x d (d = n - k) with A A_hat = 0 and Delta(A_hat) = Delta(A).
struct CanonicalReduction {
  /// Absent when d = 0; then `offset` is the unique solution of A x = b.
  std::optional<CanonicalSystem> system;
  IntMatrix A_hat;
  IntVector offset;
  IntMatrix G;

  IntVector to_standard(const IntVector &t) const;
  IntVector to_canonical(const IntVector &x) const;
  /// Real points map the same way: x = b_hat - A_hat t.
  RatVector to_standard(const RatVector &t) const;
};

/// Requires Delta_gcd(A) = 1 (throws NotPrimitive otherwise). Every integer b
/// has an integer solution of A x = b once A is primitive, so this never
/// reports infeasibility.
CanonicalReduction standard_to_canonical(const StandardSystem &sys,
                                         std::uint64_t minor_cap = kDefaultMinorCap);

/// A x = b, G x = g (mod moduli), x >= 0, with (A; G) unimodular.
struct ModularStandardSystem {
  IntMatrix A;
  IntVector b;
  IntMatrix G;
  IntVector g;
  IntVector moduli; ///< diagonal of the Smith form, product = Delta_gcd

  bool contains(const IntVector &x) const;
};

/// The slack map x_hat = b - A x sends integer points of A x <= b onto the
/// integer solutions of the modular standard system.
struct ModularReduction {
  ModularStandardSystem system;
  IntMatrix A;
  IntVector b;
  IntMatrix Q; ///< column transform of the Smith form of A

  IntVector to_modular(const IntVector &x) const;
  /// Requires x_hat to satisfy the congruences.
  IntVector to_canonical(const IntVector &x_hat) const;
};

ModularReduction canonical_to_modular_standard(const CanonicalSystem &sys);

} // namespace dfrob
