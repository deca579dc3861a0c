/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/reductions.hpp"

namespace dfrob {

namespace {

IntMatrix rows_of(const IntMatrix &m, std::size_t from, std::size_t to) {
  IndexSet rs;
  for (std::size_t i = from; i < to; ++i)
    rs.push_back(i);
  return m.select_rows(rs);
}

IntMatrix cols_of(const IntMatrix &m, std::size_t from, std::size_t to) {
  IndexSet cs;
  for (std::size_t j = from; j < to; ++j)
    cs.push_back(j);
  return m.select_cols(cs);
}

} // namespace

std::optional<StandardSystem> normalize_gcd(const StandardSystem &sys) {
  const std::size_t k = sys.rows();
  const HermiteForm h = hnf(sys.matrix());
  bool primitive = true;
  for (std::size_t i = 0; i < k; ++i)
    primitive = primitive && h.H(i, i) == 1;
  if (primitive)
    return sys;
  // A = (H' 0) Q, so H'^{-1} A is the top of Q.
  const IntMatrix Hk = cols_of(h.H, 0, k);
  const RatVector b = solve(to_rational(Hk), to_rational(sys.rhs()));
  if (!is_integral(b))
    return std::nullopt;
  return StandardSystem(rows_of(h.Q, 0, k), to_integer(b));
}

IntVector CanonicalReduction::to_standard(const IntVector &t) const {
  IntVector x = offset;
  if (A_hat.cols() == 0)
    return x;
  const IntVector At = A_hat * t;
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] -= At[i];
  return x;
}

RatVector CanonicalReduction::to_standard(const RatVector &t) const {
  RatVector x = to_rational(offset);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < A_hat.cols(); ++j)
      x[i] -= A_hat(i, j) * t[j];
  return x;
}

IntVector CanonicalReduction::to_canonical(const IntVector &x) const {
  if (G.rows() == 0)
    return {};
  return G * x;
}

CanonicalReduction standard_to_canonical(const StandardSystem &sys,
                                         std::uint64_t minor_cap) {
  const std::size_t k = sys.rows(), n = sys.cols();
  const HermiteForm h = hnf(sys.matrix());
  for (std::size_t i = 0; i < k; ++i)
    if (h.H(i, i) != 1)
      throw Error(ErrorCode::NotPrimitive,
                  "standard_to_canonical needs Delta_gcd(A) = 1");
  // A Q_inv = (I 0): the first k columns X give x0 = X b, the rest K span
  // the integer kernel, and Q maps back since Q Q_inv = I.
  CanonicalReduction r;
  const IntMatrix X = cols_of(h.Q_inv, 0, k);
  const IntMatrix K = cols_of(h.Q_inv, k, n);
  r.offset = X * sys.rhs();
  r.A_hat = IntMatrix(n, n - k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n - k; ++j)
      r.A_hat(i, j) = -K(i, j);
  r.G = rows_of(h.Q, k, n);
  if (n > k)
    r.system.emplace(r.A_hat, r.offset, minor_cap);
  return r;
}

bool ModularStandardSystem::contains(const IntVector &x) const {
  for (const auto &v : x)
    if (v < 0)
      return false;
  if (A.rows() > 0 && A * x != b)
    return false;
  const IntVector gx = G * x;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    Integer r = gx[i] - g[i];
    if (r % moduli[i] != 0)
      return false;
  }
  return true;
}

IntVector ModularReduction::to_modular(const IntVector &x) const {
  IntVector s = A * x;
  for (std::size_t i = 0; i < s.size(); ++i)
    s[i] = b[i] - s[i];
  return s;
}

IntVector ModularReduction::to_canonical(const IntVector &x_hat) const {
  const IntVector gx = system.G * x_hat;
  IntVector u(gx.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Integer num = system.g[i] - gx[i];
    if (num % system.moduli[i] != 0)
      throw Error(ErrorCode::Precondition, "point violates the congruences");
    u[i] = num / system.moduli[i];
  }
  return Q * u;
}

ModularReduction canonical_to_modular_standard(const CanonicalSystem &sys) {
  const IntMatrix &A = sys.matrix();
  const std::size_t m = A.rows(), n = A.cols();
  // S = P A Q = (D; 0). With x = Q u, P (b - A x) = P b - (D u; 0): the
  // bottom rows give equations and the top rows congruences modulo D.
  const SmithForm f = snf(A);
  ModularReduction r;
  r.A = A;
  r.b = sys.rhs();
  r.Q = f.Q;
  const IntVector Pb = f.P * sys.rhs();
  r.system.A = rows_of(f.P, n, m);
  r.system.b.assign(Pb.begin() + static_cast<long>(n), Pb.end());
  r.system.G = rows_of(f.P, 0, n);
  r.system.g.assign(Pb.begin(), Pb.begin() + static_cast<long>(n));
  r.system.moduli.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    r.system.moduli[i] = f.S(i, i);
  return r;
}

} // namespace dfrob
