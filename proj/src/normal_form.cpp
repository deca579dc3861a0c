/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/linalg.hpp"

namespace dfrob {

namespace {

// Column operations on W are mirrored on U (so that M * U = W) and their
// inverses on V (so that W * V = M).
struct ColumnTracker {
  IntMatrix &W;
  IntMatrix &U;
  IntMatrix &V;

  // (col_i, col_j) <- (p col_i + q col_j, r col_i + s col_j), ps - qr = 1.
  void combine(std::size_t i, std::size_t j, const Integer &p, const Integer &q,
               const Integer &r, const Integer &s) {
    auto apply = [&](IntMatrix &m) {
      for (std::size_t row = 0; row < m.rows(); ++row) {
        Integer ci = m(row, i), cj = m(row, j);
        m(row, i) = p * ci + q * cj;
        m(row, j) = r * ci + s * cj;
      }
    };
    apply(W);
    apply(U);
    // Inverse acts on rows i, j of V: (row_i, row_j) <- (s row_i - r row_j,
    // -q row_i + p row_j).
    for (std::size_t c = 0; c < V.cols(); ++c) {
      Integer vi = V(i, c), vj = V(j, c);
      V(i, c) = s * vi - r * vj;
      V(j, c) = -q * vi + p * vj;
    }
  }

  void negate(std::size_t i) {
    for (std::size_t row = 0; row < W.rows(); ++row)
      W(row, i) = -W(row, i);
    for (std::size_t row = 0; row < U.rows(); ++row)
      U(row, i) = -U(row, i);
    for (std::size_t c = 0; c < V.cols(); ++c)
      V(i, c) = -V(i, c);
  }

  // col_j <- col_j - f col_i
  void subtract(std::size_t j, std::size_t i, const Integer &f) {
    if (f == 0)
      return;
    for (std::size_t row = 0; row < W.rows(); ++row)
      W(row, j) -= f * W(row, i);
    for (std::size_t row = 0; row < U.rows(); ++row)
      U(row, j) -= f * U(row, i);
    for (std::size_t c = 0; c < V.cols(); ++c)
      V(i, c) += f * V(j, c);
  }
};

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

HermiteForm hnf(const IntMatrix &m) {
  const std::size_t k = m.rows(), n = m.cols();
  if (k > n)
    throw Error(ErrorCode::RankDeficient, "more rows than columns");
  HermiteForm out;
  out.original = m;
  out.H = m;
  out.Q_inv = IntMatrix::identity(n);
  out.Q = IntMatrix::identity(n);
  ColumnTracker t{out.H, out.Q_inv, out.Q};
  IntMatrix &W = out.H;

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (W(i, j) == 0)
        continue;
      const Integer a = W(i, i), b = W(i, j);
      if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        t.subtract(j, i, b / a);
        continue;
      }
      Integer g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
                 b.get_mpz_t());
      // det [[p, -b/g], [q, a/g]] = 1
      t.combine(i, j, p, q, Integer(-b / g), Integer(a / g));
    }
    if (W(i, i) == 0)
      throw Error(ErrorCode::RankDeficient, "rows are linearly dependent");
    if (W(i, i) < 0)
      t.negate(i);
    for (std::size_t j = 0; j < i; ++j)
      t.subtract(j, i, floor_div(W(i, j), W(i, i)));
  }
  return out;
}

IntVector SmithForm::invariant_factors() const {
  IntVector s;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0)
      s.push_back(S(i, i));
  return s;
}

SmithForm snf(const IntMatrix &m) {
  const std::size_t k = m.rows(), n = m.cols();
  SmithForm out;
  out.original = m;
  out.S = m;
  out.P = IntMatrix::identity(k);
  out.Q = IntMatrix::identity(n);
  IntMatrix &W = out.S;

  auto row_sub = [&](std::size_t i, std::size_t r, const Integer &f) {
    for (std::size_t c = 0; c < n; ++c)
      W(i, c) -= f * W(r, c);
    for (std::size_t c = 0; c < k; ++c)
      out.P(i, c) -= f * out.P(r, c);
  };
  auto col_sub = [&](std::size_t j, std::size_t c0, const Integer &f) {
    for (std::size_t r = 0; r < k; ++r)
      W(r, j) -= f * W(r, c0);
    for (std::size_t r = 0; r < n; ++r)
      out.Q(r, j) -= f * out.Q(r, c0);
  };
  auto swap_r = [&](std::size_t a, std::size_t b) {
    W.swap_rows(a, b);
    out.P.swap_rows(a, b);
  };
  auto swap_c = [&](std::size_t a, std::size_t b) {
    W.swap_cols(a, b);
    out.Q.swap_cols(a, b);
  };

  for (std::size_t t = 0; t < std::min(k, n); ++t) {
    // Smallest nonzero magnitude in the trailing block becomes the pivot.
    auto bring_min_pivot = [&]() -> bool {
      bool found = false;
      std::size_t bi = t, bj = t;
      Integer best;
      for (std::size_t i = t; i < k; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (W(i, j) != 0 && (!found || abs(W(i, j)) < best)) {
            found = true;
            best = abs(W(i, j));
            bi = i;
            bj = j;
          }
      if (!found)
        return false;
      swap_r(t, bi);
      swap_c(t, bj);
      return true;
    };
    if (!bring_min_pivot())
      break;

    while (true) {
      bool residue = false;
      for (std::size_t i = t + 1; i < k; ++i)
        if (W(i, t) != 0) {
          row_sub(i, t, trunc_div(W(i, t), W(t, t)));
          residue = residue || W(i, t) != 0;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (W(t, j) != 0) {
          col_sub(j, t, trunc_div(W(t, j), W(t, t)));
          residue = residue || W(t, j) != 0;
        }
      if (residue) {
        // Move the smallest leftover in pivot row/column onto the diagonal.
        std::size_t bi = t, bj = t;
        Integer best = abs(W(t, t));
        for (std::size_t i = t + 1; i < k; ++i)
          if (W(i, t) != 0 && abs(W(i, t)) < best) {
            best = abs(W(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (W(t, j) != 0 && abs(W(t, j)) < best) {
            best = abs(W(t, j));
            bi = t;
            bj = j;
          }
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      // Pivot row and column are clear; enforce divisibility of the rest.
      bool fixed = true;
      for (std::size_t i = t + 1; i < k && fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(W(i, j).get_mpz_t(), W(t, t).get_mpz_t())) {
            row_sub(t, i, Integer(-1));
            fixed = false;
            break;
          }
      if (fixed)
        break;
    }
    if (W(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c)
        W(t, c) = -W(t, c);
      for (std::size_t c = 0; c < k; ++c)
        out.P(t, c) = -out.P(t, c);
    }
  }
  return out;
}

IntMatrix unimodular_completion(const IntMatrix &m) {
  const std::size_t k = m.rows(), n = m.cols();
  HermiteForm h;
  try {
    h = hnf(m);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::RankDeficient)
      throw Error(ErrorCode::NotPrimitive, "rows are not primitive (rank)");
    throw;
  }
  // m = (H' 0) Q with Delta_gcd(m) = det H'; primitivity forces H' = I, so m
  // is the top of Q and the remaining rows of Q complete it.
  for (std::size_t i = 0; i < k; ++i)
    if (h.H(i, i) != 1)
      throw Error(ErrorCode::NotPrimitive,
                  "Delta_gcd of the rows is not 1");
  IntMatrix g(n - k, n);
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i - k, j) = h.Q(i, j);
  return g;
}

} // namespace dfrob
