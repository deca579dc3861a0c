/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dfrob {

namespace {

// Hadamard-style bound below which every minor (and hence every Bareiss
// intermediate) fits into int64_t, leaving headroom for the __int128
// cross products.
constexpr double kFastBound = 4.0e18;

bool fits_int64(const Integer &v) { return v.fits_slong_p(); }

double row_norm(std::span<const Integer> row) {
  double s = 0;
  for (const auto &v : row) {
    double d = v.get_d();
    s += d * d;
  }
  return std::sqrt(s);
}

/// Bound on all minors of m, computed in floating point with slack.
double minor_bound(const IntMatrix &m) {
  double b = 1.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    b *= std::max(1.0, row_norm(m.row(i)) * 1.0000001);
  return b;
}

bool fast_path_ok(const IntMatrix &m) {
  for (const auto &v : m.values())
    if (!fits_int64(v))
      return false;
  return minor_bound(m) < kFastBound;
}

// Bareiss on int64 data, in place. n x n, row-major.
std::int64_t det_int64(std::vector<std::int64_t> a, std::size_t n) {
  if (n == 0)
    return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p * n + k] == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    const __int128 piv = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const __int128 aik = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = a[i * n + j] * piv - aik * a[k * n + j];
        a[i * n + j] = static_cast<std::int64_t>(v / prev);
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

Integer det_bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0)
    return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Gauss-Jordan reduced row echelon form in place; returns pivot columns.
IndexSet rref(RatMatrix &m) {
  IndexSet pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0)
      ++p;
    if (p == m.rows())
      continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

Integer det(const IntMatrix &m) {
  if (!m.square())
    throw Error(ErrorCode::Dimension, "det of non-square matrix");
  if (fast_path_ok(m)) {
    std::vector<std::int64_t> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < a.size(); ++i)
      a[i] = m.values()[i].get_si();
    return Integer(static_cast<long>(det_int64(std::move(a), m.rows())));
  }
  return det_bareiss(m);
}

Rational det(const RatMatrix &m) {
  if (!m.square())
    throw Error(ErrorCode::Dimension, "det of non-square matrix");
  const Integer l = common_denominator(m);
  IntMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * l;
      scaled(i, j) = v.get_num();
    }
  Integer lp;
  mpz_pow_ui(lp.get_mpz_t(), l.get_mpz_t(), m.rows());
  Rational d(det(scaled), lp);
  d.canonicalize();
  return d;
}

std::size_t rank(const RatMatrix &m) {
  RatMatrix w = m;
  return rref(w).size();
}

std::size_t rank(const IntMatrix &m) { return rank(to_rational(m)); }

RatMatrix inverse(const RatMatrix &m) {
  if (!m.square())
    throw Error(ErrorCode::Dimension, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1)
    throw Error(ErrorCode::Singular, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

RatMatrix inverse(const IntMatrix &m) { return inverse(to_rational(m)); }

RatVector solve(const RatMatrix &a, const RatVector &b) {
  if (!a.square() || a.rows() != b.size())
    throw Error(ErrorCode::Dimension, "solve: shape mismatch");
  const std::size_t n = a.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto piv = rref(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1))
    throw Error(ErrorCode::Singular, "matrix is singular");
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = aug(i, n);
  return x;
}

IndexSet independent_rows(const RatMatrix &m) {
  // Rows of the transpose in rref order give the first independent columns.
  RatMatrix t = m.transpose();
  return rref(t);
}

RatMatrix null_space(const RatMatrix &m) {
  RatMatrix w = m;
  const IndexSet piv = rref(w);
  IndexSet free_cols;
  for (std::size_t c = 0, p = 0; c < m.cols(); ++c) {
    if (p < piv.size() && piv[p] == c)
      ++p;
    else
      free_cols.push_back(c);
  }
  RatMatrix basis(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      basis(piv[r], f) = -w(r, free_cols[f]);
  }
  return basis;
}

Integer hadamard_bound(const IntMatrix &m, std::size_t order) {
  std::vector<Integer> norms2;
  norms2.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer s = 0;
    for (const auto &v : m.row(i))
      s += v * v;
    norms2.push_back(s);
  }
  std::sort(norms2.begin(), norms2.end(), std::greater<>());
  Integer prod = 1;
  for (std::size_t i = 0; i < std::min(order, norms2.size()); ++i)
    prod *= norms2[i];
  Integer root;
  mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
  if (root * root < prod)
    root += 1;
  return root;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t minor_count(std::size_t rows, std::size_t cols,
                          std::size_t max_order) {
  unsigned __int128 total = 0;
  for (std::size_t j = 1; j <= max_order; ++j) {
    unsigned __int128 c = static_cast<unsigned __int128>(binomial(rows, j)) *
                          binomial(cols, j);
    total += c;
    if (total > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(total);
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const IndexSet &)> &f) {
  if (k > n)
    return;
  IndexSet idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!f(idx))
      return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

double Detlb::approx() const {
  if (order == 0)
    return 0.0;
  return std::pow(minor.get_d(), 1.0 / static_cast<double>(order));
}

bool operator<(const Detlb &a, const Detlb &b) {
  if (a.order == 0)
    return b.order != 0 && b.minor > 0;
  if (b.order == 0)
    return false;
  // a.minor^{1/p} < b.minor^{1/q}  <=>  a.minor^q < b.minor^p
  Rational lhs, rhs;
  mpz_class an, ad, bn, bd;
  mpz_pow_ui(an.get_mpz_t(), a.minor.get_num_mpz_t(), b.order);
  mpz_pow_ui(ad.get_mpz_t(), a.minor.get_den_mpz_t(), b.order);
  mpz_pow_ui(bn.get_mpz_t(), b.minor.get_num_mpz_t(), a.order);
  mpz_pow_ui(bd.get_mpz_t(), b.minor.get_den_mpz_t(), a.order);
  return an * bd < bn * ad;
}

Detlb detlb_of(std::span<const Rational> maxima) {
  Detlb best;
  for (std::size_t t = 0; t < maxima.size(); ++t) {
    Detlb cand{t + 1, maxima[t]};
    if (best < cand)
      best = cand;
  }
  return best;
}

const Integer &DeltaStats::delta() const {
  if (!complete() || rank == 0)
    throw Error(ErrorCode::Precondition,
                "delta statistics not enumerated up to the rank");
  return delta_j.back();
}

const Integer &DeltaStats::delta_gcd() const {
  if (!complete() || rank == 0)
    throw Error(ErrorCode::Precondition,
                "delta statistics not enumerated up to the rank");
  return gcd_j.back();
}

DeltaStats delta_stats(const IntMatrix &m, std::optional<std::size_t> max_order,
                       std::uint64_t cap) {
  DeltaStats st;
  st.rank = rank(m);
  const std::size_t top = max_order.value_or(st.rank);
  if (top > st.rank)
    throw Error(ErrorCode::Precondition, "max_order exceeds rank");
  if (minor_count(m.rows(), m.cols(), top) > cap)
    throw Error(ErrorCode::TooLarge,
                "minor enumeration exceeds cap of " + std::to_string(cap));

  const bool fast = fast_path_ok(m);
  std::vector<std::int64_t> flat;
  if (fast) {
    flat.resize(m.rows() * m.cols());
    for (std::size_t i = 0; i < flat.size(); ++i)
      flat[i] = m.values()[i].get_si();
  }

  RatVector maxima;
  for (std::size_t j = 1; j <= top; ++j) {
    Integer best = 0;
    Integer g = 0;
    std::vector<std::int64_t> buf(j * j);
    for_each_subset(m.rows(), j, [&](const IndexSet &rs) {
      for_each_subset(m.cols(), j, [&](const IndexSet &cs) {
        Integer d;
        if (fast) {
          for (std::size_t a = 0; a < j; ++a)
            for (std::size_t b = 0; b < j; ++b)
              buf[a * j + b] = flat[rs[a] * m.cols() + cs[b]];
          d = static_cast<long>(det_int64(buf, j));
        } else {
          d = det(m.submatrix(rs, cs));
        }
        d = abs(d);
        if (d > best)
          best = d;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        return true;
      });
      return true;
    });
    st.delta_j.push_back(best);
    st.gcd_j.push_back(g);
    maxima.emplace_back(best);
  }
  st.detlb = detlb_of(maxima);
  return st;
}

RatVector rational_minor_maxima(const RatMatrix &m, std::size_t max_order,
                                std::uint64_t cap) {
  const Integer l = common_denominator(m);
  IntMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational v = m(i, j) * l;
      scaled(i, j) = v.get_num();
    }
  const DeltaStats st = delta_stats(scaled, max_order, cap);
  RatVector out;
  Integer lp = 1;
  for (std::size_t j = 0; j < st.delta_j.size(); ++j) {
    lp *= l;
    Rational v(st.delta_j[j], lp);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

} // namespace dfrob
