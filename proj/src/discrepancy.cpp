/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

namespace dfrob {

namespace {

/// Target r and columns c_j scaled to integers: the error of sigma is
/// max_i |r_i - sum_j sigma_j c_ij|.
template <class V> struct Scaled {
  std::vector<V> r;
  std::vector<std::vector<V>> c;
};

template <class V> V inf_norm(const std::vector<V> &v) {
  V best = 0;
  for (const auto &x : v) {
    V a = x < 0 ? V(-x) : x;
    if (a > best)
      best = a;
  }
  return best;
}

/// Lexicographic order on sigma, with sigma_0 most significant.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0)
    return false;
  const std::uint64_t low = diff & (~diff + 1);
  return (a & low) == 0;
}

/// Exhaustive minimization by Gray code. Returns the best sigma mask.
template <class V> std::uint64_t gray_minimize(const Scaled<V> &p) {
  const std::size_t s = p.c.size();
  std::vector<V> v = p.r;
  std::uint64_t mask = 0, best_mask = 0;
  V best = inf_norm(v);
  const std::uint64_t total = std::uint64_t{1} << s;
  for (std::uint64_t t = 1; t < total; ++t) {
    const int j = std::countr_zero(t);
    const std::uint64_t bit = std::uint64_t{1} << j;
    mask ^= bit;
    const auto &col = p.c[static_cast<std::size_t>(j)];
    if (mask & bit)
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] -= col[i];
    else
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += col[i];
    const V val = inf_norm(v);
    if (val < best || (val == best && lex_less(mask, best_mask))) {
      best = val;
      best_mask = mask;
    }
  }
  return best_mask;
}

template <class V>
std::vector<V> residual(const Scaled<V> &p, const std::vector<bool> &sigma) {
  std::vector<V> v = p.r;
  for (std::size_t j = 0; j < sigma.size(); ++j)
    if (sigma[j])
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] -= p.c[j][i];
  return v;
}

template <class V>
V flipped_norm(const std::vector<V> &v, const std::vector<V> &col, bool add) {
  V best = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    V x = add ? V(v[i] + col[i]) : V(v[i] - col[i]);
    if (x < 0)
      x = -x;
    if (x > best)
      best = x;
  }
  return best;
}

template <class V>
void apply_flip(const Scaled<V> &p, std::vector<bool> &sigma,
                std::vector<V> &v, std::size_t j) {
  sigma[j] = !sigma[j];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sigma[j])
      v[i] -= p.c[j][i];
    else
      v[i] += p.c[j][i];
  }
}

/// Single flips, then pair swaps, until no move strictly improves.
template <class V>
void descend(const Scaled<V> &p, std::vector<bool> &sigma, std::vector<V> &v) {
  const std::size_t s = sigma.size();
  V cur = inf_norm(v);
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t j = 0; j < s; ++j) {
      V val = flipped_norm(v, p.c[j], sigma[j]);
      if (val < cur) {
        apply_flip(p, sigma, v, j);
        cur = val;
        improved = true;
      }
    }
    if (improved)
      continue;
    for (std::size_t a = 0; a < s && !improved; ++a) {
      for (std::size_t b = a + 1; b < s && !improved; ++b) {
        if (sigma[a] == sigma[b])
          continue;
        apply_flip(p, sigma, v, a);
        apply_flip(p, sigma, v, b);
        V val = inf_norm(v);
        if (val < cur) {
          cur = val;
          improved = true;
        } else {
          apply_flip(p, sigma, v, b);
          apply_flip(p, sigma, v, a);
        }
      }
    }
  }
}

template <class V>
std::vector<bool> heuristic_minimize(const Scaled<V> &p,
                                     const RoundingOptions &opts) {
  const std::size_t s = p.c.size();
  std::vector<bool> best(s, false);
  std::vector<V> v = p.r;
  descend(p, best, v);
  V best_val = inf_norm(v);
  std::mt19937_64 rng(opts.seed);
  for (std::size_t round = 0; round < opts.restarts && best_val > 0; ++round) {
    std::vector<bool> sigma(s);
    for (std::size_t j = 0; j < s; ++j)
      sigma[j] = (rng() & 1) != 0;
    std::vector<V> w = residual(p, sigma);
    descend(p, sigma, w);
    V val = inf_norm(w);
    if (val < best_val) {
      best_val = val;
      best = sigma;
    }
  }
  return best;
}

struct Problem {
  std::vector<Integer> r;
  std::vector<std::vector<Integer>> c;
};

Problem scale(const RatVector &r, const std::vector<RatVector> &cols) {
  Integer L = 1;
  auto fold = [&](const Rational &q) {
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), q.get_den_mpz_t());
  };
  for (const auto &q : r)
    fold(q);
  for (const auto &col : cols)
    for (const auto &q : col)
      fold(q);
  auto conv = [&](const Rational &q) -> Integer {
    return q.get_num() * (L / q.get_den());
  };
  Problem p;
  for (const auto &q : r)
    p.r.push_back(conv(q));
  for (const auto &col : cols) {
    p.c.emplace_back();
    for (const auto &q : col)
      p.c.back().push_back(conv(q));
  }
  return p;
}

bool fits_int64(const Problem &p) {
  // Every partial sum stays below |r_i| + sum_j |c_ij|.
  for (std::size_t i = 0; i < p.r.size(); ++i) {
    Integer bound = abs(p.r[i]);
    for (const auto &col : p.c)
      bound += abs(col[i]);
    if (bound >= Integer("4000000000000000000"))
      return false;
  }
  return true;
}

Scaled<std::int64_t> narrow(const Problem &p) {
  Scaled<std::int64_t> s;
  for (const auto &x : p.r)
    s.r.push_back(x.get_si());
  for (const auto &col : p.c) {
    s.c.emplace_back();
    for (const auto &x : col)
      s.c.back().push_back(x.get_si());
  }
  return s;
}

Scaled<Integer> wide(const Problem &p) { return {p.r, p.c}; }

std::vector<bool> mask_to_bits(std::uint64_t mask, std::size_t s) {
  std::vector<bool> out(s);
  for (std::size_t j = 0; j < s; ++j)
    out[j] = ((mask >> j) & 1) != 0;
  return out;
}

std::vector<bool> minimize(const Problem &p, bool exhaustive,
                           const RoundingOptions &opts) {
  const std::size_t s = p.c.size();
  const bool small = fits_int64(p);
  if (exhaustive) {
    if (s >= 63)
      throw Error(ErrorCode::TooLarge, "exhaustive rounding beyond 62 columns");
    std::uint64_t mask = small ? gray_minimize(narrow(p)) : gray_minimize(wide(p));
    return mask_to_bits(mask, s);
  }
  return small ? heuristic_minimize(narrow(p), opts)
               : heuristic_minimize(wide(p), opts);
}

Rational inf_norm_rat(const RatVector &v) {
  Rational best = 0;
  for (const auto &x : v)
    if (abs(x) > best)
      best = abs(x);
  return best;
}

} // namespace

const char *to_string(RoundingMethod m) {
  return m == RoundingMethod::Exhaustive ? "exhaustive" : "heuristic";
}

const char *to_string(BoundForm f) {
  switch (f) {
  case BoundForm::Spencer:
    return "spencer";
  case BoundForm::DetlbLog:
    return "detlb-log";
  case BoundForm::DetlbSqrtLog:
    return "detlb-sqrtlog";
  }
  return "?";
}

RoundingResult round_nonneg(const RatMatrix &M, const RatVector &x,
                            const RoundingOptions &opts) {
  if (M.cols() != x.size())
    throw Error(ErrorCode::Dimension, "round_nonneg: shape mismatch");
  RoundingResult res;
  res.z.resize(x.size());
  RatVector frac(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < 0)
      throw Error(ErrorCode::Precondition, "round_nonneg needs x >= 0");
    res.z[j] = floor(x[j]);
    frac[j] = x[j] - Rational(res.z[j]);
    if (frac[j] != 0)
      res.support.push_back(j);
  }
  const std::size_t s = res.support.size();
  res.certified = s <= opts.exhaustive_cap;
  res.method = res.certified ? RoundingMethod::Exhaustive : RoundingMethod::Heuristic;

  if (s > 0) {
    RatVector r = M * frac;
    std::vector<RatVector> cols;
    for (std::size_t j : res.support)
      cols.push_back(M.column(j));
    const std::vector<bool> sigma = minimize(scale(r, cols), res.certified, opts);
    for (std::size_t t = 0; t < s; ++t)
      if (sigma[t])
        res.z[res.support[t]] += 1;
  }

  RatVector diff(x.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    diff[j] = x[j] - Rational(res.z[j]);
  res.achieved = inf_norm_rat(M * diff);
  return res;
}

Rational exact_disc(const RatMatrix &M, std::size_t cap) {
  const std::size_t n = M.cols();
  if (n > cap)
    throw Error(ErrorCode::TooLarge, "exact_disc: too many columns");
  if (n == 0)
    return 0;
  // M s with s = 1 - 2 sigma: error is |M 1 - sum_j sigma_j (2 M_j)|.
  RatVector ones(n, Rational(1));
  RatVector r = M * ones;
  std::vector<RatVector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    RatVector c = M.column(j);
    for (auto &q : c)
      q *= 2;
    cols.push_back(std::move(c));
  }
  const std::vector<bool> sigma = minimize(scale(r, cols), true, {});
  RatVector s(n);
  for (std::size_t j = 0; j < n; ++j)
    s[j] = sigma[j] ? -1 : 1;
  return inf_norm_rat(M * s);
}

DiscBound disc_bound(const RatMatrix &M, std::uint64_t minor_cap) {
  DiscBound b;
  b.delta1 = 0;
  b.numeric_envelope = 0;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < M.cols(); ++j) {
      row += abs(M(i, j));
      if (abs(M(i, j)) > b.delta1)
        b.delta1 = abs(M(i, j));
    }
    if (row > b.numeric_envelope)
      b.numeric_envelope = row;
  }
  const std::size_t order = rank(M);
  try {
    if (order > 0)
      b.minor_maxima = rational_minor_maxima(M, order, minor_cap);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::TooLarge)
      throw;
    b.minor_maxima = {b.delta1};
  }
  b.detlb = detlb_of(b.minor_maxima);

  const double k = std::max(2.0, static_cast<double>(M.rows()));
  const double n = std::max(2.0, static_cast<double>(M.cols()));
  const double d1 = b.delta1.get_d();
  const double dl = b.detlb.approx();
  const double spencer = std::sqrt(k) * d1;
  const double dlog = std::log(k) * dl;
  const double dsqrt = dl * std::sqrt(std::log(k) * std::log(n));
  b.form = BoundForm::Spencer;
  b.form_value = spencer;
  if (dlog < b.form_value) {
    b.form = BoundForm::DetlbLog;
    b.form_value = dlog;
  }
  if (dsqrt < b.form_value) {
    b.form = BoundForm::DetlbSqrtLog;
    b.form_value = dsqrt;
  }
  return b;
}

std::string DiscBound::describe() const {
  std::ostringstream os;
  os << to_string(form) << " (constant omitted): ";
  switch (form) {
  case BoundForm::Spencer:
    os << "sqrt(k) * Delta_1 with Delta_1 = " << delta1;
    break;
  case BoundForm::DetlbLog:
    os << "log(k) * detlb";
    break;
  case BoundForm::DetlbSqrtLog:
    os << "detlb * sqrt(log k * log n)";
    break;
  }
  os << ", detlb = (" << detlb.minor << ")^(1/" << detlb.order << ")";
  return os.str();
}

} // namespace dfrob
