/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/matrix.hpp"

namespace dfrob {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::Parse:
    return "ParseError";
  case ErrorCode::Dimension:
    return "DimensionMismatch";
  case ErrorCode::RankDeficient:
    return "RankDeficient";
  case ErrorCode::Singular:
    return "Singular";
  case ErrorCode::TooLarge:
    return "TooLarge";
  case ErrorCode::NotPrimitive:
    return "NotPrimitive";
  case ErrorCode::NoBase:
    return "NoBase";
  case ErrorCode::BudgetExceeded:
    return "BudgetExceeded";
  case ErrorCode::UnboundedPolytope:
    return "UnboundedPolytope";
  case ErrorCode::Precondition:
    return "PreconditionFailed";
  }
  return "Error";
}

RatMatrix to_rational(const IntMatrix &m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector &v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = Rational(v[i]);
  return r;
}

Integer floor(const Rational &q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational &q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integral(const Rational &q) { return q.get_den() == 1; }

bool is_integral(const RatVector &v) {
  for (const auto &q : v)
    if (!is_integral(q))
      return false;
  return true;
}

IntVector to_integer(const RatVector &v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integral(v[i]))
      throw Error(ErrorCode::Precondition,
                  "non-integral entry " + to_string(v[i]));
    r[i] = v[i].get_num();
  }
  return r;
}

Integer common_denominator(const RatMatrix &m) {
  Integer l = 1;
  for (const auto &v : m.values())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

std::string to_string(const Integer &v) { return v.get_str(); }
std::string to_string(const Rational &v) { return v.get_str(); }

} // namespace dfrob
