/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include <stdexcept>
#include <string>

namespace dfrob {

enum class ErrorCode {
  Parse,
  Dimension,
  RankDeficient,
  Singular,
  TooLarge,
  NotPrimitive,
  NoBase,
  BudgetExceeded,
  UnboundedPolytope,
  Precondition,
};

const char *to_string(ErrorCode code);

/// Operational failure. Certified negative outcomes (infeasibility, missing
/// slack) are reported through result types, never through this exception.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace dfrob
