/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#pragma once

#include "dfrob/frobenius.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dfrob {

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based; 0 means end of input.
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

enum class SystemForm { Canonical, Standard };

const char *to_string(SystemForm f);

/// `rows cols` followed by `rows` lines of `cols` integers. Blank lines and
/// lines starting with '#' are ignored.
IntMatrix read_matrix(std::istream &in);
IntMatrix parse_matrix(const std::string &text);
std::string format_matrix(const IntMatrix &m);

struct SystemText {
  SystemForm form = SystemForm::Canonical;
  /// False when the file had no `canonical`/`standard` header line.
  bool form_given = false;
  IntMatrix A;
  IntVector b;
};

/// Optional form header, a matrix in the format above, then one line with
/// the right-hand side.
SystemText read_system(std::istream &in);
SystemText parse_system(const std::string &text);
std::string format_system(SystemForm form, const IntMatrix &A, const IntVector &b);

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// Flat `key value` lines in a fixed order. The first line is
/// `dfrob-certificate 1`.
std::string format_certificate(const CanonicalSystem &sys, const SolveResult &r);
std::string format_certificate(const StandardSystem &sys,
                               const StandardSolveResult &r);

struct CertificateText {
  SystemForm form = SystemForm::Canonical;
  std::string status;
  IntMatrix A;
  IntVector b;
  std::optional<IntVector> z;
  bool verified = false;
  /// Every line in file order, including the ones decoded above.
  std::vector<std::pair<std::string, std::string>> fields;

  const std::string *find(const std::string &key) const;
};

CertificateText read_certificate(std::istream &in);
CertificateText parse_certificate(const std::string &text);

/// Checks z against the system recorded in the certificate without trusting
/// any other field.
bool recheck(const CertificateText &c);

/// `b,slack,feasible,witness` rows sorted by b, then `#` summary lines.
std::string format_oracle_csv(const OracleReport &r);

} // namespace dfrob
