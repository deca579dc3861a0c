/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace dfrob {

const char *to_string(SystemForm f) {
  return f == SystemForm::Canonical ? "canonical" : "standard";
}

namespace {

/// Line reader that skips blanks and comments and remembers where it is.
class Lines {
public:
  explicit Lines(std::istream &in) : in_(in) {}

  bool next(std::string &out) {
    std::string s;
    while (std::getline(in_, s)) {
      ++line_;
      if (!s.empty() && s.back() == '\r')
        s.pop_back();
      std::size_t p = s.find_first_not_of(" \t");
      if (p == std::string::npos || s[p] == '#')
        continue;
      out = s;
      return true;
    }
    line_ = 0;
    return false;
  }

  std::string require(const char *what) {
    std::string s;
    if (!next(s))
      throw ParseError(0, std::string("unexpected end of input, expected ") + what);
    return s;
  }

  std::size_t line() const { return line_; }

private:
  std::istream &in_;
  std::size_t line_ = 0;
};

std::vector<std::string> split(const std::string &s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok)
    out.push_back(tok);
  return out;
}

Integer parse_integer(const std::string &tok, std::size_t line) {
  std::size_t i = (tok.size() > 1 && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
  if (i == tok.size())
    throw ParseError(line, "bad integer '" + tok + "'");
  for (std::size_t j = i; j < tok.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(tok[j])))
      throw ParseError(line, "bad integer '" + tok + "'");
  return Integer(tok[0] == '+' ? tok.substr(1) : tok, 10);
}

std::size_t parse_size(const std::string &tok, std::size_t line) {
  Integer v = parse_integer(tok, line);
  if (v < 0 || v > 100000)
    throw ParseError(line, "dimension out of range: " + tok);
  return v.get_ui();
}

IntVector parse_row(const std::string &s, std::size_t expected, std::size_t line) {
  auto toks = split(s);
  if (toks.size() != expected)
    throw ParseError(line, "expected " + std::to_string(expected) + " entries, found " +
                               std::to_string(toks.size()));
  IntVector v(expected);
  for (std::size_t j = 0; j < expected; ++j)
    v[j] = parse_integer(toks[j], line);
  return v;
}

IntMatrix read_matrix_body(Lines &lines, const std::string &header) {
  auto dims = split(header);
  if (dims.size() != 2)
    throw ParseError(lines.line(), "expected 'rows cols'");
  std::size_t r = parse_size(dims[0], lines.line());
  std::size_t c = parse_size(dims[1], lines.line());
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    std::string s = lines.require("matrix row");
    IntVector row = parse_row(s, c, lines.line());
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = row[j];
  }
  return m;
}

template <class V> std::string join(const V &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ' ';
    if constexpr (std::is_same_v<typename V::value_type, std::size_t>)
      out += std::to_string(v[i]);
    else
      out += to_string(v[i]);
  }
  return out;
}

const char *flag(bool b) { return b ? "true" : "false"; }

class Record {
public:
  void add(const std::string &key, const std::string &value) {
    std::string v = value;
    for (char &ch : v)
      if (ch == '\n' || ch == '\r')
        ch = ' ';
    out_ << key;
    if (!v.empty())
      out_ << ' ' << v;
    out_ << '\n';
  }

  void add_system(const IntMatrix &A, const IntVector &b) {
    add("matrix", std::to_string(A.rows()) + " " + std::to_string(A.cols()));
    for (std::size_t i = 0; i < A.rows(); ++i)
      add("row", join(A.row(i)));
    add("rhs", join(b));
  }

  std::string str() const { return out_.str(); }

private:
  std::ostringstream out_;
};

void add_canonical_trail(Record &rec, const FeasibilityCertificate &c) {
  rec.add("mode", to_string(c.mode));
  rec.add("delta", to_string(c.delta));
  rec.add("delta_certified", flag(c.delta_certified));
  rec.add("base", join(c.base.base.indices));
  rec.add("delta_B", to_string(c.base.base.det_abs));
  rec.add("guarantee", to_string(c.base.guarantee));
  rec.add("swaps", std::to_string(c.base.swaps.size()));
  rec.add("slack_point", join(c.slack_input.x));
  rec.add("min_slack", to_string(c.slack_input.min_slack));
  rec.add("rounding_method", to_string(c.rounding.method));
  rec.add("rounding_certified", flag(c.rounding.certified));
  rec.add("rounding", join(c.rounding.z));
  rec.add("achieved", to_string(c.rounding.achieved));
  rec.add("bound", c.bound.describe());
  rec.add("threshold_t", to_string(c.threshold_t));
  rec.add("b_hat", join(c.b_hat));
  rec.add("precondition_met", flag(c.gomory.precondition_met));
  rec.add("y", join(c.gomory.slack_B));
}

} // namespace

IntMatrix read_matrix(std::istream &in) {
  Lines lines(in);
  IntMatrix m = read_matrix_body(lines, lines.require("'rows cols'"));
  std::string extra;
  if (lines.next(extra))
    throw ParseError(lines.line(), "trailing data after matrix");
  return m;
}

IntMatrix parse_matrix(const std::string &text) {
  std::istringstream is(text);
  return read_matrix(is);
}

std::string format_matrix(const IntMatrix &m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << '\n' << m;
  return os.str();
}

SystemText read_system(std::istream &in) {
  Lines lines(in);
  SystemText out;
  std::string s = lines.require("system header");
  auto toks = split(s);
  if (toks.size() == 1 && (toks[0] == "canonical" || toks[0] == "standard")) {
    out.form = toks[0] == "canonical" ? SystemForm::Canonical : SystemForm::Standard;
    out.form_given = true;
    s = lines.require("'rows cols'");
  }
  out.A = read_matrix_body(lines, s);
  s = lines.require("right-hand side");
  out.b = parse_row(s, out.A.rows(), lines.line());
  std::string extra;
  if (lines.next(extra))
    throw ParseError(lines.line(), "trailing data after right-hand side");
  return out;
}

SystemText parse_system(const std::string &text) {
  std::istringstream is(text);
  return read_system(is);
}

std::string format_system(SystemForm form, const IntMatrix &A, const IntVector &b) {
  return std::string(to_string(form)) + "\n" + format_matrix(A) + join(b) + "\n";
}

std::string format_certificate(const CanonicalSystem &sys, const SolveResult &r) {
  Record rec;
  rec.add("dfrob-certificate", "1");
  rec.add("form", "canonical");
  rec.add("status", to_string(r.status));
  rec.add("message", r.message);
  rec.add_system(sys.matrix(), sys.rhs());
  rec.add("required", to_string(r.required));
  rec.add("available", to_string(r.available));
  bool verified = false;
  if (r.certificate) {
    const auto &c = *r.certificate;
    add_canonical_trail(rec, c);
    rec.add("z", join(c.z));
    rec.add("slacks", join(sys.slacks(c.z)));
    verified = c.verified;
  }
  rec.add("verified", flag(verified));
  return rec.str();
}

std::string format_certificate(const StandardSystem &sys,
                               const StandardSolveResult &r) {
  Record rec;
  rec.add("dfrob-certificate", "1");
  rec.add("form", "standard");
  rec.add("status", to_string(r.status));
  rec.add("message", r.message);
  rec.add_system(sys.matrix(), sys.rhs());
  rec.add("required", to_string(r.required));
  rec.add("available", to_string(r.available));
  if (r.canonical && r.canonical->certificate) {
    const auto &c = *r.canonical->certificate;
    // Canonical rows are the standard variables; the standard base is the
    // complement of the canonical base.
    IndexSet std_base;
    for (std::size_t j = 0, p = 0; j < sys.cols(); ++j) {
      const auto &rows = c.base.base.indices;
      if (p < rows.size() && rows[p] == j)
        ++p;
      else
        std_base.push_back(j);
    }
    rec.add("trail", "canonical reduction");
    add_canonical_trail(rec, c);
    rec.add("standard_base", join(std_base));
  }
  if (!r.z.empty() || r.status == SolveStatus::Verified) {
    rec.add("z", join(r.z));
    rec.add("slacks", join(r.z));
  }
  rec.add("verified", flag(r.verified));
  return rec.str();
}

const std::string *CertificateText::find(const std::string &key) const {
  for (const auto &[k, v] : fields)
    if (k == key)
      return &v;
  return nullptr;
}

CertificateText read_certificate(std::istream &in) {
  Lines lines(in);
  CertificateText out;
  std::string s;
  bool have_header = false, have_system = false, have_verified = false;
  while (lines.next(s)) {
    std::size_t ln = lines.line();
    std::size_t p = s.find_first_not_of(" \t");
    std::size_t e = s.find_first_of(" \t", p);
    std::string key = s.substr(p, e == std::string::npos ? std::string::npos : e - p);
    std::string value;
    if (e != std::string::npos) {
      std::size_t v = s.find_first_not_of(" \t", e);
      if (v != std::string::npos)
        value = s.substr(v);
    }
    if (!have_header) {
      if (key != "dfrob-certificate" || value != "1")
        throw ParseError(ln, "expected 'dfrob-certificate 1'");
      have_header = true;
    } else if (key == "form") {
      if (value == "canonical")
        out.form = SystemForm::Canonical;
      else if (value == "standard")
        out.form = SystemForm::Standard;
      else
        throw ParseError(ln, "unknown form '" + value + "'");
    } else if (key == "status") {
      out.status = value;
    } else if (key == "matrix") {
      auto dims = split(value);
      if (dims.size() != 2)
        throw ParseError(ln, "expected 'matrix rows cols'");
      std::size_t r = parse_size(dims[0], ln), c = parse_size(dims[1], ln);
      out.A = IntMatrix(r, c);
      out.fields.emplace_back(key, value);
      for (std::size_t i = 0; i < r; ++i) {
        std::string rs = lines.require("row");
        auto toks = split(rs);
        if (toks.empty() || toks[0] != "row")
          throw ParseError(lines.line(), "expected 'row'");
        rs = rs.substr(rs.find("row") + 3);
        IntVector v = parse_row(rs, c, lines.line());
        for (std::size_t j = 0; j < c; ++j)
          out.A(i, j) = v[j];
        out.fields.emplace_back("row", join(v));
      }
      have_system = true;
      continue;
    } else if (key == "rhs") {
      if (!have_system)
        throw ParseError(ln, "rhs before matrix");
      out.b = parse_row(value, out.A.rows(), ln);
    } else if (key == "z") {
      if (!have_system)
        throw ParseError(ln, "z before matrix");
      out.z = parse_row(value, out.A.cols(), ln);
    } else if (key == "verified") {
      if (value != "true" && value != "false")
        throw ParseError(ln, "verified must be true or false");
      out.verified = value == "true";
      have_verified = true;
    }
    out.fields.emplace_back(key, value);
  }
  if (!have_header)
    throw ParseError(0, "empty certificate");
  if (!have_system)
    throw ParseError(0, "certificate has no system");
  if (!have_verified)
    throw ParseError(0, "certificate has no verified line");
  return out;
}

CertificateText parse_certificate(const std::string &text) {
  std::istringstream is(text);
  return read_certificate(is);
}

bool recheck(const CertificateText &c) {
  if (!c.z || c.z->size() != c.A.cols() || c.b.size() != c.A.rows())
    return false;
  const IntVector &z = *c.z;
  IntVector s(c.A.rows());
  for (std::size_t i = 0; i < c.A.rows(); ++i) {
    Integer v = 0;
    for (std::size_t j = 0; j < c.A.cols(); ++j)
      v += c.A(i, j) * z[j];
    s[i] = c.b[i] - v;
  }
  if (c.form == SystemForm::Canonical) {
    for (const auto &v : s)
      if (v < 0)
        return false;
    if (const auto *rec = c.find("slacks"); rec && *rec != join(s))
      return false;
  } else {
    for (const auto &v : s)
      if (v != 0)
        return false;
    for (const auto &v : z)
      if (v < 0)
        return false;
  }
  return true;
}

std::string format_oracle_csv(const OracleReport &r) {
  std::ostringstream os;
  os << "b,slack,feasible,witness\n";
  for (const auto &row : r.rows) {
    os << join(row.b) << ',';
    if (row.unbounded)
      os << "inf";
    else if (row.slack)
      os << to_string(*row.slack);
    else
      os << "none";
    os << ',' << flag(row.feasible) << ',';
    if (row.witness)
      os << join(*row.witness);
    os << '\n';
  }
  os << "# box " << join(r.box_lo) << " .. " << join(r.box_hi) << '\n';
  os << "# scanned " << r.rows.size() << '\n';
  os << "# empirical_threshold " << r.empirical_threshold
     << " (box-restricted lower bound)\n";
  for (const auto &w : r.witnesses)
    os << "# witness b=" << join(w.b) << " slack=" << to_string(w.slack)
       << " point=" << join(w.point) << " proof=" << w.proof << '\n';
  return os.str();
}

} // namespace dfrob
