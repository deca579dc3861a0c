/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dfrob Authors
 */
#include "dfrob/io.hpp"
#include "dfrob/linalg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace dfrob;

namespace {

enum Exit { kOk = 0, kError = 1, kNegative = 2 };

struct RunConfig {
  std::string input;
  std::string form;
  std::string mode = "maxdet";
  std::string format = "text";
  std::string base;
  std::uint64_t seed = 0;
  std::size_t exhaustive_cap = 24;
  std::size_t sweep_cap = 20;
  std::uint64_t minor_cap = kDefaultMinorCap;
  std::uint64_t max_rhs = 100000;
};

std::string slurp(const std::string &path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<long> parse_list(const std::string &s) {
  std::vector<long> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ','))
    if (!tok.empty())
      out.push_back(std::stol(tok));
  return out;
}

SystemForm pick_form(const SystemText &t, const std::string &flag) {
  if (flag.empty())
    return t.form;
  if (flag == "canonical")
    return SystemForm::Canonical;
  if (flag == "standard")
    return SystemForm::Standard;
  throw Error(ErrorCode::Parse, "unknown form '" + flag + "'");
}

SolveOptions solve_options(const RunConfig &cfg) {
  SolveOptions o;
  o.mode = parse_solve_mode(cfg.mode);
  o.rounding.seed = cfg.seed;
  o.rounding.exhaustive_cap = cfg.exhaustive_cap;
  o.search.sweep_cap = cfg.sweep_cap;
  o.search.maxdet_cap = cfg.minor_cap;
  if (!cfg.base.empty()) {
    IndexSet b;
    for (long v : parse_list(cfg.base)) {
      if (v < 0)
        throw Error(ErrorCode::Parse, "negative base index");
      b.push_back(static_cast<std::size_t>(v));
    }
    o.base = b;
  }
  return o;
}

std::string vec(const IntVector &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? " " : "") + v[i].get_str();
  return s;
}

int exit_for(SolveStatus s) {
  switch (s) {
  case SolveStatus::Verified:
    return kOk;
  case SolveStatus::NoSlackPoint:
  case SolveStatus::Infeasible:
    return kNegative;
  case SolveStatus::PipelineFailed:
    break;
  }
  return kError;
}

int cmd_forms(const RunConfig &cfg, bool snf_flag) {
  IntMatrix m = parse_matrix(slurp(cfg.input));
  if (snf_flag) {
    SmithForm f = snf(m);
    std::cout << "S\n" << f.S << "P\n" << f.P << "Q\n" << f.Q;
    bool ok = f.P * m * f.Q == f.S;
    std::cout << "reconstruction " << (ok ? "ok" : "FAILED") << '\n';
    return ok ? kOk : kError;
  }
  HermiteForm f = hnf(m);
  std::cout << "H\n" << f.H << "Q\n" << f.Q;
  bool ok = f.H * f.Q == m && m * f.Q_inv == f.H;
  std::cout << "reconstruction " << (ok ? "ok" : "FAILED") << '\n';
  return ok ? kOk : kError;
}

int cmd_solve(const RunConfig &cfg) {
  SystemText t = parse_system(slurp(cfg.input));
  SolveOptions opts = solve_options(cfg);
  const bool structured = cfg.format == "structured";
  if (pick_form(t, cfg.form) == SystemForm::Canonical) {
    CanonicalSystem sys(t.A, t.b, cfg.minor_cap);
    SolveResult r = solve_canonical_with_slack(sys, opts);
    if (structured) {
      std::cout << format_certificate(sys, r);
    } else {
      std::cout << "status " << to_string(r.status) << '\n'
                << r.message << '\n'
                << "available slack " << r.available << ", required "
                << r.required << '\n';
      if (r.certificate) {
        const auto &c = *r.certificate;
        std::cout << "base " << c.base.base.indices.size() << " rows, delta_B "
                  << c.base.base.det_abs << ", delta " << c.delta
                  << (c.delta_certified ? "" : " (Hadamard bound)") << '\n'
                  << "rounding error " << c.rounding.achieved << " ("
                  << to_string(c.rounding.method) << ")\n";
        if (c.verified)
          std::cout << "z " << vec(c.z) << '\n';
      }
    }
    return exit_for(r.status);
  }
  StandardSystem sys(t.A, t.b, cfg.minor_cap);
  if (opts.base) {
    // A base on the standard side names columns; the canonical run wants the
    // complementary rows.
    IndexSet rows;
    for (std::size_t j = 0; j < sys.cols(); ++j)
      if (std::find(opts.base->begin(), opts.base->end(), j) == opts.base->end())
        rows.push_back(j);
    opts.base = rows;
  }
  StandardSolveResult r = solve_standard_with_slack(sys, opts);
  if (structured) {
    std::cout << format_certificate(sys, r);
  } else {
    std::cout << "status " << to_string(r.status) << '\n'
              << r.message << '\n'
              << "available slack " << r.available << ", required " << r.required
              << '\n';
    if (r.verified)
      std::cout << "z " << vec(r.z) << '\n';
  }
  return exit_for(r.status);
}

int cmd_check(const RunConfig &cfg) {
  CertificateText c = parse_certificate(slurp(cfg.input));
  const bool again = recheck(c);
  std::cout << "claimed " << (c.verified ? "verified" : "unverified")
            << ", recheck " << (again ? "verified" : "unverified") << '\n';
  if (c.verified && !again)
    return kError;
  return again ? kOk : kNegative;
}

int cmd_oracle(const RunConfig &cfg, const std::string &gen_tight, long radius,
               const std::string &lo, const std::string &hi) {
  IntMatrix A;
  IntVector b;
  SystemForm form = SystemForm::Canonical;
  if (!gen_tight.empty()) {
    long p = 0, n = 1;
    std::istringstream is(gen_tight);
    std::string kv;
    while (std::getline(is, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorCode::Parse, "expected key=value in --gen-tight");
      const std::string k = kv.substr(0, eq);
      const long v = std::stol(kv.substr(eq + 1));
      if (k == "p")
        p = v;
      else if (k == "n")
        n = v;
      else
        throw Error(ErrorCode::Parse, "unknown --gen-tight key '" + k + "'");
    }
    if (p < 2 || n < 1)
      throw Error(ErrorCode::Precondition, "--gen-tight needs p >= 2, n >= 1");
    CanonicalSystem sys = gen_tight_instance(p, static_cast<std::size_t>(n));
    A = sys.matrix();
    b = sys.rhs();
  } else {
    SystemText t = parse_system(slurp(cfg.input));
    form = pick_form(t, cfg.form);
    A = t.A;
    b = t.b;
  }
  IntVector box_lo = b, box_hi = b;
  if (!lo.empty() || !hi.empty()) {
    auto l = parse_list(lo), h = parse_list(hi);
    if (l.size() != b.size() || h.size() != b.size())
      throw Error(ErrorCode::Dimension, "--lo/--hi need one value per row");
    for (std::size_t i = 0; i < b.size(); ++i) {
      box_lo[i] = l[i];
      box_hi[i] = h[i];
    }
  } else {
    for (std::size_t i = 0; i < b.size(); ++i) {
      box_lo[i] -= radius;
      box_hi[i] += radius;
    }
  }
  OracleReport rep = form == SystemForm::Canonical
                         ? oracle_slackfrob_box(A, box_lo, box_hi, cfg.max_rhs)
                         : oracle_diagfrob_box(A, box_lo, box_hi, cfg.max_rhs);
  std::cout << format_oracle_csv(rep);
  return kOk;
}

int cmd_gen(long tight_p, std::size_t dim, bool random, std::size_t extra,
            long range, long inflate, const std::string &form, std::uint64_t seed) {
  if (tight_p > 0) {
    CanonicalSystem sys = gen_tight_instance(tight_p, dim);
    std::cout << "# tight instance p=" << tight_p << " n=" << dim << '\n'
              << format_system(SystemForm::Canonical, sys.matrix(), sys.rhs());
    return kOk;
  }
  if (!random)
    throw Error(ErrorCode::Precondition, "gen needs --tight or --random");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-range, range);
  if (form == "standard") {
    // A x0 = b for a nonnegative x0, so the instance is feasible over R.
    for (;;) {
      IntMatrix A(extra, dim);
      for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
          A(i, j) = entry(rng);
      if (extra == 0 || rank(A) != extra)
        continue;
      std::uniform_int_distribution<long> pos(0, range);
      IntVector x(dim);
      for (auto &v : x)
        v = pos(rng) + inflate;
      std::cout << format_system(SystemForm::Standard, A, A * x);
      return kOk;
    }
  }
  for (;;) {
    IntMatrix A(dim + extra, dim);
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j)
        A(i, j) = entry(rng);
    if (dim == 0 || rank(A) != dim)
      continue;
    IntVector x(dim);
    for (auto &v : x)
      v = entry(rng);
    IntVector b = A * x;
    for (auto &v : b)
      v += inflate;
    std::cout << format_system(SystemForm::Canonical, A, b);
    return kOk;
  }
}

int cmd_bound(const RunConfig &cfg) {
  const std::string text = slurp(cfg.input);
  IntMatrix A;
  SystemForm form = SystemForm::Canonical;
  try {
    SystemText t = parse_system(text);
    A = t.A;
    form = pick_form(t, cfg.form);
  } catch (const ParseError &) {
    A = parse_matrix(text);
    form = pick_form(SystemText{}, cfg.form);
  }
  const DeltaStats st = delta_stats(A, std::nullopt, cfg.minor_cap);
  std::cout << "rank " << st.rank << '\n';
  for (std::size_t j = 0; j < st.delta_j.size(); ++j)
    std::cout << "delta_" << j + 1 << ' ' << st.delta_j[j] << "  gcd "
              << st.gcd_j[j] << '\n';
  const Integer delta = st.delta();
  std::cout << "delta " << delta << '\n'
            << "delta_gcd " << st.delta_gcd() << '\n'
            << "detlb ~" << st.detlb.approx() << " (order " << st.detlb.order
            << ")\n"
            << "corner threshold delta-1 = " << delta - 1 << '\n';

  SolveOptions opts = solve_options(cfg);
  const BaseOrientation o =
      form == SystemForm::Canonical ? BaseOrientation::Rows : BaseOrientation::Columns;
  BaseSearchReport rep;
  switch (opts.mode) {
  case SolveMode::MaxdetGiven:
    rep = maxdet_base(A, o, opts.search);
    break;
  case SolveMode::Poly:
    rep = poly_subdet_search(A, o, opts.search);
    break;
  case SolveMode::ExpSweep:
    rep = o == BaseOrientation::Rows ? exp_subdet_search_dual(A, opts.search)
                                     : exp_subdet_search(A, opts.search);
    break;
  }
  std::cout << "base " << vec([&] {
    IntVector v;
    for (auto i : rep.base.indices)
      v.push_back(i);
    return v;
  }()) << "  delta_B " << rep.base.det_abs << "  ("
            << to_string(rep.guarantee) << ")\n";
  const DiscBound db = disc_bound(rep.base.M, cfg.minor_cap);
  std::cout << "rounding envelope " << db.numeric_envelope << '\n'
            << "slack sufficient for the pipeline " << Rational(delta - 1) + db.numeric_envelope
            << '\n'
            << "bound " << db.describe() << '\n';
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact integer feasibility certificates for systems with "
               "bounded subdeterminants"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App *sub, bool needs_input) {
    auto *opt = sub->add_option("input", cfg.input, "input file ('-' for stdin)");
    if (needs_input)
      opt->required();
    sub->add_option("--minor-cap", cfg.minor_cap, "minor enumeration cap")
        ->check(CLI::PositiveNumber);
  };

  bool use_snf = false, use_hnf = false;
  auto *forms = app.add_subcommand("forms", "Hermite or Smith normal form");
  common(forms, true);
  forms->add_flag("--hnf", use_hnf, "Hermite normal form (default)");
  forms->add_flag("--snf", use_snf, "Smith normal form");

  auto solve_flags = [&](CLI::App *sub) {
    sub->add_option("--form", cfg.form, "canonical or standard (overrides the header)")
        ->check(CLI::IsMember({"canonical", "standard"}));
    sub->add_option("--mode", cfg.mode, "maxdet, poly or exp")
        ->check(CLI::IsMember({"maxdet", "poly", "exp"}));
    sub->add_option("--seed", cfg.seed, "rounding seed");
    sub->add_option("--exhaustive-cap", cfg.exhaustive_cap,
                    "largest support rounded exhaustively")
        ->check(CLI::PositiveNumber);
    sub->add_option("--sweep-cap", cfg.sweep_cap, "subset sweep cap for --mode exp")
        ->check(CLI::PositiveNumber);
    sub->add_option("--base", cfg.base, "comma-separated base indices");
  };

  auto *solve = app.add_subcommand("solve", "run the slack pipeline and print a certificate");
  common(solve, true);
  solve_flags(solve);
  solve->add_option("--format", cfg.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string gen_tight, lo, hi;
  long radius = 0;
  auto *oracle = app.add_subcommand("oracle", "scan right-hand sides in a box");
  common(oracle, false);
  oracle->add_option("--form", cfg.form, "canonical or standard")
      ->check(CLI::IsMember({"canonical", "standard"}));
  oracle->add_option("--gen-tight", gen_tight, "use the tight instance, e.g. p=4,n=2");
  oracle->add_option("--box", radius, "scan b +- R on every row")->check(CLI::NonNegativeNumber);
  oracle->add_option("--lo", lo, "comma-separated lower corner of the box");
  oracle->add_option("--hi", hi, "comma-separated upper corner of the box");
  oracle->add_option("--max-rhs", cfg.max_rhs, "largest number of b vectors")
      ->check(CLI::PositiveNumber);

  long tight_p = 0;
  std::size_t dim = 1, extra = 1;
  long range = 9, inflate = 0;
  bool random = false;
  std::string gen_form = "canonical";
  auto *gen = app.add_subcommand("gen", "print an instance");
  gen->add_option("--tight", tight_p, "tight instance with parameter p")
      ->check(CLI::Range(2L, 1000000L));
  gen->add_flag("--random", random, "random instance with a real solution");
  gen->add_option("--dim", dim, "number of variables")->check(CLI::PositiveNumber);
  gen->add_option("--extra", extra, "extra rows (canonical) or rows (standard)");
  gen->add_option("--range", range, "entries in [-range, range]")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--inflate", inflate, "added to every b_i (canonical) or x_i (standard)");
  gen->add_option("--form", gen_form, "canonical or standard")
      ->check(CLI::IsMember({"canonical", "standard"}));
  gen->add_option("--seed", cfg.seed, "random seed");

  auto *bound = app.add_subcommand("bound", "subdeterminants, base and rounding bounds");
  common(bound, true);
  solve_flags(bound);

  auto *check = app.add_subcommand("check", "re-verify a structured certificate");
  check->add_option("input", cfg.input, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kError;
  }

  try {
    if (forms->parsed())
      return cmd_forms(cfg, use_snf && !use_hnf);
    if (solve->parsed())
      return cmd_solve(cfg);
    if (oracle->parsed()) {
      if (gen_tight.empty() && cfg.input.empty())
        throw Error(ErrorCode::Precondition, "oracle needs an input file or --gen-tight");
      return cmd_oracle(cfg, gen_tight, radius, lo, hi);
    }
    if (gen->parsed())
      return cmd_gen(tight_p, dim, random, extra, range, inflate, gen_form, cfg.seed);
    if (bound->parsed())
      return cmd_bound(cfg);
    if (check->parsed())
      return cmd_check(cfg);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
