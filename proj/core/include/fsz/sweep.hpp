#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fsz/oracle.hpp"

namespace fsz {

/// Invalid sweep configuration; the message is path-addressed
/// (e.g. "$.targets[2].k: must be >= 0").
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputSpec {
  std::string format = "csv";  // "csv" or "json"
  std::string path;            // empty: write the report to stdout
};

struct SweepConfig {
  std::vector<MindaTarget> targets;
  std::vector<double> lambdas;
  std::vector<cplx> gammas;
  std::vector<cplx> mus;
  std::vector<Theorem> theorems;
  OracleConfig oracle;
  OutputSpec output;
};

/// Parse and validate a sweep config document (a single JSON object).
/// The document is rejected wholesale on the first violation.
SweepConfig parse_sweep_config(const std::string& json_text);
SweepConfig parse_sweep_config_file(const std::string& path);

/// Run the sweep in document order (targets x lambdas x gammas x mus x
/// theorems), skipping combinations whose theorem is inapplicable. The
/// oracle result is computed once per (target, lambda, gamma, mu) and
/// shared across theorems. `negate_bound` is a test fixture that corrupts
/// every bound's sign to exercise the unsound-report path.
std::vector<VerificationRecord> run_sweep(const SweepConfig& config,
                                          bool negate_bound = false);

struct SweepSummary {
  std::size_t rows = 0;
  std::size_t sound = 0;
  std::size_t unsound = 0;
  double min_slack = 0.0;
};
SweepSummary summarize(const std::vector<VerificationRecord>& records);

struct MuSweepRow {
  double mu = 0.0;
  BoundReport bound;
  OracleResult oracle;
  bool branch_change = false;
};

/// Tabulate bound and oracle over mu in [mu_min, mu_max] with the given
/// step (rows ascending; a degenerate range yields the single row mu_min).
/// Throws std::domain_error for step <= 0, mu_min > mu_max, or an
/// inapplicable theorem.
std::vector<MuSweepRow> run_mu_sweep(const MindaTarget& target,
                                     const ClassParams& params,
                                     Theorem theorem, double mu_min,
                                     double mu_max, double step,
                                     const OracleConfig& oracle_config);

}  // namespace fsz
