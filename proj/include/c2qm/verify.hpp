#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c2qm/numerics.hpp"

namespace c2qm {

/// Options for the full identity suite. Every tolerance the suite applies is
/// here (and reachable from the CLI).
struct VerifyOptions {
  int kappa_max = 4;
  std::optional<int> delta;  // restrict the grid to one delta; default -kappa..kappa
  std::uint64_t seed = 42;
  double tol_sym = 1e-9;     // randomized symbolic-identity oracle
  double tol_fd = 1e-5;      // finite-difference agreement
  double tol_curl = 1e-4;    // FD curl vs closed-form field
  double flux_rtol = 1e-3;   // sphere flux vs -2 pi kappa
  double norm_sigmas = 3.0;  // Monte-Carlo agreement band in standard errors
  std::int64_t mc_samples = 100000;
  int oracle_points = 25;
  int fd_states = 20;     // random restricted states for the FD records
  int fd_points = 3;      // evaluation points per state
  int curl_points = 100;  // FD-curl sample points per sector
  int aphi_points = 100;  // closed-form comparison points per sector
  double fd_step = 1e-5;
  double fd_step_second = 3e-4;

  QuadratureConfig quad() const;
};

struct VerifyRecord {
  std::string name;
  std::string eq;  // the identity in ASCII
  int kappa = 0;
  int delta = 0;
  double max_dev = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerifyReport {
  bool pass = false;
  std::uint64_t seed = 0;
  std::vector<VerifyRecord> records;  // sorted by (name, kappa, delta)
  double elapsed_seconds = 0.0;       // not serialized (reports stay byte-stable)
};

/// Runs the whole identity suite over the sector grid kappa = 0..kappa_max,
/// delta = -kappa..kappa (or the single delta from the options). Every random
/// draw derives from `seed`, so the report is a pure function of the options.
VerifyReport run_verification(const VerifyOptions& opts);

/// Canonical JSON {"verdict", "seed", "records": [...]}, byte-identical for
/// identical options.
std::string report_to_json(const VerifyReport& report);

/// Human-readable table, including timing.
std::string report_to_text(const VerifyReport& report);

}  // namespace c2qm
