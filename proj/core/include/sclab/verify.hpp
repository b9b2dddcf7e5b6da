#pragma once

#include <string>
#include <vector>

#include "sclab/config.hpp"
#include "sclab/sweep.hpp"

namespace sclab {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string title;
  std::vector<CheckLine> checks;
  std::vector<BoundReport> rows;

  bool all_pass() const;
  bool any_guard() const;
  std::string text() const;
};

/// Least-squares slope of y against x (and of log y vs log x if log = true;
/// nonpositive values are skipped in log mode).
double fit_slope(const std::vector<double>& x, const std::vector<double>& y,
                 bool log_log);

struct DriverOptions {
  int workers = 1;
  std::string out_dir;  // if nonempty, CSV + SVG artifacts are written here
};

/// Sweep + per-cell inequality flags + eps-scaling fit + log-log figures.
VerifyReport verify_theorem1(const ScenarioConfig& cfg, const DriverOptions& opt);

/// Interpolated eps^{1/3} envelope: per-cell min-form check (both constant
/// readings reported) and the regime-split check, with crossover figures.
VerifyReport verify_corollary2(const ScenarioConfig& cfg, const DriverOptions& opt);

/// Coherent-pair sandwich: upper chain every cell, linear lower-fit slope.
VerifyReport verify_coherent_distance(const ScenarioConfig& cfg,
                                      const DriverOptions& opt,
                                      std::vector<double> separations = {},
                                      std::vector<double> hbars = {});

/// Classical-limit surrogate: Gronwall bound on W2^2 with a seed-resampling
/// tolerance, plus monotonicity of W2 in hbar.
VerifyReport verify_classical_limit(const ScenarioConfig& cfg,
                                    const DriverOptions& opt);

/// Fast-path vs oracle pairing suite (transforms, propagators, OT solvers).
VerifyReport selftest_oracles(const DriverOptions& opt);

}  // namespace sclab
