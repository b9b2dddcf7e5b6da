#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sclab/bounds.hpp"
#include "sclab/config.hpp"
#include "sclab/quantum.hpp"

namespace sclab {

/// One (hbar, eps, t) cell of a sweep: measured quantities, bound values,
/// and pass/fail flags. `guard_flags` is "ok" or the guard code that aborted
/// the cell (in which case the numeric fields are zero).
struct BoundReport {
  std::string scenario;
  double hbar = 0.0, eps = 0.0, t = 0.0;
  double delta_meas = 0.0;   // dictionary lower estimate of delta
  double d_lower = 0.0;      // dictionary estimate of d
  double trace_dist = 0.0;
  double w2 = 0.0;           // W2(Husimi[psi_eps(T)], flow-pushforward samples)
  double delta_in = 0.0;
  double e0 = 0.0, e_eps = 0.0;
  double lambda_rate = 0.0;
  double gamma_t = 0.0, c_t = 0.0, d_t = 0.0, e_t = 0.0;
  double rhs_thm1 = 0.0, rhs_duhamel = 0.0, rhs_cor2 = 0.0;
  bool pass_thm1 = false, pass_duhamel = false, pass_cor2 = false;
  std::string guard_flags = "ok";
};

/// CSV contract: header and shortest-round-trip float formatting.
std::string csv_header();
std::string csv_row(const BoundReport& r);
void write_csv(const std::vector<BoundReport>& rows, const std::string& path);

struct SweepOptions {
  int workers = 1;
  bool with_w2 = true;  // the OT column is the most expensive part
};

/// Propagates the unperturbed and perturbed states from the same initial
/// data for every (hbar, eps, T) cell and fills a BoundReport per cell,
/// ordered by (hbar, eps, t). Deterministic given config + seed.
std::vector<BoundReport> run_sweep(const ScenarioConfig& cfg,
                                   const SweepOptions& opt = {});

/// Initial state described by the config on the given grid.
WaveFunction initial_state(const ScenarioConfig& cfg, const SpatialGrid& g,
                           double hbar);

HamiltonianSpec hamiltonian_from_config(const ScenarioConfig& cfg, double eps);

}  // namespace sclab
