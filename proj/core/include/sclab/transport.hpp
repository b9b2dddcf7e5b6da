#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sclab/classical.hpp"

namespace sclab {

/// Weighted point cloud in phase space R^2 (d = 1); weights sum to 1.
struct DiscreteMeasure {
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;

  void validate() const;
  static DiscreteMeasure from_ensemble(const Ensemble& e);
};

double quadratic_cost(const std::array<double, 2>& a, const std::array<double, 2>& b);

struct ExactOtResult {
  double w2 = 0.0;        // sqrt of optimal cost
  double cost = 0.0;      // optimal transport cost
  long iterations = 0;
};

/// Exact discrete optimal transport with quadratic cost via the
/// transportation simplex (network-simplex-class). Support <= 400 each.
ExactOtResult w2_exact(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

struct SinkhornResult {
  double w2 = 0.0;          // sqrt of the rounded-plan cost
  double cost = 0.0;        // cost of the rounded feasible plan (>= optimum)
  double reg = 0.0;         // final regularization used
  long iterations = 0;
  double marginal_error = 0.0;
  bool converged = false;
};

/// Log-domain Sinkhorn with epsilon-scaling; the returned cost is evaluated
/// on a feasible rounding of the entropic plan so the bias is one-sided.
/// Support <= 20000; throws on non-convergence.
SinkhornResult w2_sinkhorn(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                           double reg, long max_iters);

/// MK self-distance upper bounds: sqrt(2)*Delta(psi), and the Toeplitz-data
/// alternative sqrt(2 d hbar).
double mk_self_upper_from_delta(double delta_psi);
double mk_self_upper_toeplitz(int d, double hbar);

/// Coherent-pair bound sqrt(|z1-z2|^2 + 2 d hbar).
double mk_coherent_upper(const std::vector<double>& z1, const std::vector<double>& z2,
                         double hbar, int d);

}  // namespace sclab
