#pragma once

#include <cstdint>
#include <vector>

#include "sclab/potential.hpp"

namespace sclab {

struct PhasePoint {
  std::vector<double> q;
  std::vector<double> p;
};

/// Weighted point cloud on phase space; weights sum to 1.
struct Ensemble {
  std::vector<PhasePoint> points;
  std::vector<double> weights;
};

/// The printed flow Hamiltonian and the Liouville generator disagree on
/// lambda vs (1-lambda); both readings are runnable.
enum class FlowConvention { liouville, theorem3 };

/// Stoermer-Verlet trajectory of H = (p^2 + lambda_eff q^2)/2 + mu V(q),
/// lambda_eff = lambda (liouville) or 1-lambda (theorem3). Order 2,
/// symplectic, time-reversible; negative T integrates backwards.
PhasePoint flow(double lambda, double mu, const PotentialSpec& V, PhasePoint z0,
                double T, double dt,
                FlowConvention conv = FlowConvention::liouville);

Ensemble pushforward(const Ensemble& in, double lambda, double mu,
                     const PotentialSpec& V, double T, double dt,
                     FlowConvention conv = FlowConvention::liouville);

class PhaseSpaceField;  // phasespace.hpp

/// Systematic (stratified) resampling of a nonnegative phase-space field
/// into n equal-weight points at cell centers; deterministic given seed.
Ensemble sample_from_field(const PhaseSpaceField& f, int n, std::uint64_t seed);

}  // namespace sclab
