#pragma once

#include <optional>
#include <vector>

#include "sclab/grid.hpp"
#include "sclab/potential.hpp"

namespace sclab {

/// H_eps = -(hbar^2/2) Lap + (lambda/2)|x|^2 + mu V + eps U,
/// lambda, mu, eps in [0, 1], V with Lipschitz gradient, U with gradient
/// bounded a.e.
struct HamiltonianSpec {
  double lambda = 1.0;
  double mu = 0.0;
  double eps = 0.0;
  PotentialSpec V;  // C11
  PotentialSpec U;  // W1inf (or smoother)

  void validate() const;
  HamiltonianSpec unperturbed() const {
    HamiltonianSpec h = *this;
    h.eps = 0.0;
    return h;
  }
};

struct WaveFunction {
  SpatialGrid grid;
  double hbar = 0.1;
  Field psi;      // N^d complex amplitudes
  double t = 0.0;

  double norm() const { return norm_l2(grid, psi); }
};

/// Minimal-uncertainty Gaussian packet centered at phase-space point (q, p):
/// (pi hbar)^{-d/4} e^{i p.x/hbar} e^{-(x-q)^2/2 hbar}, renormalized on the
/// lattice. Preconditions: 5*sqrt(hbar) from the boundary, |p| <= 0.8 p_max.
WaveFunction coherent_state(const SpatialGrid& g, double hbar,
                            std::span<const double> q, std::span<const double> p);
WaveFunction coherent_state(const SpatialGrid& g, double hbar, double q, double p);

/// Gaussian of position width s instead of sqrt(hbar) (d = 1).
WaveFunction squeezed_state(const SpatialGrid& g, double hbar, double q, double p,
                            double s);

cxd overlap(const WaveFunction& a, const WaveFunction& b);

/// ||psi><psi| - |phi><phi||_1 = 2 sqrt(1 - |<psi,phi>|^2)  (rank-2 identity)
double trace_distance_pure(const WaveFunction& a, const WaveFunction& b);

std::vector<double> mean_position(const WaveFunction& w);
std::vector<double> mean_momentum(const WaveFunction& w);
std::vector<double> position_variance(const WaveFunction& w);
std::vector<double> momentum_variance(const WaveFunction& w);

/// Delta(psi): sqrt of summed position + momentum variances over all axes.
double delta_spread(const WaveFunction& w);

/// <psi, H_0^{lambda,mu} psi> with H_0 = -(hbar^2/2)Lap + (lambda/2)|x|^2 + mu V.
double energy(const WaveFunction& w, double lambda, double mu,
              const PotentialSpec& V);

/// Expectation of the full H_eps (adds eps U).
double energy_full(const WaveFunction& w, const HamiltonianSpec& h);

struct PropagateOptions {
  int guard_stride = 64;      // steps between boundary/norm checks
  double norm_tol = 1e-6;
};

/// Second-order Strang splitting of i hbar d/dt psi = H_eps psi: half-step
/// potential, full kinetic step in momentum space, half-step potential.
/// T/dt is rounded up to an integral step count (effective dt = T/n).
WaveFunction propagate(const WaveFunction& in, const HamiltonianSpec& h, double T,
                       double dt, const PropagateOptions& opt = {});

}  // namespace sclab
