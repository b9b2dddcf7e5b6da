#pragma once

#include <Eigen/Dense>

#include "sclab/phasespace.hpp"
#include "sclab/quantum.hpp"
#include "sclab/transport.hpp"

namespace sclab {
namespace oracle {

/// Dense Hamiltonian in the sqrt(dx)-weighted basis: spectral kinetic block
/// plus diagonal potential. d = 1, N <= 256.
Eigen::MatrixXcd hamiltonian_matrix(const SpatialGrid& g, double hbar,
                                    const HamiltonianSpec& h);

/// e^{-i T H / hbar} by Hermitian eigendecomposition; unitary to 1e-10.
Eigen::MatrixXcd dense_propagator(const SpatialGrid& g, double hbar,
                                  const HamiltonianSpec& h, double T);

/// Apply the dense propagator to a state (reference path for fidelity tests).
WaveFunction apply_dense_propagator(const WaveFunction& w, const HamiltonianSpec& h,
                                    double T);

/// O(N^2)-style direct quadrature of the Wigner integral on the same lattice
/// as phasespace::wigner; no fast transform involved. N <= 512.
PhaseSpaceField direct_wigner(const WaveFunction& w);

/// W2 via a dense textbook LP simplex over the transportation polytope
/// (support <= 12 points each). Independent of the production solver.
double exact_ot_small(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// W2 by exhaustive enumeration over permutation matchings; requires equal
/// support sizes and uniform weights, n <= 8.
double exact_ot_permutations(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// Gaussian smoothing of a Wigner field at scale sqrt(hbar/2) per axis via
/// periodic FFT convolution; independent reference for the Husimi transform.
PhaseSpaceField smoothed_wigner(const PhaseSpaceField& w);

}  // namespace oracle
}  // namespace sclab
