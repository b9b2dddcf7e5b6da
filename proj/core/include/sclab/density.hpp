#pragma once

#include <Eigen/Dense>

#include "sclab/quantum.hpp"

namespace sclab {

/// Oracle-scale density operator in the sqrt(dx)-weighted grid basis
/// (trace = 1 without extra quadrature weights). N^d <= 256, d = 1.
struct DensityMatrix {
  SpatialGrid grid;
  double hbar = 0.1;
  Eigen::MatrixXcd rho;

  static DensityMatrix from_pure(const WaveFunction& w);
  double trace() const { return rho.trace().real(); }
  double hermiticity_defect() const;
  double min_eigenvalue() const;
};

/// Conjugation by the dense oracle propagator: R(T) = M R M^dagger.
DensityMatrix propagate_density(const DensityMatrix& R, const HamiltonianSpec& h,
                                double T);

/// Trace norm of the difference (sum of singular values).
double trace_norm_diff(const DensityMatrix& A, const DensityMatrix& B);

}  // namespace sclab
