#include "sclab/density.hpp"

#include <cmath>

#include "sclab/oracle.hpp"

namespace sclab {

DensityMatrix DensityMatrix::from_pure(const WaveFunction& w) {
  if (w.grid.d != 1 || w.grid.N > 256)
    throw std::invalid_argument("DensityMatrix: oracle scale is d=1, N <= 256");
  DensityMatrix R;
  R.grid = w.grid;
  R.hbar = w.hbar;
  const int N = w.grid.N;
  Eigen::VectorXcd v(N);
  const double s = std::sqrt(w.grid.dx);
  for (int j = 0; j < N; ++j) v(j) = w.psi[j] * s;
  R.rho = v * v.adjoint();
  return R;
}

double DensityMatrix::hermiticity_defect() const {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  return es.eigenvalues().minCoeff();
}

DensityMatrix propagate_density(const DensityMatrix& R, const HamiltonianSpec& h,
                                double T) {
  if (R.grid.N > 256)
    throw std::invalid_argument("propagate_density: size cap N <= 256 exceeded");
  if (T == 0.0) return R;
  const Eigen::MatrixXcd M = oracle::dense_propagator(R.grid, R.hbar, h, T);
  DensityMatrix out = R;
  out.rho = M * R.rho * M.adjoint();
  return out;
}

double trace_norm_diff(const DensityMatrix& A, const DensityMatrix& B) {
  Eigen::MatrixXcd D = A.rho - B.rho;
  D = 0.5 * (D + D.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(D);
  return es.eigenvalues().cwiseAbs().sum();
}

}  // namespace sclab
