#include <doctest.h>

#include <cmath>

#include "sclab/density.hpp"
#include "sclab/oracle.hpp"

using namespace sclab;

namespace {
const SpatialGrid kGrid = make_grid(1, 5.5, 128);
const double kHbar = 0.1;

HamiltonianSpec scenario() {
  HamiltonianSpec h;
  h.lambda = 1.0;
  h.mu = 0.5;
  h.V = parse_potential("cos(a=1,omega=1)");
  h.eps = 0.05;
  h.U = parse_potential("abs_sin(a=0.7,omega=1)");
  return h;
}
}  // namespace

TEST_CASE("density matrix invariants from a pure state") {
  const WaveFunction w = coherent_state(kGrid, kHbar, 0.5, 0.3);
  const DensityMatrix R = DensityMatrix::from_pure(w);
  CHECK(std::abs(R.trace() - 1.0) < 1e-9);
  CHECK(R.hermiticity_defect() < 1e-10);
  CHECK(R.min_eigenvalue() > -1e-10);
}

TEST_CASE("propagate_density: identity at T = 0 and conserved structure") {
  const WaveFunction w = coherent_state(kGrid, kHbar, 0.5, 0.3);
  const DensityMatrix R = DensityMatrix::from_pure(w);
  const DensityMatrix same = propagate_density(R, scenario(), 0.0);
  CHECK((same.rho - R.rho).cwiseAbs().maxCoeff() == 0.0);

  const DensityMatrix Rt = propagate_density(R, scenario(), 1.0);
  CHECK(std::abs(Rt.trace() - 1.0) < 1e-8);
  CHECK(Rt.hermiticity_defect() < 1e-8);
  CHECK(Rt.min_eigenvalue() > -1e-8);
}

TEST_CASE("purity is preserved under the unitary conjugation") {
  const WaveFunction w = coherent_state(kGrid, kHbar, 0.5, 0.3);
  const DensityMatrix R = DensityMatrix::from_pure(w);
  const DensityMatrix Rt = propagate_density(R, scenario(), 1.0);
  // same unitary applied to the vector: the two routes agree in trace norm
  const WaveFunction wt = oracle::apply_dense_propagator(w, scenario(), 1.0);
  const DensityMatrix Pt = DensityMatrix::from_pure(wt);
  CHECK(trace_norm_diff(Rt, Pt) < 1e-8);

  // and the split-step path stays within the splitting error
  const WaveFunction ws = propagate(w, scenario(), 1.0, 1e-3);
  const DensityMatrix Ps = DensityMatrix::from_pure(ws);
  CHECK(trace_norm_diff(Rt, Ps) < 1e-5);
}

TEST_CASE("mixture of two coherent projectors: convexity of the evolution") {
  const WaveFunction a = coherent_state(kGrid, kHbar, 0.8, 0.0);
  const WaveFunction b = coherent_state(kGrid, kHbar, -0.8, 0.0);
  DensityMatrix M = DensityMatrix::from_pure(a);
  M.rho = 0.3 * DensityMatrix::from_pure(a).rho + 0.7 * DensityMatrix::from_pure(b).rho;
  const auto h = scenario();
  const DensityMatrix Mt = propagate_density(M, h, 0.7);
  CHECK(std::abs(Mt.trace() - 1.0) < 1e-8);

  // triangle inequality against the pure pushforwards
  const DensityMatrix At =
      DensityMatrix::from_pure(oracle::apply_dense_propagator(a, h, 0.7));
  const DensityMatrix Bt =
      DensityMatrix::from_pure(oracle::apply_dense_propagator(b, h, 0.7));
  DensityMatrix mix = At;
  mix.rho = 0.3 * At.rho + 0.7 * Bt.rho;
  CHECK(trace_norm_diff(Mt, mix) < 1e-8);  // linearity of the conjugation
}

TEST_CASE("size cap") {
  const SpatialGrid big = make_grid(1, 10.0, 512);
  const WaveFunction w = coherent_state(big, kHbar, 0.0, 0.0);
  CHECK_THROWS_AS(DensityMatrix::from_pure(w), std::invalid_argument);
}
