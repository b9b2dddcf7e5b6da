#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sclab/oracle.hpp"
#include "sclab/quantum.hpp"

using namespace sclab;

namespace {
const SpatialGrid kGrid = make_grid(1, 5.5, 128);
const double kHbar = 0.1;

HamiltonianSpec harmonic() {
  HamiltonianSpec h;
  h.lambda = 1.0;
  return h;
}

HamiltonianSpec vcos_scenario(double eps) {
  HamiltonianSpec h;
  h.lambda = 1.0;
  h.mu = 0.5;
  h.V = parse_potential("cos(a=1,omega=1)");
  h.eps = eps;
  h.U = parse_potential("abs_sin(a=0.7,omega=1)");
  return h;
}

double l2_diff(const WaveFunction& a, const WaveFunction& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.psi.size(); ++i) s += std::norm(a.psi[i] - b.psi[i]);
  return std::sqrt(s * a.grid.dx);
}
}  // namespace

TEST_CASE("coherent state moments") {
  const WaveFunction w = coherent_state(kGrid, kHbar, 0.0, 0.0);
  CHECK(w.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(mean_position(w)[0]) < 1e-6);
  CHECK(std::abs(mean_momentum(w)[0]) < 1e-6);
  CHECK(position_variance(w)[0] == doctest::Approx(0.05).epsilon(1e-6));
  CHECK(momentum_variance(w)[0] == doctest::Approx(0.05).epsilon(1e-6));

  const WaveFunction z = coherent_state(kGrid, kHbar, 1.0, 0.5);
  CHECK(mean_position(z)[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(mean_momentum(z)[0] == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("coherent state preconditions") {
  CHECK_THROWS_AS(coherent_state(kGrid, kHbar, 5.2, 0.0), GuardError);  // boundary
  const double pmax = kHbar * std::numbers::pi / kGrid.dx;
  CHECK_THROWS_AS(coherent_state(kGrid, kHbar, 0.0, 0.9 * pmax), GuardError);
  CHECK_THROWS_AS(coherent_state(make_grid(1, 10.0, 64), 0.02, 0.0, 0.0), GuardError);
}

TEST_CASE("coherent overlap law |<z1|z2>|^2 = e^{-|z1-z2|^2/2hbar}") {
  const WaveFunction a = coherent_state(kGrid, kHbar, 1.0, 0.0);
  const WaveFunction b = coherent_state(kGrid, kHbar, 0.0, 0.0);
  CHECK(std::norm(overlap(a, b)) == doctest::Approx(std::exp(-5.0)).epsilon(1e-9));
  CHECK(std::norm(overlap(a, a)) == doctest::Approx(1.0).epsilon(1e-12));

  const WaveFunction c = coherent_state(kGrid, kHbar, 0.4, -0.7);
  const double r2 = 0.6 * 0.6 + 0.7 * 0.7;
  CHECK(std::norm(overlap(a, c)) ==
        doctest::Approx(std::exp(-r2 / (2 * kHbar))).epsilon(1e-9));
}

TEST_CASE("trace distance closed form") {
  const WaveFunction a = coherent_state(kGrid, kHbar, 1.0, 0.0);
  const WaveFunction b = coherent_state(kGrid, kHbar, 0.0, 0.0);
  CHECK(trace_distance_pure(a, a) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(trace_distance_pure(a, b) ==
        doctest::Approx(2.0 * std::sqrt(1.0 - std::exp(-5.0))).epsilon(1e-9));
  // near-orthogonal pair
  const WaveFunction far = coherent_state(kGrid, kHbar, -3.0, 0.0);
  CHECK(trace_distance_pure(a, far) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("delta spread") {
  const WaveFunction w = coherent_state(kGrid, kHbar, 0.7, 0.3);
  CHECK(delta_spread(w) == doctest::Approx(std::sqrt(kHbar)).epsilon(1e-6));
  // squeezed width s: Delta^2 = s^2/2 + hbar^2/(2 s^2)
  const double s = 0.4;
  const WaveFunction sq = squeezed_state(kGrid, kHbar, 0.0, 0.0, s);
  const double expect = std::sqrt(s * s / 2 + kHbar * kHbar / (2 * s * s));
  CHECK(delta_spread(sq) == doctest::Approx(expect).epsilon(1e-6));
  // Heisenberg floor in the sum-of-variances reading
  CHECK(delta_spread(w) * delta_spread(w) >= kHbar * (1 - 1e-9));
}

TEST_CASE("momentum variance: spectral vs high-order finite differences") {
  const SpatialGrid g = make_grid(1, 8.0, 512);
  const WaveFunction w = coherent_state(g, kHbar, 0.5, 0.4);
  const double spectral = momentum_variance(w)[0];

  // 8th-order central second derivative; <p^2> = -hbar^2 <psi, psi''>
  static const double c[5] = {-205.0 / 72, 8.0 / 5, -1.0 / 5, 8.0 / 315, -1.0 / 560};
  const int N = g.N;
  double p2 = 0;
  for (int j = 0; j < N; ++j) {
    cxd dd = c[0] * w.psi[j];
    for (int k = 1; k <= 4; ++k)
      dd += c[k] * (w.psi[(j + k) % N] + w.psi[(j - k + N) % N]);
    dd /= g.dx * g.dx;
    p2 += -(kHbar * kHbar) * (std::conj(w.psi[j]) * dd).real() * g.dx;
  }
  const double pm = mean_momentum(w)[0];
  const double fd_var = p2 - pm * pm;
  CHECK(fd_var == doctest::Approx(spectral).epsilon(1e-6));
}

TEST_CASE("energy expectations") {
  const double q = 0.8, p = -0.4;
  const WaveFunction w = coherent_state(kGrid, kHbar, q, p);
  CHECK(energy(w, 1.0, 0.0, PotentialSpec{}) ==
        doctest::Approx(0.5 * (q * q + p * p) + kHbar / 2).epsilon(1e-6));

  const WaveFunction ground = coherent_state(kGrid, kHbar, 0.0, 0.0);
  CHECK(energy(ground, 0.0, 0.0, PotentialSpec{}) ==
        doctest::Approx(kHbar / 4).epsilon(1e-6));

  // lambda' = mu' = 0 leaves the kinetic part only
  const double kinetic = energy(w, 0.0, 0.0, PotentialSpec{});
  CHECK(energy(w, 0.0, 1.0, PotentialSpec{}) == doctest::Approx(kinetic));
  CHECK(kinetic == doctest::Approx(0.5 * p * p + kHbar / 4).epsilon(1e-6));
}

TEST_CASE("propagate: identity at T = 0 and harmonic rotation") {
  const WaveFunction in = coherent_state(kGrid, kHbar, 1.0, 0.0);
  const WaveFunction same = propagate(in, harmonic(), 0.0, 1e-3);
  CHECK(l2_diff(in, same) == 0.0);

  // quarter period: (1, 0) -> (0, -1)
  const WaveFunction out = propagate(in, harmonic(), std::numbers::pi / 2, 1e-3);
  CHECK(std::abs(mean_position(out)[0]) < 1e-4);
  CHECK(mean_momentum(out)[0] == doctest::Approx(-1.0).epsilon(1e-4));
  const WaveFunction ref =
      oracle::apply_dense_propagator(in, harmonic(), std::numbers::pi / 2);
  CHECK(std::abs(overlap(out, ref)) >= 1.0 - 1e-6);
}

TEST_CASE("propagate: order-2 convergence against the dense oracle") {
  const WaveFunction in = coherent_state(kGrid, kHbar, 1.0, 0.0);
  const HamiltonianSpec h = vcos_scenario(0.01);
  const WaveFunction ref = oracle::apply_dense_propagator(in, h, 1.0);
  const double e1 = l2_diff(propagate(in, h, 1.0, 4e-3), ref);
  const double e2 = l2_diff(propagate(in, h, 1.0, 2e-3), ref);
  const double e3 = l2_diff(propagate(in, h, 1.0, 1e-3), ref);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
  CHECK(e2 / e3 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("propagate: norm and shadow-energy conservation") {
  const WaveFunction in = coherent_state(kGrid, kHbar, 1.0, 0.0);
  HamiltonianSpec h;
  h.lambda = 1.0;
  h.eps = 0.1;
  h.U = parse_potential("abs_sin(a=0.7,omega=1)");
  const double e_in = energy_full(in, h);
  WaveFunction w = in;
  for (int leg = 0; leg < 5; ++leg) {
    w = propagate(w, h, 2.0, 1e-3);  // T = 10 total
    CHECK(std::abs(w.norm() - 1.0) < 1e-9);
    CHECK(std::abs(energy_full(w, h) - e_in) < 1e-6 * std::abs(e_in));
  }
  CHECK(w.t == doctest::Approx(10.0));
}

TEST_CASE("propagate input validation and dt rounding") {
  const WaveFunction in = coherent_state(kGrid, kHbar, 1.0, 0.0);
  CHECK_THROWS_AS(propagate(in, harmonic(), 1.0, -1e-3), std::invalid_argument);
  // T/dt not integral: effective dt = T/ceil(T/dt), still lands exactly at T
  const WaveFunction out = propagate(in, harmonic(), 0.0105, 1e-3);
  CHECK(out.t == doctest::Approx(0.0105));
}

TEST_CASE("Hamiltonian spec validation") {
  HamiltonianSpec h;
  h.lambda = 1.2;
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);
  h.lambda = 1.0;
  h.V = parse_potential("abs_sin(a=1,omega=1)");  // W1inf V is rejected
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);
}
