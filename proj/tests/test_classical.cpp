#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sclab/classical.hpp"
#include "sclab/phasespace.hpp"
#include "sclab/quantum.hpp"
#include "sclab/rng.hpp"

using namespace sclab;

namespace {
PhasePoint pt(double q, double p) { return {{q}, {p}}; }

double hamiltonian(double lam, double mu, const PotentialSpec& V, const PhasePoint& z) {
  double h = 0.5 * (z.p[0] * z.p[0] + lam * z.q[0] * z.q[0]);
  if (mu != 0) h += mu * evaluate(V, z.q);
  return h;
}
}  // namespace

TEST_CASE("harmonic rotation and free motion") {
  const PotentialSpec none;
  const PhasePoint out = flow(1.0, 0.0, none, pt(1.0, 0.0), std::numbers::pi / 2, 1e-4);
  CHECK(std::abs(out.q[0]) < 1e-6);
  CHECK(out.p[0] == doctest::Approx(-1.0).epsilon(1e-6));

  // Verlet is exact for free motion
  const PhasePoint fr = flow(0.0, 0.0, none, pt(0.3, -0.8), 2.0, 1e-3);
  CHECK(fr.q[0] == doctest::Approx(0.3 - 0.8 * 2.0).epsilon(1e-13));
  CHECK(fr.p[0] == doctest::Approx(-0.8));
}

TEST_CASE("energy error scales like dt^2") {
  const auto V = parse_potential("cos(a=1,omega=1)");
  const PhasePoint z0 = pt(1.0, 0.4);
  const double h0 = hamiltonian(1.0, 0.5, V, z0);
  auto err = [&](double dt) {
    const PhasePoint zt = flow(1.0, 0.5, V, z0, 5.0, dt);
    return std::abs(hamiltonian(1.0, 0.5, V, zt) - h0);
  };
  const double e1 = err(4e-3), e2 = err(2e-3);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("reversibility") {
  const auto V = parse_potential("cos(a=1,omega=1)");
  const PhasePoint z0 = pt(0.7, -0.2);
  const PhasePoint fwd = flow(1.0, 0.5, V, z0, 3.0, 1e-3);
  const PhasePoint back = flow(1.0, 0.5, V, fwd, -3.0, 1e-3);
  CHECK(std::abs(back.q[0] - z0.q[0]) < 1e-10);
  CHECK(std::abs(back.p[0] - z0.p[0]) < 1e-10);
}

TEST_CASE("symplectic two-form: finite-difference Jacobian determinant") {
  const auto V = parse_potential("cos(a=1,omega=1)");
  const double d = 1e-5, T = 2.0, dt = 1e-3;
  auto F = [&](double q, double p) { return flow(1.0, 0.5, V, pt(q, p), T, dt); };
  const PhasePoint qp = F(0.9 + d, 0.3), qm = F(0.9 - d, 0.3);
  const PhasePoint pp = F(0.9, 0.3 + d), pm = F(0.9, 0.3 - d);
  const double a = (qp.q[0] - qm.q[0]) / (2 * d), b = (pp.q[0] - pm.q[0]) / (2 * d);
  const double c = (qp.p[0] - qm.p[0]) / (2 * d), e = (pp.p[0] - pm.p[0]) / (2 * d);
  CHECK(a * e - b * c == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("flow conventions differ exactly by lambda vs 1 - lambda") {
  const PotentialSpec none;
  // lambda = 1: liouville -> rotation, theorem3 -> free motion
  const PhasePoint rot =
      flow(1.0, 0.0, none, pt(1.0, 0.0), 1.0, 1e-3, FlowConvention::liouville);
  const PhasePoint fre =
      flow(1.0, 0.0, none, pt(1.0, 0.0), 1.0, 1e-3, FlowConvention::theorem3);
  CHECK(rot.q[0] == doctest::Approx(std::cos(1.0)).epsilon(1e-5));
  CHECK(fre.q[0] == doctest::Approx(1.0));
  CHECK(fre.p[0] == doctest::Approx(0.0));
}

TEST_CASE("pushforward basics") {
  const PotentialSpec none;
  Ensemble e;
  e.points = {pt(1.0, 0.0), pt(0.0, 1.0)};
  e.weights = {0.25, 0.75};
  const Ensemble same = pushforward(e, 1.0, 0.0, none, 0.0, 1e-3);
  CHECK(same.points[0].q[0] == 1.0);
  CHECK(same.weights == e.weights);

  const Ensemble full = pushforward(e, 1.0, 0.0, none, 2 * std::numbers::pi, 1e-3);
  CHECK(full.points[0].q[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(std::abs(full.points[0].p[0]) < 1e-5);
}

TEST_CASE("sample_from_field: determinism, concentration, moments") {
  const SpatialGrid g = make_grid(1, 8.0, 256);
  const WaveFunction w = coherent_state(g, 0.1, 0.8, -0.3);
  const PhaseSpaceField h = husimi(w);

  const Ensemble s1 = sample_from_field(h, 400, 42);
  const Ensemble s2 = sample_from_field(h, 400, 42);
  REQUIRE(s1.points.size() == 400);
  bool identical = true;
  for (std::size_t i = 0; i < 400; ++i)
    identical = identical && s1.points[i].q[0] == s2.points[i].q[0] &&
                s1.points[i].p[0] == s2.points[i].p[0];
  CHECK(identical);

  double mq = 0, mp = 0;
  for (const auto& z : s1.points) {
    mq += z.q[0] / 400;
    mp += z.p[0] / 400;
  }
  CHECK(mq == doctest::Approx(0.8).epsilon(0.15));
  CHECK(mp == doctest::Approx(-0.3).epsilon(0.2));

  // all mass in one cell -> every sample in that cell
  PhaseSpaceField delta = h;
  std::fill(delta.v.begin(), delta.v.end(), 0.0);
  delta.at(100, 200) = 1.0 / delta.cell();
  const Ensemble sd = sample_from_field(delta, 37, 9);
  for (const auto& z : sd.points) {
    CHECK(z.q[0] == delta.qs[100]);
    CHECK(z.p[0] == delta.ps[200]);
  }
}

TEST_CASE("sample_from_field rejects signed fields") {
  const SpatialGrid g = make_grid(1, 8.0, 256);
  const WaveFunction a = coherent_state(g, 0.1, -0.9, 0.0);
  const WaveFunction b = coherent_state(g, 0.1, 0.9, 0.0);
  WaveFunction sup = a;
  for (std::size_t i = 0; i < sup.psi.size(); ++i) sup.psi[i] += b.psi[i];
  const double n = sup.norm();
  for (auto& v : sup.psi) v /= n;
  const PhaseSpaceField w = wigner(sup);  // interference makes it signed
  CHECK_THROWS_AS(sample_from_field(w, 100, 3), std::invalid_argument);
}
