#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sclab/grid.hpp"
#include "sclab/rng.hpp"

using namespace sclab;

TEST_CASE("make_grid basic examples") {
  const SpatialGrid g = make_grid(1, 8.0, 16);
  CHECK(g.dx == doctest::Approx(1.0).epsilon(0));
  CHECK(g.axis.front() == -8.0);
  CHECK(g.axis.back() == 7.0);
  CHECK(g.N * g.dx == doctest::Approx(2 * g.L).epsilon(1e-15));

  CHECK_THROWS_AS(make_grid(1, 8.0, 15), std::invalid_argument);  // odd N
  CHECK_THROWS_AS(make_grid(1, -1.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(3, 8.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 8.0, 12), std::invalid_argument);  // not a power of two
  CHECK_THROWS_AS(make_grid(1, 8.0, 4), std::invalid_argument);   // below minimum

  const SpatialGrid g2 = make_grid(2, 6.0, 64);
  CHECK(g2.dx == doctest::Approx(0.1875).epsilon(1e-15));
  CHECK(g2.size() == 64u * 64u);
}

TEST_CASE("momentum lattice pairing and Nyquist") {
  const SpatialGrid g = make_grid(1, 8.0, 64);
  const auto m = make_momentum_lattice(g, 0.5);
  CHECK(m.axis.size() == 64);
  CHECK(m.dp == doctest::Approx(0.5 * std::numbers::pi / 8.0));
  CHECK(m.pmax == doctest::Approx(0.5 * std::numbers::pi / g.dx));
  CHECK(m.axis[32] == 0.0);
  CHECK_THROWS_AS(make_momentum_lattice(g, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_momentum_lattice(g, 1.5), std::invalid_argument);
}

TEST_CASE("transform of a constant field concentrates at p = 0") {
  const SpatialGrid g = make_grid(1, 8.0, 64);
  const double hb = 0.25;
  Field f(g.size(), cxd(1.0, 0.0));
  const auto hat = forward_transform(g, hb, f);
  for (int k = 0; k < g.N; ++k) {
    if (k == g.N / 2) continue;  // p = 0 bin
    CHECK(std::abs(hat[k]) < 1e-12);
  }
  CHECK(std::abs(hat[g.N / 2]) > 1.0);
}

TEST_CASE("Gaussian transforms to the analytic Gaussian") {
  // hbar = 0.5, L = 8, N = 256; the closed-form transform of
  // (pi hbar)^{-1/4} e^{-x^2/2hbar} is (pi hbar)^{-1/4} e^{-p^2/2hbar}.
  const SpatialGrid g = make_grid(1, 8.0, 256);
  const double hb = 0.5;
  const double amp = std::pow(std::numbers::pi * hb, -0.25);
  Field f(g.size());
  for (int j = 0; j < g.N; ++j)
    f[j] = amp * std::exp(-g.axis[j] * g.axis[j] / (2 * hb));
  const auto hat = forward_transform(g, hb, f);
  const auto mom = make_momentum_lattice(g, hb);
  double err = 0;
  for (int k = 0; k < g.N; ++k) {
    const double expect = amp * std::exp(-mom.axis[k] * mom.axis[k] / (2 * hb));
    err = std::max(err, std::abs(hat[k] - cxd(expect)));
  }
  CHECK(err < 1e-8);
}

TEST_CASE("round trip and Parseval across sizes") {
  for (int N : {8, 32, 128, 512}) {
    const SpatialGrid g = make_grid(1, 10.0, N);
    const double hb = 0.1;
    Rng rng(1000 + N);
    Field f(g.size());
    for (auto& v : f) v = cxd(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto hat = forward_transform(g, hb, f);
    const auto back = inverse_transform(g, hb, hat);
    double rt = 0, n_x = 0, n_p = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      rt = std::max(rt, std::abs(back[i] - f[i]));
      n_x += std::norm(f[i]);
      n_p += std::norm(hat[i]);
    }
    n_x *= g.dx;
    n_p *= make_momentum_lattice(g, hb).dp;
    CHECK(rt < 1e-12);
    CHECK(std::abs(n_x - n_p) < 1e-12 * n_x);
  }
}

TEST_CASE("2D transform round trip") {
  const SpatialGrid g = make_grid(2, 6.0, 32);
  const double hb = 0.2;
  Rng rng(77);
  Field f(g.size());
  for (auto& v : f) v = cxd(rng.uniform(-1, 1), rng.uniform(-1, 1));
  const auto hat = forward_transform(g, hb, f);
  const auto back = inverse_transform(g, hb, hat);
  double rt = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    rt = std::max(rt, std::abs(back[i] - f[i]));
  CHECK(rt < 1e-12);
  CHECK_THROWS_AS(forward_transform(g, hb, Field(7)), std::invalid_argument);
}

TEST_CASE("boundary mass guard") {
  const SpatialGrid g = make_grid(1, 8.0, 128);
  Field centered(g.size(), cxd(0));
  centered[g.N / 2] = 1.0;
  CHECK(boundary_mass(g, centered) == 0.0);
  CHECK_NOTHROW(check_boundary_guard(g, centered));

  Field edge(g.size(), cxd(0));
  edge[1] = 1.0;
  CHECK(boundary_mass(g, edge) > 0.0);
  CHECK_THROWS_AS(check_boundary_guard(g, edge), GuardError);
}
