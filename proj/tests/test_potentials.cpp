#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sclab/potential.hpp"
#include "sclab/rng.hpp"

using namespace sclab;

namespace {
double eval1(const PotentialSpec& p, double x) {
  return evaluate(p, std::span<const double>(&x, 1));
}
GradientValue grad1(const PotentialSpec& p, double x) {
  return gradient(p, std::span<const double>(&x, 1));
}
}  // namespace

TEST_CASE("catalogue point values") {
  const auto vcos = parse_potential("cos(a=1,omega=1)");
  CHECK(eval1(vcos, 0.0) == doctest::Approx(1.0));
  CHECK(grad1(vcos, 0.0).g[0] == doctest::Approx(0.0));

  const auto uabs = parse_potential("abs_sin(a=1,omega=1)");
  CHECK(eval1(uabs, std::numbers::pi / 2) == doctest::Approx(1.0));
  CHECK(grad1(uabs, std::numbers::pi / 2).g[0] == doctest::Approx(0.0));

  // kink of |sin| at x = pi: value 0, flagged one-sided gradient
  CHECK(eval1(uabs, std::numbers::pi) == doctest::Approx(0.0).epsilon(1e-12));
  const auto gk = grad1(uabs, std::numbers::pi);
  CHECK(gk.at_kink);
  CHECK(std::abs(gk.g[0]) == doctest::Approx(1.0));

  const auto saw = parse_potential("sawtooth(a=1)");
  CHECK(eval1(saw, 0.5) == doctest::Approx(0.5));
  CHECK(eval1(saw, 1.0) == doctest::Approx(1.0));
  CHECK(eval1(saw, 1.5) == doctest::Approx(0.5));
  CHECK(grad1(saw, 1.0).at_kink);
}

TEST_CASE("finite differences match the exposed gradient away from kinks") {
  Rng rng(5);
  const double h = 1e-6;
  for (const char* txt : {"cos(a=0.8,omega=2)", "gauss(a=1.5,s=0.7)",
                          "harmonic(k=0.5)", "abs_sin(a=0.7,omega=1)",
                          "sawtooth(a=0.9)"}) {
    const auto p = parse_potential(txt);
    for (int i = 0; i < 200; ++i) {
      const double x = rng.uniform(-4, 4);
      const auto g = grad1(p, x);
      if (g.at_kink) continue;
      // stay clear of the kink set so central differences are valid
      const auto gl = grad1(p, x - 2 * h);
      const auto gr = grad1(p, x + 2 * h);
      if (gl.at_kink || gr.at_kink || std::abs(gl.g[0] - gr.g[0]) > 1e-3) continue;
      const double fd = (eval1(p, x + h) - eval1(p, x - h)) / (2 * h);
      CHECK(std::abs(fd - g.g[0]) < 1e-6 * (1 + std::abs(g.g[0])));
    }
  }
}

TEST_CASE("closed-form sup norms") {
  const SpatialGrid region = make_grid(1, 10.0, 256);

  const auto uabs = parse_potential("abs_sin(a=0.7,omega=1)");
  CHECK(sup_norm(uabs, region).value == doctest::Approx(0.7));
  CHECK(sup_norm_gradient(uabs, region).value == doctest::Approx(0.7));
  CHECK(sup_norm(uabs, region).exact);

  const auto vcos = parse_potential("cos(a=2,omega=3)");
  CHECK(sup_norm(vcos, region).value == doctest::Approx(2.0));
  CHECK(sup_norm_gradient(vcos, region).value == doctest::Approx(6.0));

  const auto zero = parse_potential("zero");
  CHECK(sup_norm(zero, region).value == 0.0);
  CHECK(sup_norm_gradient(zero, region).value == 0.0);

  const auto vg = parse_potential("gauss(a=1,s=2)");
  CHECK(sup_norm(vg, region).value == doctest::Approx(1.0));
  CHECK(sup_norm_gradient(vg, region).value ==
        doctest::Approx(0.5 * std::exp(-0.5)));
}

TEST_CASE("sampled estimates stay below closed forms and agree to 1e-3") {
  const SpatialGrid region = make_grid(1, 10.0, 256);
  // sample the catalogue entries by brute force and compare
  for (const char* txt : {"cos(a=2,omega=3)", "abs_sin(a=0.7,omega=1)",
                          "gauss(a=1.3,s=0.9)"}) {
    const auto p = parse_potential(txt);
    const double exact_v = sup_norm(p, region).value;
    const double exact_g = sup_norm_gradient(p, region).value;
    const int M = 10 * region.N;
    double est_v = 0, est_g = 0;
    for (int i = 0; i <= M; ++i) {
      const double x = -region.L + 2.0 * region.L * i / M;
      est_v = std::max(est_v, std::abs(eval1(p, x)));
      est_g = std::max(est_g, std::abs(grad1(p, x).g[0]));
    }
    CHECK(est_v <= exact_v * (1 + 1e-12));
    CHECK(est_g <= exact_g * (1 + 1e-12));
    CHECK(est_v == doctest::Approx(exact_v).epsilon(1e-3));
    CHECK(est_g == doctest::Approx(exact_g).epsilon(1e-3));
  }
}

TEST_CASE("Lipschitz constants of the gradient") {
  const SpatialGrid region = make_grid(1, 10.0, 256);
  CHECK(lipschitz_gradient(parse_potential("cos(a=1,omega=2)"), region).value ==
        doctest::Approx(4.0));
  // max |V''| of -e^{-x^2/2} sits at the origin and equals 1
  CHECK(lipschitz_gradient(parse_potential("gauss(a=1,s=1)"), region).value ==
        doctest::Approx(1.0));
  CHECK(lipschitz_gradient(parse_potential("harmonic(k=0.3)"), region).value ==
        doctest::Approx(0.3));
  CHECK_THROWS_AS(lipschitz_gradient(parse_potential("abs_sin(a=1,omega=1)"), region),
                  std::invalid_argument);
}

TEST_CASE("d = 2 separable/radial forms") {
  const SpatialGrid region = make_grid(2, 6.0, 32);
  const auto vcos = parse_potential("cos(a=1,omega=1)");
  const double xy[2] = {0.0, 0.0};
  CHECK(evaluate(vcos, xy) == doctest::Approx(2.0));
  CHECK(sup_norm(vcos, region).value == doctest::Approx(2.0));
  CHECK(sup_norm_gradient(vcos, region).value == doctest::Approx(std::sqrt(2.0)));
  const auto vg = parse_potential("gauss(a=1,s=1)");
  CHECK(evaluate(vg, xy) == doctest::Approx(-1.0));
}

TEST_CASE("potential grammar round trip and errors") {
  for (const char* txt : {"zero", "cos(a=0.5,omega=2)", "gauss(a=1,s=0.25)",
                          "abs_sin(a=0.7,omega=1)", "sawtooth(a=2)",
                          "harmonic(k=1)"}) {
    const auto p = parse_potential(txt);
    const auto q = parse_potential(format_potential(p));
    CHECK(format_potential(p) == format_potential(q));
  }
  CHECK_THROWS_AS(parse_potential("quartic(a=1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_potential("cos(a=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_potential("cos(b=1)"), std::invalid_argument);
}
