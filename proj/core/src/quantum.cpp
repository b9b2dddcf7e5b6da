#include "sclab/quantum.hpp"

#include <cmath>
#include <numbers>

namespace sclab {

void HamiltonianSpec::validate() const {
  if (lambda < 0.0 || lambda > 1.0 || mu < 0.0 || mu > 1.0 || eps < 0.0 || eps > 1.0)
    throw std::invalid_argument("HamiltonianSpec: lambda, mu, eps must lie in [0,1]");
  if (V.regularity() != Regularity::C11)
    throw std::invalid_argument("HamiltonianSpec: V must be C11-tagged");
}

WaveFunction coherent_state(const SpatialGrid& g, double hbar,
                            std::span<const double> q, std::span<const double> p) {
  if (int(q.size()) != g.d || int(p.size()) != g.d)
    throw std::invalid_argument("coherent_state: center dimension mismatch");
  const double margin = 5.0 * std::sqrt(hbar);
  const double pmax = hbar * std::numbers::pi / g.dx;
  for (int ax = 0; ax < g.d; ++ax) {
    if (q[ax] - (-g.L) < margin || g.L - q[ax] < margin)
      throw GuardError("boundary", "coherent_state: center too close to boundary");
    if (std::abs(p[ax]) > 0.8 * pmax)
      throw GuardError("nyquist", "coherent_state: momentum beyond 0.8*p_max");
  }
  check_resolution_guard(g, hbar);

  WaveFunction w;
  w.grid = g;
  w.hbar = hbar;
  w.psi.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    double phase = 0.0, quad = 0.0;
    for (int ax = 0; ax < g.d; ++ax) {
      const double x = g.coord(i, ax);
      phase += p[ax] * x / hbar;
      quad += (x - q[ax]) * (x - q[ax]);
    }
    w.psi[i] = std::polar(std::exp(-quad / (2.0 * hbar)), phase);
  }
  const double n = w.norm();
  for (auto& v : w.psi) v /= n;
  return w;
}

WaveFunction coherent_state(const SpatialGrid& g, double hbar, double q, double p) {
  return coherent_state(g, hbar, std::span<const double>(&q, 1),
                        std::span<const double>(&p, 1));
}

WaveFunction squeezed_state(const SpatialGrid& g, double hbar, double q, double p,
                            double s) {
  if (g.d != 1) throw std::invalid_argument("squeezed_state: d = 1 only");
  if (!(s > 0.0)) throw std::invalid_argument("squeezed_state: width must be positive");
  WaveFunction w;
  w.grid = g;
  w.hbar = hbar;
  w.psi.resize(g.size());
  for (int j = 0; j < g.N; ++j) {
    const double x = g.axis[j];
    w.psi[j] = std::polar(std::exp(-(x - q) * (x - q) / (2.0 * s * s)), p * x / hbar);
  }
  const double n = w.norm();
  for (auto& v : w.psi) v /= n;
  check_boundary_guard(g, w.psi);
  return w;
}

cxd overlap(const WaveFunction& a, const WaveFunction& b) {
  if (a.psi.size() != b.psi.size())
    throw std::invalid_argument("overlap: size mismatch");
  cxd s = 0.0;
  for (std::size_t i = 0; i < a.psi.size(); ++i) s += std::conj(a.psi[i]) * b.psi[i];
  return s * a.grid.cell_volume();
}

double trace_distance_pure(const WaveFunction& a, const WaveFunction& b) {
  const double f = std::norm(overlap(a, b));
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - f));
}

namespace {

// first and second moments of |amp|^2 along each axis
void axis_moments(const SpatialGrid& g, const Field& amp, double cell,
                  const std::vector<double>& axis_nodes, std::vector<double>& m1,
                  std::vector<double>& m2) {
  m1.assign(g.d, 0.0);
  m2.assign(g.d, 0.0);
  for (std::size_t i = 0; i < amp.size(); ++i) {
    const double w = std::norm(amp[i]) * cell;
    for (int ax = 0; ax < g.d; ++ax) {
      const double c = axis_nodes[g.index_along(i, ax)];
      m1[ax] += w * c;
      m2[ax] += w * c * c;
    }
  }
}

}  // namespace

std::vector<double> mean_position(const WaveFunction& w) {
  std::vector<double> m1, m2;
  axis_moments(w.grid, w.psi, w.grid.cell_volume(), w.grid.axis, m1, m2);
  return m1;
}

std::vector<double> mean_momentum(const WaveFunction& w) {
  const auto hat = forward_transform(w.grid, w.hbar, w.psi);
  const auto mom = make_momentum_lattice(w.grid, w.hbar);
  const double cell = std::pow(mom.dp, w.grid.d);
  std::vector<double> m1, m2;
  axis_moments(w.grid, hat, cell, mom.axis, m1, m2);
  return m1;
}

std::vector<double> position_variance(const WaveFunction& w) {
  std::vector<double> m1, m2;
  axis_moments(w.grid, w.psi, w.grid.cell_volume(), w.grid.axis, m1, m2);
  std::vector<double> v(w.grid.d);
  for (int ax = 0; ax < w.grid.d; ++ax) v[ax] = m2[ax] - m1[ax] * m1[ax];
  return v;
}

std::vector<double> momentum_variance(const WaveFunction& w) {
  const auto hat = forward_transform(w.grid, w.hbar, w.psi);
  const auto mom = make_momentum_lattice(w.grid, w.hbar);
  const double cell = std::pow(mom.dp, w.grid.d);
  std::vector<double> m1, m2;
  axis_moments(w.grid, hat, cell, mom.axis, m1, m2);
  std::vector<double> v(w.grid.d);
  for (int ax = 0; ax < w.grid.d; ++ax) v[ax] = m2[ax] - m1[ax] * m1[ax];
  return v;
}

double delta_spread(const WaveFunction& w) {
  const auto vx = position_variance(w);
  const auto vp = momentum_variance(w);
  double s = 0.0;
  for (int ax = 0; ax < w.grid.d; ++ax) s += vx[ax] + vp[ax];
  return std::sqrt(s);
}

double energy(const WaveFunction& w, double lambda, double mu,
              const PotentialSpec& V) {
  // kinetic part, spectral
  const auto hat = forward_transform(w.grid, w.hbar, w.psi);
  const auto mom = make_momentum_lattice(w.grid, w.hbar);
  const double pcell = std::pow(mom.dp, w.grid.d);
  double kin = 0.0;
  for (std::size_t i = 0; i < hat.size(); ++i) {
    double p2 = 0.0;
    for (int ax = 0; ax < w.grid.d; ++ax) {
      const double p = mom.axis[w.grid.index_along(i, ax)];
      p2 += p * p;
    }
    kin += 0.5 * p2 * std::norm(hat[i]) * pcell;
  }
  // potential part
  double pot = 0.0;
  const double cell = w.grid.cell_volume();
  std::vector<double> x(w.grid.d);
  for (std::size_t i = 0; i < w.psi.size(); ++i) {
    double r2 = 0.0;
    for (int ax = 0; ax < w.grid.d; ++ax) {
      x[ax] = w.grid.coord(i, ax);
      r2 += x[ax] * x[ax];
    }
    double v = 0.5 * lambda * r2;
    if (mu != 0.0) v += mu * evaluate(V, x);
    pot += v * std::norm(w.psi[i]) * cell;
  }
  return kin + pot;
}

double energy_full(const WaveFunction& w, const HamiltonianSpec& h) {
  double e = energy(w, h.lambda, h.mu, h.V);
  if (h.eps != 0.0) {
    const double cell = w.grid.cell_volume();
    std::vector<double> x(w.grid.d);
    double pot = 0.0;
    for (std::size_t i = 0; i < w.psi.size(); ++i) {
      for (int ax = 0; ax < w.grid.d; ++ax) x[ax] = w.grid.coord(i, ax);
      pot += evaluate(h.U, x) * std::norm(w.psi[i]) * cell;
    }
    e += h.eps * pot;
  }
  return e;
}

WaveFunction propagate(const WaveFunction& in, const HamiltonianSpec& h, double T,
                       double dt, const PropagateOptions& opt) {
  h.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("propagate: dt must be positive");
  if (T < 0.0) throw std::invalid_argument("propagate: T must be nonnegative");
  WaveFunction w = in;
  if (T == 0.0) return w;

  const long n = std::max<long>(1, long(std::ceil(T / dt - 1e-12)));
  const double step = T / double(n);
  const SpatialGrid& g = w.grid;
  const double hbar = w.hbar;

  // phase tables
  Field half_pot(g.size()), kin(g.size());
  {
    std::vector<double> x(g.d);
    for (std::size_t i = 0; i < g.size(); ++i) {
      double r2 = 0.0;
      for (int ax = 0; ax < g.d; ++ax) {
        x[ax] = g.coord(i, ax);
        r2 += x[ax] * x[ax];
      }
      double W = 0.5 * h.lambda * r2;
      if (h.mu != 0.0) W += h.mu * evaluate(h.V, x);
      if (h.eps != 0.0) W += h.eps * evaluate(h.U, x);
      half_pot[i] = std::polar(1.0, -0.5 * step * W / hbar);
    }
    const auto mom = make_momentum_lattice(g, hbar);
    for (std::size_t i = 0; i < g.size(); ++i) {
      double p2 = 0.0;
      for (int ax = 0; ax < g.d; ++ax) {
        const double p = mom.axis[g.index_along(i, ax)];
        p2 += p * p;
      }
      kin[i] = std::polar(1.0, -0.5 * step * p2 / hbar);
    }
  }

  const double norm0 = w.norm();
  for (long s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < w.psi.size(); ++i) w.psi[i] *= half_pot[i];
    auto hat = forward_transform(g, hbar, w.psi);
    for (std::size_t i = 0; i < hat.size(); ++i) hat[i] *= kin[i];
    w.psi = inverse_transform(g, hbar, hat);
    for (std::size_t i = 0; i < w.psi.size(); ++i) w.psi[i] *= half_pot[i];

    if ((s + 1) % opt.guard_stride == 0 || s + 1 == n) {
      check_boundary_guard(g, w.psi);
      if (std::abs(w.norm() - norm0) > opt.norm_tol)
        throw GuardError("norm_drift", "propagate: L2 norm drift exceeded tolerance");
    }
  }
  w.t = in.t + T;
  return w;
}

}  // namespace sclab
