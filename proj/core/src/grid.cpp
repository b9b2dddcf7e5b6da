#include "sclab/grid.hpp"

#include <cmath>
#include <numbers>

namespace sclab {

SpatialGrid make_grid(int d, double L, int N) {
  if (d != 1 && d != 2) throw std::invalid_argument("make_grid: d must be 1 or 2");
  if (!(L > 0.0)) throw std::invalid_argument("make_grid: L must be positive");
  if (N % 2 != 0) throw std::invalid_argument("make_grid: N must be even");
  if (N < 8 || !is_pow2(std::size_t(N)))
    throw std::invalid_argument("make_grid: N must be a power of two, N >= 8");
  SpatialGrid g;
  g.d = d;
  g.L = L;
  g.N = N;
  g.dx = 2.0 * L / N;
  g.axis.resize(N);
  for (int j = 0; j < N; ++j) g.axis[j] = -L + j * g.dx;
  return g;
}

MomentumLattice make_momentum_lattice(const SpatialGrid& g, double hbar) {
  if (!(hbar > 0.0 && hbar <= 1.0))
    throw std::invalid_argument("momentum lattice: hbar must be in (0, 1]");
  MomentumLattice m;
  m.hbar = hbar;
  m.dp = hbar * std::numbers::pi / g.L;
  m.pmax = hbar * std::numbers::pi / g.dx;
  m.axis.resize(g.N);
  for (int k = 0; k < g.N; ++k) m.axis[k] = (k - g.N / 2) * m.dp;
  return m;
}

namespace {

// 1D pass of the hbar-unitary transform along one axis of a (possibly 2D)
// row-major array. Signed momentum index n maps to FFT bin n mod N with an
// extra (-1)^n phase from the x-offset -L.
void transform_axis(const SpatialGrid& g, Field& f, int ax, bool forward) {
  const int N = g.N;
  std::vector<cxd> buf(N);
  const std::size_t rows = g.size() / std::size_t(N);
  const std::size_t stride = (g.d == 2 && ax == 0) ? std::size_t(N) : 1;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t base = (g.d == 2 && ax == 0) ? r : r * std::size_t(N);
    if (forward) {
      for (int j = 0; j < N; ++j) buf[j] = f[base + stride * j];
      fft_forward(buf);
      for (int m = 0; m < N; ++m) {
        const int n = m - N / 2;
        const double sign = (n & 1) ? -1.0 : 1.0;
        f[base + stride * m] = sign * buf[(n + N) % N];
      }
    } else {
      for (int m = 0; m < N; ++m) {
        const int n = m - N / 2;
        const double sign = (n & 1) ? -1.0 : 1.0;
        buf[(n + N) % N] = sign * f[base + stride * m];
      }
      fft_inverse(buf);
      for (int j = 0; j < N; ++j) f[base + stride * j] = buf[j];
    }
  }
}

}  // namespace

Field forward_transform(const SpatialGrid& g, double hbar, const Field& f) {
  if (f.size() != g.size())
    throw std::invalid_argument("forward_transform: field length mismatch");
  Field out = f;
  for (int ax = 0; ax < g.d; ++ax) transform_axis(g, out, ax, true);
  const double dp = hbar * std::numbers::pi / g.L;
  const double s = std::pow(g.dx / std::sqrt(2.0 * std::numbers::pi * hbar), g.d);
  (void)dp;
  for (auto& v : out) v *= s;
  return out;
}

Field inverse_transform(const SpatialGrid& g, double hbar, const Field& f) {
  if (f.size() != g.size())
    throw std::invalid_argument("inverse_transform: field length mismatch");
  Field out = f;
  for (int ax = 0; ax < g.d; ++ax) transform_axis(g, out, ax, false);
  const double dp = hbar * std::numbers::pi / g.L;
  const double s =
      std::pow(g.N * dp / std::sqrt(2.0 * std::numbers::pi * hbar), g.d);
  for (auto& v : out) v *= s;
  return out;
}

double boundary_mass(const SpatialGrid& g, const Field& f) {
  const int N = g.N;
  auto near_edge = [N](int j) { return j <= 4 || j >= N - 4; };
  double mass = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool edge = false;
    for (int ax = 0; ax < g.d; ++ax)
      if (near_edge(g.index_along(i, ax))) edge = true;
    if (edge) mass += std::norm(f[i]);
  }
  return mass * g.cell_volume();
}

void check_boundary_guard(const SpatialGrid& g, const Field& f) {
  const double m = boundary_mass(g, f);
  if (m > 1e-8)
    throw GuardError("boundary_mass",
                     "domain too small: boundary |psi|^2 mass " + std::to_string(m));
}

void check_resolution_guard(const SpatialGrid& g, double hbar) {
  // packet width = amplitude FWHM of e^{-x^2/2 hbar}; at the default grid
  // (N = 512, L = 10) this puts the floor at hbar ~ 0.0185
  const double width = 2.0 * std::sqrt(2.0 * std::log(2.0) * hbar);
  if (width / g.dx < 8.0)
    throw GuardError("resolution",
                     "grid too coarse for hbar=" + std::to_string(hbar));
}

double norm_l2(const SpatialGrid& g, const Field& f) {
  double s = 0.0;
  for (const auto& v : f) s += std::norm(v);
  return std::sqrt(s * g.cell_volume());
}

}  // namespace sclab
