#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sclab/fft.hpp"

namespace sclab {

/// Raised when a run trips one of the validity guards (boundary mass,
/// Nyquist margin, resolution, norm drift). Harness code catches these and
/// records a failed-guard row instead of crashing.
class GuardError : public std::runtime_error {
 public:
  GuardError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Uniform position grid on [-L, L)^d, N nodes per axis, periodic under the
/// spectral transforms. Immutable after construction.
struct SpatialGrid {
  int d = 1;
  double L = 10.0;
  int N = 512;
  double dx = 0.0;
  std::vector<double> axis;  // axis[j] = -L + j*dx

  std::size_t size() const { return d == 1 ? std::size_t(N) : std::size_t(N) * N; }
  double cell_volume() const { return d == 1 ? dx : dx * dx; }

  // flat index <-> per-axis indices (row-major, axis 0 outermost)
  int index_along(std::size_t flat, int ax) const {
    return ax == d - 1 ? int(flat % N) : int(flat / N);
  }
  double coord(std::size_t flat, int ax) const { return axis[index_along(flat, ax)]; }
};

/// Momentum nodes p_k = hbar*(pi/L)*k, stored in ascending order
/// k = -N/2 .. N/2-1. Bijectively paired with the spatial nodes.
struct MomentumLattice {
  double hbar = 0.1;
  double dp = 0.0;
  double pmax = 0.0;  // hbar*pi/dx (Nyquist edge)
  std::vector<double> axis;
};

SpatialGrid make_grid(int d, double L, int N);
MomentumLattice make_momentum_lattice(const SpatialGrid& g, double hbar);

using Field = std::vector<cxd>;

/// Unitary position -> momentum transform with kernel e^{-i p.x / hbar}
/// /(2 pi hbar)^{d/2}; output in ascending momentum order per axis.
Field forward_transform(const SpatialGrid& g, double hbar, const Field& f);
Field inverse_transform(const SpatialGrid& g, double hbar, const Field& f);

/// |psi|^2 mass within 4*dx of the domain boundary (any axis).
double boundary_mass(const SpatialGrid& g, const Field& f);

/// Throws GuardError("boundary_mass") if the guard level 1e-8 is exceeded.
void check_boundary_guard(const SpatialGrid& g, const Field& f);

/// Coherent-state resolution guard: at least 8 grid points across the
/// 4*sqrt(hbar/2) packet width. Throws GuardError("resolution").
void check_resolution_guard(const SpatialGrid& g, double hbar);

double norm_l2(const SpatialGrid& g, const Field& f);

}  // namespace sclab
