#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "sclab/quantum.hpp"

namespace sclab {

/// Real field on an (x, xi) product lattice (d = 1). The lattice is the
/// 2N-point spectral refinement of the state grid: dx/2 spacing in x and
/// momentum range [-p_max, p_max) at spacing pi*hbar/(2L), which is what the
/// discrete Wigner correlation supports without aliasing.
class PhaseSpaceField {
 public:
  enum class Tag { wigner, husimi };

  Tag tag = Tag::wigner;
  double hbar = 0.1;
  std::vector<double> qs;  // x nodes
  std::vector<double> ps;  // xi nodes
  std::vector<double> v;   // row-major: v[iq * ps.size() + ip]

  double dq() const { return qs[1] - qs[0]; }
  double dp() const { return ps[1] - ps[0]; }
  double cell() const { return dq() * dp(); }
  double& at(std::size_t iq, std::size_t ip) { return v[iq * ps.size() + ip]; }
  double at(std::size_t iq, std::size_t ip) const { return v[iq * ps.size() + ip]; }

  double integral() const;
  double min_value() const;
  bool same_lattice(const PhaseSpaceField& o) const;

  /// marginals: integrate out xi (resp. x)
  std::vector<double> x_marginal() const;
  std::vector<double> xi_marginal() const;
};

/// Spectral interpolation of psi onto the doubled grid (2N nodes, dx/2).
WaveFunction refine2(const WaveFunction& w);

/// Wigner transform W(x,xi) = (2pi)^{-1} int e^{-i xi y} psi(x + hbar y/2)
/// conj(psi(x - hbar y/2)) dy via the periodic y-correlation + FFT.
PhaseSpaceField wigner(const WaveFunction& w);

/// Husimi function |<psi_z, psi>|^2 / (2 pi hbar) on the same lattice;
/// nonnegative by construction.
PhaseSpaceField husimi(const WaveFunction& w);

/// |psi|^2 mass outside B_R in x and in p (two numbers in [0,1]).
struct TightnessReport {
  double x_mass_outside = 0.0;
  double p_mass_outside = 0.0;
};
TightnessReport tightness_report(const WaveFunction& w, double R);

/// Anti-Wick operator F = sum_z f(z) |psi_z><psi_z| dq dp on the state grid
/// (matrix in the sqrt(dx)-weighted basis; trace F = sum f dq dp).
/// Oracle-scale: N^d <= 256, d = 1.
Eigen::MatrixXcd toeplitz_quantize(const SpatialGrid& g, double hbar,
                                   const std::function<double(double, double)>& f,
                                   const std::vector<double>& qs,
                                   const std::vector<double>& ps);

/// z-lattice used by the Toeplitz quadrature on a given state grid:
/// x nodes of the grid and the momentum lattice nodes.
void toeplitz_lattice(const SpatialGrid& g, double hbar, std::vector<double>& qs,
                      std::vector<double>& ps);

/// CSV (x, xi, value) and SVG heat-map export.
void write_field_csv(const PhaseSpaceField& f, const std::string& path);
void write_field_svg(const PhaseSpaceField& f, const std::string& path,
                     int max_cells_per_axis = 128);

}  // namespace sclab
