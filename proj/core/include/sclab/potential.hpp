#pragma once

#include <span>
#include <string>
#include <vector>

#include "sclab/grid.hpp"

namespace sclab {

enum class Regularity { C11, W1inf };

/// Declarative potential: catalogue id + parameters. All evaluation,
/// gradient, and norm logic is keyed off `kind`.
///
/// Catalogue (1D forms; in d=2 cos/abs_sin/sawtooth act as sums over axes,
/// gauss and harmonic are radial):
///   zero                 V = 0                          (C11)
///   cos(a,omega)         V = a sum_i cos(omega x_i)     (C11)
///   gauss(a,s)           V = -a exp(-|x|^2 / 2 s^2)     (C11)
///   harmonic(k)          V = (k/2) |x|^2                (C11)
///   abs_sin(a,omega)     U = a sum_i |sin(omega x_i)|   (W1inf, kinks at k pi/omega)
///   sawtooth(a)          U = a sum_i dist(x_i, 2Z)      (W1inf, kinks at integers)
struct PotentialSpec {
  enum class Kind { zero, cos, gauss, harmonic, abs_sin, sawtooth };
  Kind kind = Kind::zero;
  double a = 1.0;
  double omega = 1.0;
  double s = 1.0;
  double k = 1.0;

  Regularity regularity() const {
    return (kind == Kind::abs_sin || kind == Kind::sawtooth) ? Regularity::W1inf
                                                             : Regularity::C11;
  }
  bool is_zero() const { return kind == Kind::zero; }
};

struct GradientValue {
  std::vector<double> g;
  bool at_kink = false;  // one-sided (left-limit) value returned
};

double evaluate(const PotentialSpec& p, std::span<const double> x);
GradientValue gradient(const PotentialSpec& p, std::span<const double> x);

struct NormEstimate {
  double value = 0.0;
  bool exact = true;  // closed form vs dense-sampling estimate
};

/// sup |V| and sup |grad V| (Euclidean). Closed forms are global L-infinity
/// values on R^d except for `harmonic`, whose sup is taken over the region
/// box. Fallback: dense sampling with 10*N points per axis.
NormEstimate sup_norm(const PotentialSpec& p, const SpatialGrid& region);
NormEstimate sup_norm_gradient(const PotentialSpec& p, const SpatialGrid& region);

/// Lipschitz constant of grad V; rejects W1inf-tagged potentials.
NormEstimate lipschitz_gradient(const PotentialSpec& p, const SpatialGrid& region);

/// Scenario-file grammar: `kind(param=value,...)`, e.g. `abs_sin(a=0.7,omega=1)`.
PotentialSpec parse_potential(const std::string& text);
std::string format_potential(const PotentialSpec& p);

}  // namespace sclab
