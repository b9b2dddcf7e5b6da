#pragma once

#include <string>

namespace sclab {
namespace bounds {

/// Gronwall rate: Lambda = 1 - lambda + mu * Lip(grad V).
double lambda_rate(double lambda, double mu, double lip_grad_v);

/// (e^{|t| Lambda} - 1) / Lambda, extended continuously (= |t|) at Lambda = 0;
/// series branch below |Lambda t| = 1e-6.
double gronwall_phi(double t, double lambda_rate);

/// gamma(t) = phi(t, Lambda) * |grad U|_inf *
///            [ sqrt(E0 + 2 mu|V|) + sqrt(Eeps + 2 mu|V| + 2 eps|U|) ].
double gamma_aggregate(double t, double lambda_rate, double grad_u_sup, double e0,
                       double e_eps, double mu_v_sup, double eps_u_sup);

struct CdConstant {
  double gamma_d = 0.0;  // Calderon-Vaillancourt-type bound
  double c_d = 0.0;      // (1 + gamma_d / sqrt(pi)) * 2d
};
CdConstant cd_constant(int d);

/// Everything needed to evaluate the right-hand sides for one sweep cell.
struct BoundConstants {
  int d = 1;
  double lambda = 1.0, mu = 0.0, eps = 0.0;
  double v_sup = 0.0, u_sup = 0.0, grad_u_sup = 0.0, lip_grad_v = 0.0;
  double e0 = 0.0, e_eps = 0.0;      // <psi_in, H_0^{lambda,0} psi_in>
  double e_harmonic = 0.0;           // <psi_in, H psi_in> with the full oscillator
  double delta_in = 0.0;             // Delta(psi_in)
  bool toeplitz_data = false;        // use D' = 2d instead of 2 Delta^2/hbar
  double alpha = 0.5;                // spread exponent; 0.5 = standard hypothesis
};

struct Theorem1Rhs {
  double lambda_rate = 0.0;
  double gamma_t = 0.0;
  double c_t = 0.0;       // 2^{2d+1} gamma(t)
  double d_prime = 0.0;   // 2 Delta(psi_in)^2 / hbar  (or 2d for Toeplitz data)
  double d_t = 0.0;       // e^{|t| mu Lip} 2^{2d+1} (D' + C_d^2)
  double value = 0.0;     // C(t) eps + D(t) hbar^{2 alpha}  (hbar at alpha = 1/2)
};
Theorem1Rhs theorem1_rhs(double t, double eps, double hbar, const BoundConstants& k);

struct Corollary2Rhs {
  double e_first = 0.0;    // min(sqrt(C+D), 2|t| |U|_inf)        [proof power]
  double e_literal = 0.0;  // min(sqrt(C+D), 2|t| |U|_inf^2)      [printed power]
  double value_first = 0.0;    // e_first * eps^{1/3}
  double value_literal = 0.0;  // e_literal * eps^{1/3}
  double branch_sqrt = 0.0;    // sqrt(C eps + D hbar)
  double branch_duhamel = 0.0; // 2|t| eps |U|_inf / hbar
  double lhs_min = 0.0;        // min of the two branches
  /// the regime-selected envelope the interpolation argument actually yields
  double regime_envelope = 0.0;
};
Corollary2Rhs corollary2_rhs(double t, double eps, double hbar,
                             const BoundConstants& k);

/// 2 t eps |U|_inf / hbar; vacuous above 2 (trace distance saturates).
double duhamel_rhs(double t, double eps, double hbar, double u_sup);

}  // namespace bounds
}  // namespace sclab
