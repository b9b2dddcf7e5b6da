#pragma once

#include <string>
#include <vector>

namespace sclab {

/// 1D factor built from a small closed algebra of atoms
/// (polynomial x Gaussian, trig x Gaussian, erf x polynomial x Gaussian)
/// so that derivatives up to order 3 are available analytically.
class Factor1D {
 public:
  struct Poly {
    std::vector<double> c;  // ascending coefficients
    double operator()(double v) const;
    Poly deriv() const;
    Poly mul_v() const;
    Poly scaled(double s) const;
    Poly plus(const Poly& o) const;
  };
  struct AtomHG {  // P(v) e^{-v^2/2s^2}
    Poly P;
    double sigma;
  };
  struct AtomTG {  // (Pc(v) cos kv + Ps(v) sin kv) e^{-v^2/2s^2}
    Poly Pc, Ps;
    double k, sigma;
  };
  struct AtomEG {  // erf(v/(sqrt2 s)) P(v) e^{-v^2/2w^2}
    Poly P;
    double s, w;
  };
  struct Rep {
    std::vector<AtomHG> hg;
    std::vector<AtomTG> tg;
    std::vector<AtomEG> eg;
  };

  double center = 0.0;
  Rep rep[4];                  // value and derivatives 1..3 (w.r.t. u)
  double sup[4] = {0, 0, 0, 0};
  double l1[4] = {0, 0, 0, 0};
  bool exact_norms = false;

  double value(double u) const;
  double deriv(int k, double u) const;

  /// Fill rep[1..3] by symbolic differentiation, then compute sup/L1 norms.
  /// Pure Gaussians get closed forms; everything else is densely sampled
  /// with a 1.1 safety factor so normalized entries stay admissible.
  void finalize();
};

Factor1D gauss_factor(double center, double sigma, double amp = 1.0);
Factor1D cos_gauss_factor(double center, double k, double phase, double sigma,
                          double amp = 1.0);
Factor1D erf_ramp_factor(double center, double s, double w, double amp = 1.0);
Factor1D parabola_gauss_factor(double center, double window, double amp = 1.0);
Factor1D constant_factor(double amp = 1.0);  // sup norms only; L1 is infinite

/// Product test function f(q,p) = Fq(q) Fp(p) with precomputed norm data:
///   sup_max = max_{a+b <= 3}  |d_q^a d_p^b f|_inf     (delta constraint)
///   l1_max  = max_{a,b <= 3}  |d_q^a d_p^b f|_L1      (d constraint)
struct DictionaryEntry {
  std::string name;
  Factor1D fq, fp;
  double sup_max = 0.0;
  double l1_max = 0.0;   // infinity if a factor is not integrable
  bool norms_exact = false;

  double eval(double q, double p) const { return fq.value(q) * fp.value(p); }
};

DictionaryEntry make_entry(const std::string& name, Factor1D fq, Factor1D fp);

struct TestDictionary {
  std::string id;
  std::vector<DictionaryEntry> entries;

  TestDictionary head(std::size_t k) const;  // first k entries (nesting tests)
};

/// Fixed dictionary used by the sweep drivers: Gaussian bumps on a ring
/// covering the orbit region, oscillatory probes, and odd ramps.
TestDictionary standard_dictionary();

/// Dictionary for a coherent pair separated along the q axis at p = 0:
/// standard entries plus pair-adapted bumps, the odd ramp through the
/// midpoint, and the convex parabola profile anchored at z2.
TestDictionary pair_dictionary(double q1, double q2);

}  // namespace sclab
