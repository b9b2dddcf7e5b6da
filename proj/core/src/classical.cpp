#include "sclab/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "sclab/phasespace.hpp"
#include "sclab/rng.hpp"

namespace sclab {

namespace {

void force(double lam_eff, double mu, const PotentialSpec& V,
           const std::vector<double>& q, std::vector<double>& f) {
  f.assign(q.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i) f[i] = -lam_eff * q[i];
  if (mu != 0.0) {
    const auto g = gradient(V, q);
    for (std::size_t i = 0; i < q.size(); ++i) f[i] -= mu * g.g[i];
  }
}

}  // namespace

PhasePoint flow(double lambda, double mu, const PotentialSpec& V, PhasePoint z0,
                double T, double dt, FlowConvention conv) {
  if (V.regularity() != Regularity::C11)
    throw std::invalid_argument("flow: V must be C11-tagged");
  if (!(dt > 0.0)) throw std::invalid_argument("flow: dt must be positive");
  const double lam_eff = (conv == FlowConvention::liouville) ? lambda : 1.0 - lambda;
  if (T == 0.0) return z0;

  const long n = std::max<long>(1, long(std::ceil(std::abs(T) / dt - 1e-12)));
  const double h = T / double(n);  // signed step

  std::vector<double> f, fnew;
  force(lam_eff, mu, V, z0.q, f);
  for (long s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < z0.q.size(); ++i)
      z0.q[i] += h * z0.p[i] + 0.5 * h * h * f[i];
    force(lam_eff, mu, V, z0.q, fnew);
    for (std::size_t i = 0; i < z0.p.size(); ++i)
      z0.p[i] += 0.5 * h * (f[i] + fnew[i]);
    f.swap(fnew);
  }
  return z0;
}

Ensemble pushforward(const Ensemble& in, double lambda, double mu,
                     const PotentialSpec& V, double T, double dt,
                     FlowConvention conv) {
  Ensemble out = in;
  for (auto& z : out.points) z = flow(lambda, mu, V, z, T, dt, conv);
  return out;
}

Ensemble sample_from_field(const PhaseSpaceField& f, int n, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("sample_from_field: n must be positive");
  const double mn = f.min_value();
  if (mn < -1e-6)
    throw std::invalid_argument(
        "sample_from_field: field has negative mass (use the Husimi transform)");
  const double total = f.integral();
  if (std::abs(total - 1.0) > 1e-3)
    throw std::invalid_argument("sample_from_field: field mass not within 1e-3 of 1");

  // systematic sampling: one uniform offset, n strata over the cell CDF
  Rng rng(seed);
  const double u0 = rng.uniform() / n;
  const std::size_t nc = f.v.size();
  Ensemble out;
  out.points.reserve(n);
  out.weights.assign(n, 1.0 / n);

  double cum = 0.0;
  std::size_t cell = 0;
  double cell_mass = std::max(0.0, f.v[0]) / total * f.cell();
  for (int k = 0; k < n; ++k) {
    const double target = u0 + double(k) / n;
    while (cum + cell_mass < target && cell + 1 < nc) {
      cum += cell_mass;
      ++cell;
      cell_mass = std::max(0.0, f.v[cell]) / total * f.cell();
    }
    const std::size_t iq = cell / f.ps.size();
    const std::size_t ip = cell % f.ps.size();
    PhasePoint z;
    z.q = {f.qs[iq]};
    z.p = {f.ps[ip]};
    out.points.push_back(std::move(z));
  }
  return out;
}

}  // namespace sclab
