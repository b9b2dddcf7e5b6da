#include "sclab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace sclab {
namespace oracle {

Eigen::MatrixXcd hamiltonian_matrix(const SpatialGrid& g, double hbar,
                                    const HamiltonianSpec& h) {
  if (g.d != 1 || g.N > 256)
    throw std::invalid_argument("hamiltonian_matrix: oracle scale is d=1, N <= 256");
  h.validate();
  const int N = g.N;
  const auto mom = make_momentum_lattice(g, hbar);

  // unitary discrete transform in the sqrt(dx)-weighted basis
  Eigen::MatrixXcd U(N, N);
  const double s = std::sqrt(g.dx * mom.dp / (2.0 * std::numbers::pi * hbar));
  for (int k = 0; k < N; ++k)
    for (int j = 0; j < N; ++j)
      U(k, j) = s * std::polar(1.0, -mom.axis[k] * g.axis[j] / hbar);

  Eigen::VectorXd kin(N);
  for (int k = 0; k < N; ++k) kin(k) = 0.5 * mom.axis[k] * mom.axis[k];
  Eigen::MatrixXcd H = U.adjoint() * kin.asDiagonal() * U;

  for (int j = 0; j < N; ++j) {
    const double x = g.axis[j];
    double W = 0.5 * h.lambda * x * x;
    if (h.mu != 0.0) W += h.mu * evaluate(h.V, std::span<const double>(&x, 1));
    if (h.eps != 0.0) W += h.eps * evaluate(h.U, std::span<const double>(&x, 1));
    H(j, j) += W;
  }
  // symmetrize away roundoff
  H = 0.5 * (H + H.adjoint()).eval();
  return H;
}

Eigen::MatrixXcd dense_propagator(const SpatialGrid& g, double hbar,
                                  const HamiltonianSpec& h, double T) {
  const Eigen::MatrixXcd H = hamiltonian_matrix(g, hbar, h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("dense_propagator: eigendecomposition failed");
  const int N = g.N;
  Eigen::VectorXcd ph(N);
  for (int k = 0; k < N; ++k)
    ph(k) = std::polar(1.0, -T * es.eigenvalues()(k) / hbar);
  Eigen::MatrixXcd M =
      es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  const double unit_err =
      (M.adjoint() * M - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff();
  if (unit_err > 1e-10)
    throw std::runtime_error("dense_propagator: unitarity defect above 1e-10");
  return M;
}

WaveFunction apply_dense_propagator(const WaveFunction& w, const HamiltonianSpec& h,
                                    double T) {
  const Eigen::MatrixXcd M = dense_propagator(w.grid, w.hbar, h, T);
  Eigen::VectorXcd v(w.grid.N);
  for (int j = 0; j < w.grid.N; ++j) v(j) = w.psi[j];
  v = (M * v).eval();
  WaveFunction out = w;
  out.t = w.t + T;
  for (int j = 0; j < w.grid.N; ++j) out.psi[j] = v(j);
  return out;
}

PhaseSpaceField direct_wigner(const WaveFunction& w) {
  if (w.grid.d != 1 || w.grid.N > 512)
    throw std::invalid_argument("direct_wigner: d=1, N <= 512");
  const WaveFunction fine = refine2(w);
  const int M = fine.grid.N;
  const double dxf = fine.grid.dx;
  const double dy = 2.0 * dxf / w.hbar;
  const double dxi = 2.0 * std::numbers::pi / (M * dy);
  const double scale = dy / (2.0 * std::numbers::pi);

  PhaseSpaceField f;
  f.tag = PhaseSpaceField::Tag::wigner;
  f.hbar = w.hbar;
  f.qs = fine.grid.axis;
  f.ps.resize(M);
  for (int k = 0; k < M; ++k) f.ps[k] = (k - M / 2) * dxi;
  f.v.assign(std::size_t(M) * M, 0.0);

  for (int j = 0; j < M; ++j) {
    for (int k = 0; k < M; ++k) {
      const int n = k - M / 2;
      cxd acc = 0.0;
      for (int m = -M / 2; m < M / 2; ++m) {
        const int jp = ((j + m) % M + M) % M;
        const int jm = ((j - m) % M + M) % M;
        const double ph = -2.0 * std::numbers::pi * double(n) * double(m) / M;
        acc += fine.psi[jp] * std::conj(fine.psi[jm]) * std::polar(1.0, ph);
      }
      f.at(j, k) = (acc * scale).real();
    }
  }
  return f;
}

PhaseSpaceField smoothed_wigner(const PhaseSpaceField& w) {
  if (w.tag != PhaseSpaceField::Tag::wigner)
    throw std::invalid_argument("smoothed_wigner: expects a Wigner field");
  const std::size_t nq = w.qs.size(), np = w.ps.size();
  if (!is_pow2(nq) || !is_pow2(np))
    throw std::invalid_argument("smoothed_wigner: power-of-two lattice expected");
  const double sig = std::sqrt(w.hbar / 2.0);

  // periodized Gaussian kernels per axis, unit discrete mass
  auto kernel = [&](const std::vector<double>& nodes) {
    const std::size_t n = nodes.size();
    const double step = nodes[1] - nodes[0];
    const double span = step * double(n);
    std::vector<cxd> k(n);
    double mass = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double u = (j <= n / 2) ? step * double(j) : step * double(j) - span;
      const double v = std::exp(-u * u / (2 * sig * sig));
      k[j] = v;
      mass += v;
    }
    for (auto& x : k) x /= mass;
    fft_forward(k);
    return k;
  };
  const auto kq = kernel(w.qs);
  const auto kp = kernel(w.ps);

  // 2D FFT of the field, multiply by both kernel spectra, invert
  std::vector<cxd> F(w.v.begin(), w.v.end());
  std::vector<cxd> buf(std::max(nq, np));
  for (std::size_t i = 0; i < nq; ++i)
    fft_forward(std::span<cxd>(F.data() + i * np, np));
  for (std::size_t j = 0; j < np; ++j) {
    for (std::size_t i = 0; i < nq; ++i) buf[i] = F[i * np + j];
    fft_forward(std::span<cxd>(buf.data(), nq));
    for (std::size_t i = 0; i < nq; ++i)
      buf[i] *= kq[i] * kp[j];
    fft_inverse(std::span<cxd>(buf.data(), nq));
    for (std::size_t i = 0; i < nq; ++i) F[i * np + j] = buf[i];
  }
  for (std::size_t i = 0; i < nq; ++i)
    fft_inverse(std::span<cxd>(F.data() + i * np, np));

  PhaseSpaceField out = w;
  out.tag = PhaseSpaceField::Tag::husimi;
  for (std::size_t k = 0; k < out.v.size(); ++k) out.v[k] = F[k].real();
  return out;
}

// ---------------------------------------------------------------------------
// dense LP simplex oracle for tiny optimal transport instances
// ---------------------------------------------------------------------------

double exact_ot_small(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  mu.validate();
  nu.validate();
  const int m = int(mu.points.size());
  const int n = int(nu.points.size());
  if (m > 12 || n > 12)
    throw std::invalid_argument("exact_ot_small: support capped at 12 points");

  // equality constraints: m row sums + n-1 column sums (last is redundant)
  const int rows = m + n - 1;
  const int nx = m * n;
  const int cols = nx + rows;  // structural + artificial
  double cmax = 0.0;
  std::vector<double> c(cols, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      c[i * n + j] = quadratic_cost(mu.points[i], nu.points[j]);
      cmax = std::max(cmax, c[i * n + j]);
    }
  const double bigM = 1e7 * std::max(1.0, cmax);
  for (int k = nx; k < cols; ++k) c[k] = bigM;

  // tableau: rows x (cols + 1), plus objective row
  std::vector<std::vector<double>> T(rows + 1, std::vector<double>(cols + 1, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][i * n + j] = 1.0;
    T[i][cols] = mu.weights[i];
  }
  for (int j = 0; j < n - 1; ++j) {
    for (int i = 0; i < m; ++i) T[m + j][i * n + j] = 1.0;
    T[m + j][cols] = nu.weights[j];
  }
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) {
    basis[r] = nx + r;
    T[r][nx + r] = 1.0;
  }
  // objective row: reduced costs z_j - c_j for min problem, start from basis
  for (int k = 0; k < cols; ++k) {
    double zk = 0.0;
    for (int r = 0; r < rows; ++r) zk += bigM * T[r][k];
    T[rows][k] = zk - c[k];
  }
  T[rows][cols] = 0.0;
  for (int r = 0; r < rows; ++r) T[rows][cols] += bigM * T[r][cols];

  const double tol = 1e-11 * std::max(1.0, cmax);
  for (long iter = 0; iter < 100000; ++iter) {
    int enter = -1;  // Bland: first improving column
    for (int k = 0; k < cols; ++k)
      if (T[rows][k] > tol) {
        enter = k;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    double best = 0.0;
    for (int r = 0; r < rows; ++r)
      if (T[r][enter] > tol) {
        const double ratio = T[r][cols] / T[r][enter];
        if (leave < 0 || ratio < best - 1e-300 ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
    if (leave < 0) throw std::runtime_error("exact_ot_small: unbounded LP");
    const double piv = T[leave][enter];
    for (int k = 0; k <= cols; ++k) T[leave][k] /= piv;
    for (int r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double f = T[r][enter];
      if (f == 0.0) continue;
      for (int k = 0; k <= cols; ++k) T[r][k] -= f * T[leave][k];
    }
    basis[leave] = enter;
  }

  double cost = 0.0;
  for (int r = 0; r < rows; ++r) {
    if (basis[r] >= nx && T[r][cols] > 1e-8)
      throw std::runtime_error("exact_ot_small: infeasible (artificial in basis)");
    if (basis[r] < nx) cost += c[basis[r]] * T[r][cols];
  }
  return std::sqrt(std::max(0.0, cost));
}

double exact_ot_permutations(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  const int n = int(mu.points.size());
  if (int(nu.points.size()) != n || n > 8)
    throw std::invalid_argument("exact_ot_permutations: equal supports, n <= 8");
  for (double w : mu.weights)
    if (std::abs(w - 1.0 / n) > 1e-12)
      throw std::invalid_argument("exact_ot_permutations: uniform weights required");
  for (double w : nu.weights)
    if (std::abs(w - 1.0 / n) > 1e-12)
      throw std::invalid_argument("exact_ot_permutations: uniform weights required");

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += quadratic_cost(mu.points[i], nu.points[perm[i]]);
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::sqrt(best / n);
}

}  // namespace oracle
}  // namespace sclab
