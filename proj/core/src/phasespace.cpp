#include "sclab/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

namespace sclab {

double PhaseSpaceField::integral() const {
  double s = 0.0;
  for (double x : v) s += x;
  return s * cell();
}

double PhaseSpaceField::min_value() const {
  return *std::min_element(v.begin(), v.end());
}

bool PhaseSpaceField::same_lattice(const PhaseSpaceField& o) const {
  return hbar == o.hbar && qs == o.qs && ps == o.ps;
}

std::vector<double> PhaseSpaceField::x_marginal() const {
  std::vector<double> m(qs.size(), 0.0);
  for (std::size_t iq = 0; iq < qs.size(); ++iq) {
    double s = 0.0;
    for (std::size_t ip = 0; ip < ps.size(); ++ip) s += at(iq, ip);
    m[iq] = s * dp();
  }
  return m;
}

std::vector<double> PhaseSpaceField::xi_marginal() const {
  std::vector<double> m(ps.size(), 0.0);
  for (std::size_t ip = 0; ip < ps.size(); ++ip) {
    double s = 0.0;
    for (std::size_t iq = 0; iq < qs.size(); ++iq) s += at(iq, ip);
    m[ip] = s * dq();
  }
  return m;
}

WaveFunction refine2(const WaveFunction& w) {
  if (w.grid.d != 1) throw std::invalid_argument("refine2: d = 1 only");
  const int N = w.grid.N;
  const auto hat = forward_transform(w.grid, w.hbar, w.psi);
  const SpatialGrid g2 = make_grid(1, w.grid.L, 2 * N);
  Field hat2(2 * N, cxd(0.0));
  // momentum spacing depends only on L, so bins embed directly
  for (int m = 0; m < N; ++m) hat2[m + N / 2] = hat[m];
  WaveFunction out;
  out.grid = g2;
  out.hbar = w.hbar;
  out.t = w.t;
  out.psi = inverse_transform(g2, w.hbar, hat2);
  return out;
}

PhaseSpaceField wigner(const WaveFunction& w) {
  if (w.grid.d != 1) throw std::invalid_argument("wigner: d = 1 only");
  check_boundary_guard(w.grid, w.psi);
  const WaveFunction fine = refine2(w);
  const int M = fine.grid.N;  // 2N
  const double dxf = fine.grid.dx;
  const double dy = 2.0 * dxf / w.hbar;
  const double dxi = 2.0 * std::numbers::pi / (M * dy);

  PhaseSpaceField f;
  f.tag = PhaseSpaceField::Tag::wigner;
  f.hbar = w.hbar;
  f.qs.resize(M);
  f.ps.resize(M);
  for (int j = 0; j < M; ++j) f.qs[j] = fine.grid.axis[j];
  for (int k = 0; k < M; ++k) f.ps[k] = (k - M / 2) * dxi;
  f.v.assign(std::size_t(M) * M, 0.0);

  const double scale = dy / (2.0 * std::numbers::pi);
  double imag_residue = 0.0;
  std::vector<cxd> buf(M);
  for (int j = 0; j < M; ++j) {
    for (int m = -M / 2; m < M / 2; ++m) {
      const int jp = ((j + m) % M + M) % M;
      const int jm = ((j - m) % M + M) % M;
      buf[(m + M) % M] = fine.psi[jp] * std::conj(fine.psi[jm]);
    }
    fft_forward(buf);
    for (int k = 0; k < M; ++k) {
      const int n = k - M / 2;  // signed xi index
      const cxd val = buf[(n + M) % M] * scale;
      imag_residue = std::max(imag_residue, std::abs(val.imag()));
      f.at(j, k) = val.real();
    }
  }
  if (imag_residue > 1e-10)
    throw GuardError("wigner_imag", "wigner: imaginary residue above 1e-10");
  return f;
}

PhaseSpaceField husimi(const WaveFunction& w) {
  if (w.grid.d != 1) throw std::invalid_argument("husimi: d = 1 only");
  const WaveFunction fine = refine2(w);
  const int M = fine.grid.N;
  const double dxf = fine.grid.dx;
  const double L = fine.grid.L;
  const double hb = w.hbar;
  const double dxi = std::numbers::pi * hb / (2.0 * L);

  PhaseSpaceField f;
  f.tag = PhaseSpaceField::Tag::husimi;
  f.hbar = hb;
  f.qs.resize(M);
  f.ps.resize(M);
  for (int j = 0; j < M; ++j) f.qs[j] = fine.grid.axis[j];
  for (int k = 0; k < M; ++k) f.ps[k] = (k - M / 2) * dxi;
  f.v.assign(std::size_t(M) * M, 0.0);

  // Gaussian window, periodized by minimum-image distance
  std::vector<cxd> win(M);
  for (int j = 0; j < M; ++j) {
    const double u = (j <= M / 2) ? j * dxf : (j - M) * dxf;
    win[j] = std::exp(-u * u / (2.0 * hb));
  }
  fft_forward(win);

  const double amp = std::pow(std::numbers::pi * hb, -0.25) * dxf;
  const double hnorm = 1.0 / (2.0 * std::numbers::pi * hb);
  std::vector<cxd> phi(M);
  for (int k = 0; k < M; ++k) {
    const double p = f.ps[k];
    for (int j = 0; j < M; ++j)
      phi[j] = std::polar(1.0, -p * fine.grid.axis[j] / hb) * fine.psi[j];
    fft_forward(phi);
    for (int j = 0; j < M; ++j) phi[j] *= std::conj(win[j]);
    fft_inverse(phi);
    for (int j = 0; j < M; ++j) {
      const double ov = std::norm(amp * phi[j]);
      f.at(j, k) = ov * hnorm;
    }
  }
  return f;
}

TightnessReport tightness_report(const WaveFunction& w, double R) {
  if (!(R > 0.0) || R >= 0.9 * w.grid.L)
    throw std::invalid_argument("tightness_report: require 0 < R < 0.9 L");
  TightnessReport rep;
  const double cell = w.grid.cell_volume();
  for (std::size_t i = 0; i < w.psi.size(); ++i) {
    double r2 = 0.0;
    for (int ax = 0; ax < w.grid.d; ++ax) {
      const double x = w.grid.coord(i, ax);
      r2 += x * x;
    }
    if (r2 > R * R) rep.x_mass_outside += std::norm(w.psi[i]) * cell;
  }
  const auto hat = forward_transform(w.grid, w.hbar, w.psi);
  const auto mom = make_momentum_lattice(w.grid, w.hbar);
  const double pcell = std::pow(mom.dp, w.grid.d);
  for (std::size_t i = 0; i < hat.size(); ++i) {
    double r2 = 0.0;
    for (int ax = 0; ax < w.grid.d; ++ax) {
      const double p = mom.axis[w.grid.index_along(i, ax)];
      r2 += p * p;
    }
    if (r2 > R * R) rep.p_mass_outside += std::norm(hat[i]) * pcell;
  }
  return rep;
}

void toeplitz_lattice(const SpatialGrid& g, double hbar, std::vector<double>& qs,
                      std::vector<double>& ps) {
  qs = g.axis;
  ps = make_momentum_lattice(g, hbar).axis;
}

Eigen::MatrixXcd toeplitz_quantize(const SpatialGrid& g, double hbar,
                                   const std::function<double(double, double)>& f,
                                   const std::vector<double>& qs,
                                   const std::vector<double>& ps) {
  if (g.d != 1 || g.N > 256)
    throw std::invalid_argument("toeplitz_quantize: oracle scale is d=1, N <= 256");
  const int N = g.N;
  const double dz = (qs[1] - qs[0]) * (ps[1] - ps[0]);

  double fmax = 0.0;
  for (double q : qs)
    for (double p : ps) fmax = std::max(fmax, std::abs(f(q, p)));
  const double cutoff = fmax * 1e-14;

  Eigen::MatrixXcd F = Eigen::MatrixXcd::Zero(N, N);
  Eigen::VectorXcd u(N);
  for (double q : qs) {
    for (double p : ps) {
      const double fz = f(q, p);
      if (std::abs(fz) <= cutoff) continue;
      for (int j = 0; j < N; ++j) {
        const double x = g.axis[j];
        u(j) = std::polar(std::exp(-(x - q) * (x - q) / (2.0 * hbar)), p * x / hbar);
      }
      u.normalize();  // unit norm in the sqrt(dx)-weighted basis
      F.selfadjointView<Eigen::Lower>().rankUpdate(u, fz * dz);
    }
  }
  return F.selfadjointView<Eigen::Lower>();
}

namespace {

void color_map(double t, int& r, int& gc, int& b) {
  // diverging blue-white-red on [-1, 1]
  t = std::clamp(t, -1.0, 1.0);
  if (t < 0) {
    r = int(255 * (1.0 + t));
    gc = int(255 * (1.0 + t));
    b = 255;
  } else {
    r = 255;
    gc = int(255 * (1.0 - t));
    b = int(255 * (1.0 - t));
  }
}

}  // namespace

void write_field_csv(const PhaseSpaceField& f, const std::string& path) {
  std::ofstream os(path);
  os << "x,xi,value\n";
  os.precision(17);
  for (std::size_t iq = 0; iq < f.qs.size(); ++iq)
    for (std::size_t ip = 0; ip < f.ps.size(); ++ip)
      os << f.qs[iq] << ',' << f.ps[ip] << ',' << f.at(iq, ip) << '\n';
}

void write_field_svg(const PhaseSpaceField& f, const std::string& path,
                     int max_cells_per_axis) {
  const int nq = int(f.qs.size());
  const int np = int(f.ps.size());
  const int bq = std::max(1, nq / max_cells_per_axis);
  const int bp = std::max(1, np / max_cells_per_axis);
  const int mq = nq / bq, mp = np / bp;

  std::vector<double> block(std::size_t(mq) * mp, 0.0);
  double vmax = 1e-300;
  for (int i = 0; i < mq; ++i)
    for (int j = 0; j < mp; ++j) {
      double s = 0.0;
      for (int a = 0; a < bq; ++a)
        for (int b = 0; b < bp; ++b) s += f.at(i * bq + a, j * bp + b);
      s /= bq * bp;
      block[std::size_t(i) * mp + j] = s;
      vmax = std::max(vmax, std::abs(s));
    }

  const int cw = 4;
  std::ofstream os(path);
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << mq * cw << "' height='"
     << mp * cw << "'>\n";
  for (int i = 0; i < mq; ++i)
    for (int j = 0; j < mp; ++j) {
      int r, g, b;
      color_map(block[std::size_t(i) * mp + j] / vmax, r, g, b);
      os << "<rect x='" << i * cw << "' y='" << (mp - 1 - j) * cw << "' width='" << cw
         << "' height='" << cw << "' fill='rgb(" << r << ',' << g << ',' << b
         << ")'/>\n";
    }
  os << "</svg>\n";
}

}  // namespace sclab
