#include "sclab/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "sclab/density.hpp"
#include "sclab/metrics.hpp"
#include "sclab/oracle.hpp"
#include "sclab/pool.hpp"
#include "sclab/report.hpp"
#include "sclab/rng.hpp"
#include "sclab/transport.hpp"

namespace sclab {

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool VerifyReport::any_guard() const {
  for (const auto& r : rows)
    if (r.guard_flags != "ok") return true;
  return false;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  os << "== " << title << " ==\n";
  for (const auto& c : checks)
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
       << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
  return os.str();
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys,
                 bool log_log) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (log_log && (xs[i] <= 0 || ys[i] <= 0)) continue;
    x.push_back(log_log ? std::log(xs[i]) : xs[i]);
    y.push_back(log_log ? std::log(ys[i]) : ys[i]);
  }
  if (x.size() < 2) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return den > 0 ? num / den : 0.0;
}

namespace {

std::string fmt3(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

VerifyReport verify_theorem1(const ScenarioConfig& cfg, const DriverOptions& opt) {
  VerifyReport rep;
  rep.title = "theorem-1 bound: measured weak distances vs C(t) eps + D(t) hbar";
  SweepOptions so;
  so.workers = opt.workers;
  rep.rows = run_sweep(cfg, so);

  int fail = 0, guards = 0;
  for (const auto& r : rep.rows) {
    if (r.guard_flags != "ok") ++guards;
    else if (!r.pass_thm1) ++fail;
  }
  rep.checks.push_back({"per-cell (2^d delta)^2 and d_lower^2 <= C(t)eps + D(t)hbar",
                        fail == 0 && guards == 0,
                        std::to_string(rep.rows.size() - fail - guards) + "/" +
                            std::to_string(rep.rows.size()) + " cells pass" +
                            (guards ? ", " + std::to_string(guards) + " guard-aborted"
                                    : "")});

  // eps-scaling of the measured delta at fixed hbar = 0.05 (or nearest)
  double hfix = cfg.hbar_list[0];
  for (double h : cfg.hbar_list)
    if (std::abs(h - 0.05) < std::abs(hfix - 0.05)) hfix = h;
  for (double tv : cfg.t_list) {
    std::vector<double> es, ds;
    for (const auto& r : rep.rows)
      if (r.hbar == hfix && r.t == tv && r.eps > 0 && r.guard_flags == "ok") {
        es.push_back(r.eps);
        ds.push_back(r.delta_meas);
      }
    const double slope = fit_slope(es, ds, true);
    rep.checks.push_back(
        {"log-log eps-slope of measured delta at hbar=" + fmt3(hfix) +
             ", T=" + fmt3(tv) + " within sqrt(eps) envelope fit (<= 0.6)",
         slope <= 0.6 && !es.empty(),
         "slope = " + fmt3(slope)});
  }

  if (!opt.out_dir.empty()) {
    ensure_directory(opt.out_dir);
    write_csv(rep.rows, opt.out_dir + "/theorem1_sweep.csv");
    const double tfix = cfg.t_list.back();
    SvgPlot pe("measured vs bound, hbar=" + fmt3(hfix) + " T=" + fmt3(tfix), "eps",
               "value", true, true);
    std::vector<double> es, m2, rhs;
    for (const auto& r : rep.rows)
      if (r.hbar == hfix && r.t == tfix && r.eps > 0 && r.guard_flags == "ok") {
        es.push_back(r.eps);
        const double twod = std::pow(2.0, cfg.d);
        m2.push_back(twod * r.delta_meas * twod * r.delta_meas);
        rhs.push_back(r.rhs_thm1);
      }
    pe.add_series("(2^d delta)^2", es, m2);
    pe.add_series("C(t)eps + D(t)hbar", es, rhs);
    pe.write(opt.out_dir + "/theorem1_vs_eps.svg");

    const double efix = cfg.eps_list[cfg.eps_list.size() / 2];
    SvgPlot ph("measured vs bound, eps=" + fmt3(efix) + " T=" + fmt3(tfix), "hbar",
               "value", true, true);
    std::vector<double> hs, m2h, rhsh;
    for (const auto& r : rep.rows)
      if (r.eps == efix && r.t == tfix && r.guard_flags == "ok") {
        hs.push_back(r.hbar);
        const double twod = std::pow(2.0, cfg.d);
        m2h.push_back(twod * r.delta_meas * twod * r.delta_meas);
        rhsh.push_back(r.rhs_thm1);
      }
    ph.add_series("(2^d delta)^2", hs, m2h);
    ph.add_series("C(t)eps + D(t)hbar", hs, rhsh);
    ph.write(opt.out_dir + "/theorem1_vs_hbar.svg");
  }
  return rep;
}

VerifyReport verify_corollary2(const ScenarioConfig& cfg, const DriverOptions& opt) {
  VerifyReport rep;
  rep.title = "corollary-2 envelope: min(sqrt(C eps + D hbar), Duhamel) vs E(t) eps^{1/3}";
  SweepOptions so;
  so.workers = opt.workers;
  so.with_w2 = false;
  rep.rows = run_sweep(cfg, so);

  const SpatialGrid grid = make_grid(cfg.d, cfg.L, cfg.N);
  const double u_sup = sup_norm(cfg.U, grid).value;
  const double v_sup = sup_norm(cfg.V, grid).value;
  const double lip_v = cfg.mu == 0.0 ? 0.0 : lipschitz_gradient(cfg.V, grid).value;

  int fail_min = 0, fail_regime = 0, fail_literal = 0, guards = 0;
  double worst_ratio = 0.0;
  for (const auto& r : rep.rows) {
    if (r.guard_flags != "ok") {
      ++guards;
      continue;
    }
    bounds::BoundConstants k;
    k.d = cfg.d;
    k.lambda = cfg.lambda;
    k.mu = cfg.mu;
    k.eps = r.eps;
    k.v_sup = v_sup;
    k.u_sup = u_sup;
    k.grad_u_sup = sup_norm_gradient(cfg.U, grid).value;
    k.lip_grad_v = lip_v;
    k.e0 = r.e0;
    k.e_eps = r.e_eps;
    k.delta_in = r.delta_in;
    k.alpha = cfg.alpha;
    if (r.eps <= 0) continue;
    const auto c2 = bounds::corollary2_rhs(r.t, r.eps, r.hbar, k);
    if (!(c2.lhs_min <= c2.value_first + 1e-12)) ++fail_min;
    if (!(c2.lhs_min <= c2.value_literal + 1e-12)) ++fail_literal;
    if (!(c2.lhs_min <= c2.regime_envelope + 1e-12)) ++fail_regime;
    if (c2.value_first > 0) worst_ratio = std::max(worst_ratio, c2.lhs_min / c2.value_first);
  }
  rep.checks.push_back(
      {"per-cell min-branch <= E(t) eps^{1/3} (min-form constant, first power)",
       fail_min == 0 && guards == 0,
       "worst lhs/rhs = " + fmt3(worst_ratio) +
           (fail_min ? ", " + std::to_string(fail_min) + " cells exceed" : "")});
  rep.checks.push_back(
      {"per-cell min-branch <= regime-selected envelope (interpolation step)",
       fail_regime == 0 && guards == 0,
       fail_regime == 0 ? "holds on every cell"
                        : std::to_string(fail_regime) + " cells exceed"});
  rep.checks.push_back(
      {"literal squared-|U| reading (reported, not gating)", true,
       std::to_string(fail_literal) + " cells exceed that constant"});

  if (!opt.out_dir.empty()) {
    ensure_directory(opt.out_dir);
    write_csv(rep.rows, opt.out_dir + "/corollary2_sweep.csv");
    for (double eps : cfg.eps_list) {
      if (eps <= 0) continue;
      SvgPlot pl("corollary-2 branches, eps=" + fmt3(eps) + ", T=" +
                     fmt3(cfg.t_list.back()),
                 "hbar", "value", true, true);
      std::vector<double> hs, b1, b2, env;
      for (const auto& r : rep.rows)
        if (r.eps == eps && r.t == cfg.t_list.back() && r.guard_flags == "ok") {
          hs.push_back(r.hbar);
          b1.push_back(std::sqrt(r.rhs_thm1));
          b2.push_back(r.rhs_duhamel);
          env.push_back(r.rhs_cor2);
        }
      pl.add_series("sqrt(C eps + D hbar)", hs, b1);
      pl.add_series("2 t eps |U|/hbar", hs, b2);
      pl.add_series("E(t) eps^{1/3}", hs, env);
      pl.write(opt.out_dir + "/corollary2_eps" + fmt3(eps) + ".svg");
    }
  }
  return rep;
}

VerifyReport verify_coherent_distance(const ScenarioConfig& cfg,
                                      const DriverOptions& opt,
                                      std::vector<double> separations,
                                      std::vector<double> hbars) {
  VerifyReport rep;
  rep.title = "coherent-pair sandwich: dictionary d-estimate vs the explicit bounds";
  if (separations.empty()) separations = {0.2, 0.5, 1.0, 1.5, 2.0};
  if (hbars.empty()) hbars = {0.02, 0.05, 0.1};
  const SpatialGrid grid = make_grid(1, cfg.L, cfg.N);
  const double cd = bounds::cd_constant(1).c_d;

  struct Cell {
    double hbar, r, d_lower;
  };
  std::vector<Cell> cells(hbars.size() * separations.size());
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t ih = 0; ih < hbars.size(); ++ih)
    for (std::size_t ir = 0; ir < separations.size(); ++ir) idx.push_back({ih, ir});

  parallel_for(idx.size(), opt.workers, [&](std::size_t k) {
    const auto [ih, ir] = idx[k];
    const double hb = hbars[ih];
    const double r = separations[ir];
    const WaveFunction a = coherent_state(grid, hb, r, 0.0);
    const WaveFunction b = coherent_state(grid, hb, 0.0, 0.0);
    const TestDictionary dict = pair_dictionary(r, 0.0);
    cells[ih * separations.size() + ir] = {hb, r, weak_d_lower(a, b, dict)};
  });

  bool upper_ok = true;
  double upper_margin = 1e300;
  for (const auto& c : cells) {
    const double lhs = 2.0 * c.d_lower;
    const double rhs = 2.0 * std::sqrt(c.r * c.r + 2.0 * c.hbar) + cd * c.hbar;
    upper_ok = upper_ok && lhs <= rhs;
    upper_margin = std::min(upper_margin, rhs - lhs);
  }
  rep.checks.push_back({"upper chain 2^d d_est <= 2^d sqrt(r^2 + 2 d hbar) + C_d hbar",
                        upper_ok, "min margin = " + fmt3(upper_margin)});

  for (std::size_t ih = 0; ih < hbars.size(); ++ih) {
    std::vector<double> rs, ys;
    for (std::size_t ir = 0; ir < separations.size(); ++ir) {
      rs.push_back(separations[ir]);
      ys.push_back(2.0 * cells[ih * separations.size() + ir].d_lower);
    }
    const double slope = fit_slope(rs, ys, false);
    // largest C with C*r - hbar <= y on every pair
    double cfit = 1e300;
    for (std::size_t i = 0; i < rs.size(); ++i)
      cfit = std::min(cfit, (ys[i] + hbars[ih]) / rs[i]);
    rep.checks.push_back(
        {"linear growth at hbar=" + fmt3(hbars[ih]) + ": slope >= 0.1",
         slope >= 0.1, "slope = " + fmt3(slope) + ", C_fit = " + fmt3(cfit)});
    rep.checks.push_back({"lower-frame constant positive at hbar=" + fmt3(hbars[ih]),
                          cfit > 0, "C_fit = " + fmt3(cfit)});
  }

  if (!opt.out_dir.empty()) {
    ensure_directory(opt.out_dir);
    SvgPlot pl("coherent-pair distance estimates", "|z1 - z2|", "2^d d_est", false,
               false);
    for (std::size_t ih = 0; ih < hbars.size(); ++ih) {
      std::vector<double> rs, ys;
      for (std::size_t ir = 0; ir < separations.size(); ++ir) {
        rs.push_back(separations[ir]);
        ys.push_back(2.0 * cells[ih * separations.size() + ir].d_lower);
      }
      pl.add_series("hbar=" + fmt3(hbars[ih]), rs, ys);
    }
    std::vector<double> rs, ub;
    for (double r : separations) {
      rs.push_back(r);
      ub.push_back(2.0 * std::sqrt(r * r + 2.0 * hbars.back()) + cd * hbars.back());
    }
    pl.add_series("upper bound (largest hbar)", rs, ub);
    pl.write(opt.out_dir + "/coherent_distance.svg");
  }
  return rep;
}

VerifyReport verify_classical_limit(const ScenarioConfig& cfg,
                                    const DriverOptions& opt) {
  VerifyReport rep;
  rep.title = "classical-limit surrogate: W2^2 vs the Gronwall transport bound";
  const SpatialGrid grid = make_grid(1, cfg.L, cfg.N);
  const double T = 1.0;
  const int replicates = 4;

  const double u_sup = sup_norm(cfg.U, grid).value;
  const double v_sup = sup_norm(cfg.V, grid).value;
  const double gu_sup = sup_norm_gradient(cfg.U, grid).value;
  const double lip_v = cfg.mu == 0.0 ? 0.0 : lipschitz_gradient(cfg.V, grid).value;

  struct Cell {
    double hbar, eps;
    double w2_mean = 0, w2sq_mean = 0, w2sq_sd = 0, rhs = 0;
    bool pass = false;
  };
  std::vector<std::pair<double, double>> params = {
      {0.05, 1e-3}, {0.05, 1e-2}, {0.1, 1e-2}, {0.2, 1e-2}};
  std::vector<Cell> cells(params.size());

  parallel_for(params.size(), opt.workers, [&](std::size_t ci) {
    const auto [hb, eps] = params[ci];
    Cell c;
    c.hbar = hb;
    c.eps = eps;
    const WaveFunction psi_in = initial_state(cfg, grid, hb);
    const HamiltonianSpec he = hamiltonian_from_config(cfg, eps);
    const WaveFunction psie = propagate(psi_in, he, T, cfg.dt);
    const PhaseSpaceField h_t = husimi(psie);
    const PhaseSpaceField h_in = husimi(psi_in);

    std::vector<double> w2sq(replicates);
    for (int rep_i = 0; rep_i < replicates; ++rep_i) {
      const auto sq = mix_seed(cfg.seed, 900 + ci, rep_i, 0);
      const auto sc = mix_seed(cfg.seed, 900 + ci, rep_i, 1);
      Ensemble eq = sample_from_field(h_t, cfg.ot_samples, sq);
      Ensemble ec = sample_from_field(h_in, cfg.ot_samples, sc);
      ec = pushforward(ec, cfg.lambda, cfg.mu, cfg.V, T, cfg.dt,
                       cfg.flow_convention());
      const double w2 = w2_exact(DiscreteMeasure::from_ensemble(eq),
                                 DiscreteMeasure::from_ensemble(ec))
                            .w2;
      w2sq[rep_i] = w2 * w2;
      c.w2_mean += w2 / replicates;
    }
    for (double v : w2sq) c.w2sq_mean += v / replicates;
    double var = 0;
    for (double v : w2sq) var += (v - c.w2sq_mean) * (v - c.w2sq_mean);
    c.w2sq_sd = std::sqrt(var / (replicates - 1));

    const double delta_in = delta_spread(psi_in);
    const double e0 = energy(psi_in, cfg.lambda, 0.0, PotentialSpec{});
    const double rate = bounds::lambda_rate(cfg.lambda, cfg.mu, lip_v);
    const double gamma_t =
        bounds::gamma_aggregate(T, rate, gu_sup, e0, e0, cfg.mu * v_sup, eps * u_sup);
    const double tol_ot = 3.0 * c.w2sq_sd;
    c.rhs = std::exp(T * rate) * 2.0 * delta_in * delta_in + gamma_t * eps +
            2.0 * 1.0 * hb + tol_ot;
    c.pass = c.w2sq_mean <= c.rhs;
    cells[ci] = c;
  });

  for (const auto& c : cells)
    rep.checks.push_back(
        {"W2^2 bound at hbar=" + fmt3(c.hbar) + ", eps=" + fmt3(c.eps), c.pass,
         "W2^2 = " + fmt3(c.w2sq_mean) + " <= " + fmt3(c.rhs) +
             " (tol_OT = 3 sd = " + fmt3(3.0 * c.w2sq_sd) + ")"});

  const bool mono = cells[3].w2_mean > cells[2].w2_mean &&
                    cells[2].w2_mean > cells[1].w2_mean;
  rep.checks.push_back(
      {"W2 decreases with hbar through {0.2, 0.1, 0.05} at eps=1e-2", mono,
       fmt3(cells[3].w2_mean) + " > " + fmt3(cells[2].w2_mean) + " > " +
           fmt3(cells[1].w2_mean)});

  if (!opt.out_dir.empty()) {
    ensure_directory(opt.out_dir);
    SvgPlot pl("W2 vs hbar at eps=1e-2 (T=1)", "hbar", "W2", false, false);
    std::vector<double> hs = {cells[1].hbar, cells[2].hbar, cells[3].hbar};
    std::vector<double> ws = {cells[1].w2_mean, cells[2].w2_mean, cells[3].w2_mean};
    pl.add_series("W2 (mean of replicates)", hs, ws);
    pl.write(opt.out_dir + "/classical_limit_w2.svg");
  }
  return rep;
}

VerifyReport selftest_oracles(const DriverOptions& opt) {
  VerifyReport rep;
  rep.title = "oracle pairings";
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    rep.checks.push_back({name, pass, detail});
  };

  {  // FFT vs direct DFT
    Rng rng(7);
    std::vector<cxd> a(64);
    for (auto& v : a) v = cxd(rng.uniform(-1, 1), rng.uniform(-1, 1));
    auto ref = dft_reference(a, false);
    std::vector<cxd> fast = a;
    fft_forward(fast);
    double err = 0;
    for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(fast[i] - ref[i]));
    add("fft vs reference DFT (N=64)", err < 1e-10, "max err = " + fmt3(err));
  }

  const SpatialGrid g = make_grid(1, 5.5, 128);
  const double hb = 0.1;
  {  // round trip + Parseval
    Rng rng(11);
    Field f(g.size());
    for (auto& v : f) v = cxd(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto hat = forward_transform(g, hb, f);
    const auto back = inverse_transform(g, hb, hat);
    double err = 0;
    for (std::size_t i = 0; i < f.size(); ++i) err = std::max(err, std::abs(back[i] - f[i]));
    double n1 = 0, n2 = 0;
    for (const auto& v : f) n1 += std::norm(v);
    for (const auto& v : hat) n2 += std::norm(v);
    n1 *= g.dx;
    n2 *= make_momentum_lattice(g, hb).dp;
    add("transform round-trip and Parseval", err < 1e-12 && std::abs(n1 - n2) < 1e-12 * n1,
        "err = " + fmt3(err));
  }

  {  // Wigner fast vs direct
    WaveFunction a = coherent_state(g, hb, 0.7, 0.4);
    const auto fast = wigner(a);
    const auto direct = oracle::direct_wigner(a);
    double err = 0;
    for (std::size_t i = 0; i < fast.v.size(); ++i)
      err = std::max(err, std::abs(fast.v[i] - direct.v[i]));
    add("wigner vs direct quadrature", err < 1e-8, "sup err = " + fmt3(err));
  }

  {  // Husimi vs smoothed Wigner
    WaveFunction a = coherent_state(g, hb, -0.6, 0.3);
    WaveFunction b = coherent_state(g, hb, 0.6, -0.3);
    WaveFunction sup = a;
    for (std::size_t i = 0; i < sup.psi.size(); ++i) sup.psi[i] += b.psi[i];
    const double n = sup.norm();
    for (auto& v : sup.psi) v /= n;
    const auto h1 = husimi(sup);
    const auto h2 = oracle::smoothed_wigner(wigner(sup));
    double err = 0;
    for (std::size_t i = 0; i < h1.v.size(); ++i)
      err = std::max(err, std::abs(h1.v[i] - h2.v[i]));
    add("husimi vs Gaussian-smoothed wigner", err < 1e-6, "sup err = " + fmt3(err));
  }

  {  // split-step vs dense propagator
    HamiltonianSpec h;
    h.lambda = 1.0;
    h.mu = 0.5;
    h.V = parse_potential("cos(a=1,omega=1)");
    h.eps = 0.1;
    h.U = parse_potential("abs_sin(a=0.7,omega=1)");
    const WaveFunction in = coherent_state(g, hb, 1.0, 0.0);
    const WaveFunction split = propagate(in, h, 1.0, 1e-3);
    const WaveFunction dense = oracle::apply_dense_propagator(in, h, 1.0);
    const double fid = std::abs(overlap(split, dense));
    add("split-step vs dense-oracle fidelity", fid >= 1.0 - 1e-6,
        "1 - fidelity = " + fmt3(1.0 - fid));
  }

  {  // OT solvers
    Rng rng(23);
    double worst = 0;
    bool ok = true;
    for (int inst = 0; inst < 20; ++inst) {
      const int m = 2 + int(rng.next_u64() % 9);
      const int n = 2 + int(rng.next_u64() % 9);
      DiscreteMeasure mu, nu;
      double sm = 0, sn = 0;
      for (int i = 0; i < m; ++i) {
        mu.points.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        mu.weights.push_back(0.1 + rng.uniform());
        sm += mu.weights.back();
      }
      for (int j = 0; j < n; ++j) {
        nu.points.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        nu.weights.push_back(0.1 + rng.uniform());
        sn += nu.weights.back();
      }
      for (auto& w : mu.weights) w /= sm;
      for (auto& w : nu.weights) w /= sn;
      const double a = w2_exact(mu, nu).w2;
      const double b = oracle::exact_ot_small(mu, nu);
      worst = std::max(worst, std::abs(a - b));
      ok = ok && std::abs(a - b) < 1e-9;
    }
    add("w2_exact vs dense-simplex oracle", ok, "max |diff| = " + fmt3(worst));
  }

  (void)opt;
  return rep;
}

}  // namespace sclab
