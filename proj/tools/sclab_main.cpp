// sclab: semiclassical perturbation laboratory CLI.
//
// Subcommands propagate states, run (hbar, eps, T) sweeps with the full
// measured-vs-bound report, and drive the per-inequality verification
// suites. Exit codes: 0 all checks pass, 1 some inequality check failed,
// 2 guard or configuration error.

#include <CLI11.hpp>
#include <iostream>
#include <thread>

#include "sclab/density.hpp"
#include "sclab/metrics.hpp"
#include "sclab/oracle.hpp"
#include "sclab/report.hpp"
#include "sclab/sweep.hpp"
#include "sclab/verify.hpp"

using namespace sclab;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int workers = int(std::thread::hardware_concurrency());
  bool oracle = false;
};

ScenarioConfig resolve_config(const CommonArgs& a) {
  ScenarioConfig cfg;  // defaults are the reference scenario grid
  if (!a.config_path.empty()) cfg = load_config(a.config_path);
  if (a.seed_set) cfg.seed = a.seed;
  if (!a.out_dir.empty()) cfg.out_dir = a.out_dir;
  cfg.validate();
  return cfg;
}

int report_exit(const VerifyReport& rep) {
  std::cout << rep.text();
  if (rep.any_guard()) return 2;
  return rep.all_pass() ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--config", a.config_path, "scenario config file");
  cmd->add_option("--out", a.out_dir, "output directory");
  auto* s = cmd->add_option("--seed", a.seed, "override the config seed");
  s->each([&a](const std::string&) { a.seed_set = true; });
  cmd->add_option("--workers", a.workers, "worker threads for sweep cells");
  cmd->add_flag("--oracle", a.oracle, "also run the dense-oracle cross checks");
}

int cmd_simulate(const CommonArgs& a) {
  const ScenarioConfig cfg = resolve_config(a);
  const SpatialGrid g = make_grid(cfg.d, cfg.L, cfg.N);
  const double hb = cfg.hbar_list.front();
  const double eps = cfg.eps_list.front();
  const WaveFunction psi_in = initial_state(cfg, g, hb);
  std::cout << "scenario " << cfg.scenario << ": hbar=" << fmt_double(hb)
            << " eps=" << fmt_double(eps) << " dt=" << fmt_double(cfg.dt) << "\n";
  std::cout << "Delta(psi_in) = " << fmt_double(delta_spread(psi_in))
            << ", E0 = " << fmt_double(energy(psi_in, cfg.lambda, 0.0, PotentialSpec{}))
            << ", E_harm = " << fmt_double(energy(psi_in, 1.0, 0.0, PotentialSpec{}))
            << "\n";
  const HamiltonianSpec h0 = hamiltonian_from_config(cfg, 0.0);
  const HamiltonianSpec he = hamiltonian_from_config(cfg, eps);
  for (double T : cfg.t_list) {
    const WaveFunction p0 = propagate(psi_in, h0, T, cfg.dt);
    const WaveFunction pe = propagate(psi_in, he, T, cfg.dt);
    const auto tr = tightness_report(pe, 0.8 * cfg.L);
    std::cout << "T=" << fmt_double(T) << ": |norm-1|="
              << fmt_double(std::abs(pe.norm() - 1.0))
              << " E_full=" << fmt_double(energy_full(pe, he))
              << " Delta=" << fmt_double(delta_spread(pe))
              << " trace_dist=" << fmt_double(trace_distance_pure(p0, pe))
              << " tail(x,p)=(" << fmt_double(tr.x_mass_outside) << ","
              << fmt_double(tr.p_mass_outside) << ")\n";
    if (a.oracle && cfg.N <= 256 && cfg.d == 1) {
      const WaveFunction ref = oracle::apply_dense_propagator(psi_in, he, T);
      std::cout << "      oracle fidelity = "
                << fmt_double(std::abs(overlap(pe, ref))) << "\n";
    }
  }
  return 0;
}

int cmd_sweep(const CommonArgs& a) {
  const ScenarioConfig cfg = resolve_config(a);
  SweepOptions so;
  so.workers = std::max(1, a.workers);
  const auto rows = run_sweep(cfg, so);
  ensure_directory(cfg.out_dir);
  const std::string path = cfg.out_dir + "/sweep.csv";
  write_csv(rows, path);
  int guard = 0, fail = 0;
  for (const auto& r : rows) {
    if (r.guard_flags != "ok") ++guard;
    else if (!(r.pass_thm1 && r.pass_duhamel)) ++fail;
  }
  std::cout << rows.size() << " cells -> " << path << " (" << guard
            << " guard-aborted, " << fail << " inequality failures)\n";
  if (guard) return 2;
  return fail ? 1 : 0;
}

int cmd_wigner(const CommonArgs& a, double at_t, const std::string& which) {
  const ScenarioConfig cfg = resolve_config(a);
  if (cfg.d != 1) throw std::invalid_argument("wigner: d = 1 only");
  const SpatialGrid g = make_grid(cfg.d, cfg.L, cfg.N);
  const double hb = cfg.hbar_list.front();
  WaveFunction psi = initial_state(cfg, g, hb);
  if (at_t > 0) {
    const double eps = which == "zero" ? 0.0 : cfg.eps_list.front();
    psi = propagate(psi, hamiltonian_from_config(cfg, eps), at_t, cfg.dt);
  }
  ensure_directory(cfg.out_dir);
  const PhaseSpaceField w = wigner(psi);
  const PhaseSpaceField h = husimi(psi);
  write_field_csv(w, cfg.out_dir + "/wigner.csv");
  write_field_csv(h, cfg.out_dir + "/husimi.csv");
  write_field_svg(w, cfg.out_dir + "/wigner.svg");
  write_field_svg(h, cfg.out_dir + "/husimi.svg");
  std::cout << "wigner/husimi fields written to " << cfg.out_dir << " (mass "
            << fmt_double(w.integral()) << ", " << fmt_double(h.integral()) << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiclassical perturbation laboratory"};
  app.require_subcommand(1);

  CommonArgs a;
  double wigner_t = 0.0;
  std::string wigner_state = "eps";

  auto* sim = app.add_subcommand("simulate", "propagate one scenario and print state metrics");
  add_common(sim, a);
  auto* swp = app.add_subcommand("sweep", "run the (hbar, eps, T) sweep and write the CSV report");
  add_common(swp, a);
  auto* v1 = app.add_subcommand("verify-theorem1", "per-cell weak-distance bound checks");
  add_common(v1, a);
  auto* v2 = app.add_subcommand("verify-corollary2", "eps^{1/3} envelope checks");
  add_common(v2, a);
  auto* v3 = app.add_subcommand("verify-coherent-distance", "coherent-pair sandwich checks");
  add_common(v3, a);
  auto* v4 = app.add_subcommand("verify-classical-limit", "W2 transport bound checks");
  add_common(v4, a);
  auto* wg = app.add_subcommand("wigner", "export Wigner/Husimi fields as CSV + SVG");
  add_common(wg, a);
  wg->add_option("--t", wigner_t, "propagate to this time first (default 0)");
  wg->add_option("--state", wigner_state, "eps | zero evolution when --t > 0");
  auto* st = app.add_subcommand("selftest-oracles", "run the oracle pairing suite");
  add_common(st, a);

  CLI11_PARSE(app, argc, argv);

  try {
    DriverOptions dopt;
    dopt.workers = std::max(1, a.workers);
    if (sim->parsed()) return cmd_simulate(a);
    if (swp->parsed()) return cmd_sweep(a);
    if (wg->parsed()) return cmd_wigner(a, wigner_t, wigner_state);
    if (v1->parsed()) {
      const auto cfg = resolve_config(a);
      dopt.out_dir = cfg.out_dir;
      return report_exit(verify_theorem1(cfg, dopt));
    }
    if (v2->parsed()) {
      const auto cfg = resolve_config(a);
      dopt.out_dir = cfg.out_dir;
      return report_exit(verify_corollary2(cfg, dopt));
    }
    if (v3->parsed()) {
      const auto cfg = resolve_config(a);
      dopt.out_dir = cfg.out_dir;
      return report_exit(verify_coherent_distance(cfg, dopt));
    }
    if (v4->parsed()) {
      const auto cfg = resolve_config(a);
      dopt.out_dir = cfg.out_dir;
      return report_exit(verify_classical_limit(cfg, dopt));
    }
    if (st->parsed()) {
      dopt.out_dir = a.out_dir;
      return report_exit(selftest_oracles(dopt));
    }
  } catch (const GuardError& e) {
    std::cerr << "guard error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
