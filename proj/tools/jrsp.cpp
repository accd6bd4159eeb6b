// jrsp-lab command-line front end.
//
// Subcommands: fidelity, optimize, sweep, fig5, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jrsp/analytic.hpp"
#include "jrsp/averaging.hpp"
#include "jrsp/io.hpp"
#include "jrsp/noise.hpp"
#include "jrsp/optimize.hpp"
#include "jrsp/verify.hpp"

using json = nlohmann::json;
using namespace jrsp;

namespace {

struct CommonOpts {
  std::string alpha = "B", gamma = "B";
  double pa = 0, pc = 0;
  bool pre_x = false;
};

NoisePair parse_pair(const CommonOpts& o) {
  return {noise_from_char(o.alpha.at(0)), noise_from_char(o.gamma.at(0))};
}

// Canonical flag string hashed into the output-file header comment. Output
// paths are excluded so identical computations hash identically regardless of
// where the results land.
std::string canonical_flags(const CLI::App* cmd) {
  std::string s;
  for (const CLI::Option* opt : cmd->get_options()) {
    const std::string name = opt->get_name();
    if (name == "--out" || name == "-o,--out" || name == "--svg" ||
        name == "--config")
      continue;
    if (opt->count() == 0 && opt->get_default_str().empty()) continue;
    s += opt->get_name();
    s += '=';
    const auto& res = opt->results();
    if (res.empty())
      s += opt->get_default_str();
    else
      for (const auto& r : res) s += r + ";";
    s += ' ';
  }
  return s;
}

double deg2rad(double d) { return d * kPi / 180.0; }

int cmd_fidelity(const CommonOpts& common, double theta, double xi, bool deg,
                 const std::string& engine, const QuadratureSpec& qspec,
                 const McSpec& mcspec, bool as_json) {
  if (deg) {
    theta = deg2rad(theta);
    xi = deg2rad(xi);
  }
  const NoisePair pr = parse_pair(common);
  const NoiseScenario sc{pr.alpha, common.pa, pr.gamma, common.pc, common.pre_x};
  const ControlParams ctrl{theta, xi};
  const auto t0 = std::chrono::steady_clock::now();

  json out;
  out["command"] = "fidelity";
  out["alpha"] = common.alpha;
  out["gamma"] = common.gamma;
  out["pa"] = common.pa;
  out["pc"] = common.pc;
  out["theta"] = theta;
  out["xi"] = xi;
  out["pre_x"] = common.pre_x;
  out["engine"] = engine;

  const bool want_analytic = engine == "analytic" || engine == "all";
  const bool want_quadrature = engine == "quadrature" || engine == "all";
  const bool want_mc = engine == "mc" || engine == "all";

  if (want_analytic) {
    if (pr.alpha != NoiseKind::BitFlip) {
      std::cerr << "error: the analytic general fidelity is available only for "
                   "--alpha B; use --engine quadrature or mc\n";
      return 2;
    }
    const double pa_eff = effective_p(pr.alpha, common.pa, common.pre_x);
    const double pc_eff = effective_p(pr.gamma, common.pc, common.pre_x);
    out["analytic"] = general_fidelity_B_row(pr.gamma, pa_eff, pc_eff, theta, xi);
  }
  if (want_quadrature) {
    out["quadrature"] = averaged_fidelity_quadrature(sc, ctrl, qspec);
    out["n_eta"] = qspec.n_eta;
    out["n_phi"] = qspec.n_phi;
  }
  if (want_mc) {
    const McResult r = averaged_fidelity_mc(sc, ctrl, mcspec);
    out["mc"] = {{"estimate", r.estimate},
                 {"std_error", r.std_error},
                 {"n_samples", mcspec.n_samples},
                 {"seed", mcspec.seed},
                 {"rng", SplitMix64::name()}};
  }
  out["wall_time_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out["version"] = kVersion;

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    if (out.contains("analytic"))
      std::cout << "analytic   <F> = " << fmt12(out["analytic"].get<double>()) << "\n";
    if (out.contains("quadrature"))
      std::cout << "quadrature <F> = " << fmt12(out["quadrature"].get<double>())
                << "  (n_eta=" << qspec.n_eta << ", n_phi=" << qspec.n_phi << ")\n";
    if (out.contains("mc"))
      std::cout << "mc         <F> = " << fmt12(out["mc"]["estimate"].get<double>())
                << " +- " << fmt12(out["mc"]["std_error"].get<double>())
                << "  (n=" << mcspec.n_samples << ", seed=" << mcspec.seed
                << ", rng=" << SplitMix64::name() << ")\n";
    std::cout << "wall time: " << fmt12(out["wall_time_s"].get<double>()) << " s\n";
  }
  return 0;
}

int cmd_optimize(const CommonOpts& common, const std::string& engine,
                 const QuadratureSpec& qspec, bool as_json) {
  const NoisePair pr = parse_pair(common);
  json out;
  out["command"] = "optimize";
  out["alpha"] = common.alpha;
  out["gamma"] = common.gamma;
  out["pa"] = common.pa;
  out["pc"] = common.pc;
  out["pre_x"] = common.pre_x;
  out["engine"] = engine;
  out["version"] = kVersion;
  if (engine == "analytic" || engine == "both") {
    const OptimalParams op =
        analytic_optimal_params(pr, common.pa, common.pc, common.pre_x);
    out["analytic"] = {
        {"theta_opt", op.theta_opt},
        {"xi_opt", op.xi_opt},
        {"f_opt", analytic_optimal_fidelity(pr, common.pa, common.pc, common.pre_x)},
        {"branch_note", op.branch_note}};
  }
  if (engine == "numeric" || engine == "both") {
    const NoiseScenario sc{pr.alpha, common.pa, pr.gamma, common.pc, common.pre_x};
    const OptResult r = numeric_optimize(sc, qspec);
    out["numeric"] = {{"theta_opt", r.theta}, {"xi_opt", r.xi}, {"f_opt", r.f}};
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const char* eng : {"analytic", "numeric"})
      if (out.contains(eng)) {
        const auto& e = out[eng];
        std::cout << eng << ": f_opt = " << fmt12(e["f_opt"].get<double>())
                  << "  theta_opt = " << fmt12(e["theta_opt"].get<double>())
                  << "  xi_opt = " << fmt12(e["xi_opt"].get<double>());
        if (e.contains("branch_note"))
          std::cout << "  [" << e["branch_note"].get<std::string>() << "]";
        std::cout << "\n";
      }
  }
  return 0;
}

int cmd_sweep(const CommonOpts& common, int n, const std::string& engine,
              const QuadratureSpec& qspec, const std::string& out_csv,
              const std::string& out_svg, const std::string& flags) {
  const NoisePair pr = parse_pair(common);
  const SweepEngine eng = engine == "analytic" ? SweepEngine::Analytic
                          : engine == "numeric" ? SweepEngine::Numeric
                                                : SweepEngine::Both;
  const SweepGrid grid = sweep(pr, common.pre_x, n, eng, qspec);
  write_text_atomic(out_csv, sweep_to_csv(grid, flags));
  std::cout << "wrote " << out_csv << " (" << grid.cells.size() << " cells)\n";
  if (!out_svg.empty()) {
    write_text_atomic(out_svg, sweep_to_svg(grid));
    std::cout << "wrote " << out_svg << "\n";
  }
  return 0;
}

int cmd_fig5(int n, const QuadratureSpec& qspec, const std::string& out_csv,
             const std::string& flags) {
  const Fig5Result r = fig5_curves(n, qspec);
  write_text_atomic(out_csv, fig5_to_csv(r, flags));
  json side;
  side["command"] = "fig5";
  side["version"] = kVersion;
  side["crossing_found"] = r.crossing_found;
  if (r.crossing_found) side["crossing_pA"] = r.crossing_pA;
  write_text_atomic(out_csv + ".json", side.dump(2) + "\n");
  std::cout << "wrote " << out_csv << " and " << out_csv << ".json\n";
  if (r.crossing_found)
    std::cout << "crossing at pA = " << fmt12(r.crossing_pA) << "\n";
  return 0;
}

int cmd_verify() {
  const auto checks = run_verification_suite();
  int failed = 0;
  for (const auto& c : checks) {
    std::printf("%-40s deviation %.3e  tolerance %.3e  %s\n", c.name.c_str(),
                c.deviation, c.tolerance, c.pass() ? "ok" : "FAIL");
    if (!c.pass()) ++failed;
  }
  std::printf("%zu checks, %d failed\n", checks.size(), failed);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jrsp-lab: JRSP fidelity simulation and optimization toolkit"};
  app.require_subcommand(1);
  // Config keys live under a [subcommand] section; command-line flags take
  // precedence over config values, which take precedence over defaults.
  // fallthrough() lets --config appear after the subcommand name too.
  app.set_config("--config", "", "Key-value config file (flags take precedence)");
  app.set_version_flag("--version", std::string("jrsp-lab v") + kVersion);

  const auto kind_check = CLI::IsMember({"B", "P", "A", "D"});
  const auto prob_check = CLI::Range(0.0, 1.0);

  CommonOpts c_fid, c_opt, c_sweep;
  double theta = kPi / 4, xi = kPi / 4;
  bool deg = false, json_out_fid = false, json_out_opt = false;
  std::string engine_fid = "quadrature", engine_opt = "both",
              engine_sweep = "analytic";
  QuadratureSpec qspec;
  McSpec mcspec;
  int sweep_n = 101, fig5_n = 101;
  std::string sweep_csv, sweep_svg, fig5_csv;

  auto add_common = [&](CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--alpha", c.alpha, "Noise kind on qubits 1,2 (B|P|A|D)")
        ->check(kind_check)
        ->capture_default_str();
    cmd->add_option("--gamma", c.gamma, "Noise kind on qubits 5,6 (B|P|A|D)")
        ->check(kind_check)
        ->capture_default_str();
    cmd->add_option("--pa", c.pa, "Noise strength on qubits 1,2")
        ->check(prob_check)
        ->capture_default_str();
    cmd->add_option("--pc", c.pc, "Noise strength on qubits 5,6")
        ->check(prob_check)
        ->capture_default_str();
    cmd->add_flag("--pre-x", c.pre_x,
                  "Apply Pauli X before each bit-flip channel");
  };
  auto add_quad = [&](CLI::App* cmd) {
    cmd->add_option("--n-eta", qspec.n_eta, "Quadrature points per eta dimension")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    cmd->add_option("--n-phi", qspec.n_phi, "Quadrature points per phi dimension")
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
  };

  // --- fidelity ---
  CLI::App* fid = app.add_subcommand("fidelity", "Compute <F> at fixed controls");
  add_common(fid, c_fid);
  fid->add_option("--theta", theta, "Channel parameter (radians)")
      ->capture_default_str();
  fid->add_option("--xi", xi, "Bob's basis parameter (radians)")
      ->capture_default_str();
  fid->add_flag("--deg", deg, "Interpret --theta/--xi in degrees");
  fid->add_option("--engine", engine_fid, "analytic|quadrature|mc|all")
      ->check(CLI::IsMember({"analytic", "quadrature", "mc", "all"}))
      ->capture_default_str();
  add_quad(fid);
  fid->add_option("--samples", mcspec.n_samples, "Monte Carlo sample count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fid->add_option("--seed", mcspec.seed, "Monte Carlo seed")->capture_default_str();
  fid->add_flag("--json", json_out_fid, "Emit JSON");

  // --- optimize ---
  CLI::App* opt = app.add_subcommand("optimize", "Maximize <F> over (theta, xi)");
  add_common(opt, c_opt);
  opt->add_option("--engine", engine_opt, "analytic|numeric|both")
      ->check(CLI::IsMember({"analytic", "numeric", "both"}))
      ->capture_default_str();
  add_quad(opt);
  opt->add_flag("--json", json_out_opt, "Emit JSON");

  // --- sweep ---
  CLI::App* sw = app.add_subcommand("sweep", "Optimal-fidelity (pa,pc) sweep");
  add_common(sw, c_sweep);
  sw->add_option("-n,--n", sweep_n, "Grid resolution per axis")
      ->check(CLI::Range(2, 4096))
      ->capture_default_str();
  sw->add_option("--engine", engine_sweep, "analytic|numeric|both")
      ->check(CLI::IsMember({"analytic", "numeric", "both"}))
      ->capture_default_str();
  add_quad(sw);
  sw->add_option("-o,--out", sweep_csv, "Output CSV path")->required();
  sw->add_option("--svg", sweep_svg, "Optional SVG heatmap path");

  // --- fig5 ---
  CLI::App* f5 = app.add_subcommand("fig5", "Amplitude-damping comparison curves");
  f5->add_option("-n,--n", fig5_n, "Number of pA samples")
      ->check(CLI::Range(2, 4096))
      ->capture_default_str();
  add_quad(f5);
  f5->add_option("-o,--out", fig5_csv, "Output CSV path")->required();

  // --- verify ---
  app.add_subcommand("verify", "Run the full cross-check suite");

  // Let --config (a top-level option) appear after the subcommand name too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough(true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fid->parsed())
      return cmd_fidelity(c_fid, theta, xi, deg, engine_fid, qspec, mcspec,
                          json_out_fid);
    if (opt->parsed()) return cmd_optimize(c_opt, engine_opt, qspec, json_out_opt);
    if (sw->parsed())
      return cmd_sweep(c_sweep, sweep_n, engine_sweep, qspec, sweep_csv, sweep_svg,
                       canonical_flags(sw));
    if (f5->parsed()) return cmd_fig5(fig5_n, qspec, fig5_csv, canonical_flags(f5));
    if (app.get_subcommand("verify")->parsed()) return cmd_verify();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
