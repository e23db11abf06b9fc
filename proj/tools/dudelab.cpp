// Command-line front end: analytic evaluation, simulation, sweeps, the
// analytic-vs-simulation validation report, and regeneration of the bundled
// figure datasets. Exit codes: 0 success, 2 usage/parameter error, 3 I/O
// failure, 4 validation report contains failures.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dudelab/config.hpp"
#include "dudelab/csv.hpp"
#include "dudelab/experiments.hpp"
#include "dudelab/svg.hpp"

namespace {

using namespace dudelab;

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  bool svg = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t drops = 0;
  bool drops_set = false;
  std::string variant = "consistent";
};

SimulationParams effective_sim(const Config& cfg, const CommonFlags& flags) {
  SimulationParams sim = cfg.sim;
  if (flags.drops_set) sim.drops = flags.drops;
  if (flags.seed_set) sim.seed = flags.seed;
  return sim;
}

void emit_sweep_files(const SweepResult& result, const std::string& out_dir,
                      const std::string& stem, bool with_svg) {
  namespace fs = std::filesystem;
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  const std::string csv_path = (dir / (stem + ".csv")).string();
  write_text_atomic(csv_path, sweep_csv(result));
  std::printf("wrote %s\n", csv_path.c_str());
  if (!with_svg) return;
  const struct {
    MetricFamily family;
    const char* suffix;
  } charts[] = {{MetricFamily::Probabilities, "probabilities"},
                {MetricFamily::SpectralEfficiency, "se"},
                {MetricFamily::EnergyEfficiency, "ee"}};
  for (const auto& c : charts) {
    const auto svg = sweep_svg(result, c.family);
    const std::string path = (dir / (stem + "_" + c.suffix + ".svg")).string();
    if (!svg) {
      std::fprintf(stderr, "warning: skipping %s (fewer than two drawable points)\n",
                   path.c_str());
      continue;
    }
    write_text_atomic(path, *svg);
    std::printf("wrote %s\n", path.c_str());
  }
}

// A single-configuration result rendered through the sweep schema: one row
// per association mode, under the pseudo-key "none".
SweepResult single_point_result(const ValidatedParams& vp, const SimulationParams* sim,
                                McOptions mc) {
  SweepResult out;
  out.spec.key = "none";
  out.spec.grid = {0.0};
  out.spec.scenarios = {Scenario::DecoupledPa, Scenario::Coupled};
  for (Scenario sc : out.spec.scenarios) {
    SweepRow row;
    row.value = 0.0;
    row.scenario = sc;
    detail::fill_analytic(row, vp, sc);
    if (sim != nullptr) {
      detail::attach_mc(row, vp, *sim, sc, mc);
      row.flags = detail::sweep_flags(row);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

void print_metrics(const ValidatedParams& vp) {
  const CaseMetrics m = case_metrics(vp);
  const CoupledMetrics c = coupled_metrics(vp);
  std::printf("association probabilities: case1 %.6f  case2 %.6f  case3 %.6f  case4 %.6f\n",
              m.pr.case1, m.pr.case2, m.pr.case3, m.pr.case4);
  std::printf("spectral efficiency (bit/s/Hz): case1 %.6f  case2 %.6f  case4 %.6f  average %.6f\n",
              m.se_case1, m.se_case2, m.se_case4, m.se_avg);
  std::printf("energy efficiency (bit/J): case1 %.6g  case2 %.6g  case4 %.6g  average %.6g\n",
              m.ee_case1, m.ee_case2, m.ee_case4, m.ee_avg);
  std::printf("coupled baseline: pr_macro %.6f  se_avg %.6f  ee_avg %.6g\n", c.pr_macro, c.se_avg,
              c.ee_avg);
}

int cmd_analytic(const CommonFlags& flags) {
  const Config cfg = load_config(flags.config_path);
  const ValidatedParams vp = validate(cfg.system);
  print_metrics(vp);
  if (!flags.out_dir.empty())
    emit_sweep_files(single_point_result(vp, nullptr, {}), flags.out_dir, "analytic", false);
  return 0;
}

int cmd_simulate(const CommonFlags& flags) {
  const Config cfg = load_config(flags.config_path);
  const ValidatedParams vp = validate(cfg.system);
  const SimulationParams sim = effective_sim(cfg, flags);
  validate_simulation(sim);
  const McResult res = run_monte_carlo(vp, sim);
  const CaseMetrics m = case_metrics(vp);
  std::printf("drops %llu  association window %.3f km  interferer window %.3f km\n",
              static_cast<unsigned long long>(res.drops), res.association_radius,
              res.interferer_radius);
  std::printf("resamples %llu  dominance violations %llu  mean interferers/drop %.1f\n",
              static_cast<unsigned long long>(res.resamples),
              static_cast<unsigned long long>(res.dominance_violations),
              res.mean_interferers_per_drop);
  std::printf("%-12s %12s %12s %12s\n", "quantity", "analytic", "simulated", "stderr");
  const auto line = [](const char* name, double a, double b, double s) {
    std::printf("%-12s %12.6f %12.6f %12.6f\n", name, a, b, s);
  };
  const CaseProbabilities pr = m.pr;
  const auto binom = [&](AssociationCase c) {
    const double p = res.decoupled.of(c).probability;
    return std::sqrt(p * (1.0 - p) / static_cast<double>(res.drops));
  };
  line("pr_case1", pr.case1, res.decoupled.of(AssociationCase::Case1).probability,
       binom(AssociationCase::Case1));
  line("pr_case2", pr.case2, res.decoupled.of(AssociationCase::Case2).probability,
       binom(AssociationCase::Case2));
  line("pr_case4", pr.case4, res.decoupled.of(AssociationCase::Case4).probability,
       binom(AssociationCase::Case4));
  line("se_avg", m.se_avg, res.decoupled.se_avg, res.decoupled.se_avg_stderr);
  std::printf("%-12s %12.6g %12.6g %12.6g\n", "ee_avg", m.ee_avg, res.decoupled.ee_avg,
              res.decoupled.ee_avg_stderr);
  std::printf("coupled:     se_avg %.6f (stderr %.6f)  ee_avg %.6g\n", res.coupled.se_avg,
              res.coupled.se_avg_stderr, res.coupled.ee_avg);
  if (!flags.out_dir.empty())
    emit_sweep_files(single_point_result(vp, &sim, {}), flags.out_dir, "simulate", false);
  return 0;
}

int cmd_sweep(const CommonFlags& flags) {
  const Config cfg = load_config(flags.config_path);
  if (!cfg.sweep) throw ConfigError("the sweep command needs a 'sweep' object in the config");
  SweepSpec spec;
  spec.base = cfg.system;
  spec.key = cfg.sweep->key;
  spec.grid = cfg.sweep->grid;
  spec.scenarios.clear();
  for (const std::string& name : cfg.sweep->scenarios)
    spec.scenarios.push_back(scenario_from_name(name));
  if (cfg.has_sim || flags.drops_set) spec.sim = effective_sim(cfg, flags);
  const SweepResult result = run_sweep(spec);
  std::printf("sweep over %s: %zu rows (%zu grid points x %zu scenarios)\n", spec.key.c_str(),
              result.rows.size(), spec.grid.size(), spec.scenarios.size());
  std::size_t failed = 0, flagged = 0;
  for (const SweepRow& r : result.rows) {
    failed += r.failed ? 1 : 0;
    flagged += (!r.failed && !r.flags.empty()) ? 1 : 0;
  }
  if (failed > 0) std::printf("failed rows: %zu\n", failed);
  if (flagged > 0) std::printf("flagged rows: %zu\n", flagged);
  emit_sweep_files(result, flags.out_dir, "sweep", flags.svg);
  return 0;
}

int cmd_validate(const CommonFlags& flags) {
  const Config cfg = load_config(flags.config_path);
  const ValidatedParams vp = validate(cfg.system);
  SimulationParams sim = effective_sim(cfg, flags);
  validate_simulation(sim);
  const PdfVariant variant =
      flags.variant == "paper" ? PdfVariant::Legacy : PdfVariant::Consistent;
  const ValidationReport rep = validation_report(vp, sim, variant);
  for (const ReportEntry& e : rep.entries) {
    std::printf("%s %-28s analytic=%.9g estimate=%.9g stderr=%.3g threshold=%.3g%s%s\n",
                e.pass ? "PASS" : "FAIL", e.name.c_str(), e.analytic, e.estimate, e.stderr_,
                e.threshold, e.detail.empty() ? "" : "  ", e.detail.c_str());
  }
  std::printf("drops %llu  resamples %llu  simulation %.1fs  checks %.1fs\n",
              static_cast<unsigned long long>(rep.drops),
              static_cast<unsigned long long>(rep.resamples), rep.mc_seconds, rep.check_seconds);
  return rep.all_pass() ? 0 : 4;
}

int cmd_figures(int id, const CommonFlags& flags) {
  std::vector<int> ids;
  if (id == 0) {
    ids = {2, 3, 4, 5, 6};
  } else {
    ids = {id};
  }
  for (int fig : ids) {
    const SweepResult result = reproduce_figure(fig);
    emit_sweep_files(result, flags.out_dir, "figure" + std::to_string(fig), flags.svg);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-tier uplink association and efficiency toolkit"};
  app.require_subcommand(1);
  CommonFlags flags;

  const auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* opt = cmd->add_option("--config", flags.config_path, "JSON configuration file");
    if (needs_config) opt->required();
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--seed", flags.seed, "override simulation seed")
        ->each([&](const std::string&) { flags.seed_set = true; });
    cmd->add_option("--drops", flags.drops, "override simulation drop count")
        ->each([&](const std::string&) { flags.drops_set = true; });
  };

  CLI::App* analytic = app.add_subcommand("analytic", "closed-form metrics, no simulation");
  add_common(analytic, true);

  CLI::App* simulate = app.add_subcommand("simulate", "simulate one configuration");
  add_common(simulate, true);

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a parameter sweep");
  add_common(sweep, true);
  sweep->add_flag("--svg", flags.svg, "also emit SVG charts");

  CLI::App* validate_cmd = app.add_subcommand("validate", "analytic-vs-simulation report");
  add_common(validate_cmd, true);
  validate_cmd->add_option("--variant", flags.variant, "distance-law variant to test against")
      ->check(CLI::IsMember({"consistent", "paper"}));

  CLI::App* figures = app.add_subcommand("figures", "regenerate bundled figure datasets");
  int figure_id = 0;
  figures->add_option("--id", figure_id, "figure id (2-6); default: all")
      ->check(CLI::Range(2, 6));
  figures->add_option("--out", flags.out_dir, "output directory");
  figures->add_flag("--svg", flags.svg, "also emit SVG charts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analytic)) return cmd_analytic(flags);
    if (app.got_subcommand(simulate)) return cmd_simulate(flags);
    if (app.got_subcommand(sweep)) return cmd_sweep(flags);
    if (app.got_subcommand(validate_cmd)) return cmd_validate(flags);
    if (app.got_subcommand(figures)) return cmd_figures(figure_id, flags);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
