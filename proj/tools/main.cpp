// jamsec command-line front end: single runs, lambda sweeps, attacker grid
// search and the self-validation suite.
//
// Exit codes: 0 ok, 1 usage, 2 config/IO, 3 validation failure.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "jamsec/analytics.hpp"
#include "jamsec/attacker_opt.hpp"
#include "jamsec/config_io.hpp"
#include "jamsec/params.hpp"
#include "jamsec/sim.hpp"
#include "jamsec/validation.hpp"
#include "svg_plot.hpp"

namespace {

using namespace jamsec;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::optional<double> gamma_a_db;
  std::optional<double> gamma_e_db;
  std::optional<bool> sense;
  std::uint64_t seed = 1;
  std::int64_t slots = 100000;
  double burn_in = 0.1;
  std::string starved = "as-written";
  bool jam_departs = false;
  std::string detector_fading = "independent";
  std::string detector_model = "gauss";
  std::string sample_rule = "nyquist";
  int batches = 20;
  int grid_m = 11;
  unsigned threads = 0;
  std::string out;
};

// Config keys exposed as --<key> with '_' replaced by '-'.
const char* const kConfigKeys[] = {
    "P_A", "P_J", "P_d", "kappa", "W", "T", "b", "lambda_A", "alpha_A", "access_margin",
    "alpha_E_assumed", "eta", "E_const", "sigma2_AB", "sigma2_AE", "sigma2_EB",
    "alpha_E", "rho", "tau", "P_FA"};

std::string flag_name(std::string key) {
  for (char& c : key) {
    if (c == '_') c = '-';
  }
  return "--" + key;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--config", o.config_path, "Config file (key = value)");
  app->add_option("--seed", o.seed, "Base RNG seed");
  app->add_option("--slots", o.slots, "Slots per simulation")->check(CLI::PositiveNumber);
  app->add_option("--burn-in", o.burn_in, "Fraction of slots discarded as burn-in")
      ->check(CLI::Range(0.0, 0.99));
  app->add_flag_callback("--sense", [&o] { o.sense = true; }, "Enable Eve's channel sensing");
  app->add_flag_callback("--no-sense", [&o] { o.sense = false; }, "Disable channel sensing");
  app->add_option("--eve-starved-secrecy", o.starved,
                  "Secrecy credit when Eve does not eavesdrop")
      ->check(CLI::IsMember({"as-written", "link-based"}));
  app->add_flag("--jam-departs", o.jam_departs,
                "A jammed packet leaves the queue when Bob's SINR supports R");
  app->add_option("--detector-fading", o.detector_fading, "Gain seen by Eve's detector")
      ->check(CLI::IsMember({"independent", "shared"}));
  app->add_option("--detector-model", o.detector_model, "Energy detector statistic")
      ->check(CLI::IsMember({"gauss", "exact"}));
  app->add_option("--sample-rule", o.sample_rule, "Sensing sample count N = W*tau or tau/W")
      ->check(CLI::IsMember({"nyquist", "inverse-bandwidth"}));
  app->add_option("--batches", o.batches, "Batch count for batch-means CIs")
      ->check(CLI::Range(2, 1000));
  app->add_option("--grid-M", o.grid_m, "Grid points per axis")->check(CLI::Range(2, 1000));
  app->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  app->add_option("--gamma-A-dB", o.gamma_a_db, "Set P_A = kappa * 10^(x/10)");
  app->add_option("--gamma-E-dB", o.gamma_e_db, "Set P_J = kappa * 10^(x/10)");
  for (const char* key : kConfigKeys) {
    const std::string k = key;
    app->add_option_function<std::string>(
        flag_name(k), [&o, k](const std::string& v) { o.overrides.emplace_back(k, v); },
        "Override config key " + k);
  }
}

RunConfig build_config(const Options& o) {
  RunConfig c;
  if (!o.config_path.empty()) c = load_config(o.config_path);
  for (const auto& [k, v] : o.overrides) apply_setting(c, k, v);
  if (o.gamma_a_db) c.system.alice_power = c.system.noise_power * db_to_linear(*o.gamma_a_db);
  if (o.gamma_e_db) c.system.jam_power = c.system.noise_power * db_to_linear(*o.gamma_e_db);
  if (o.sense) c.policy.sensing_enabled = *o.sense;
  validate(c.system);
  validate(c.policy, c.system);
  return c;
}

SimFlags build_flags(const Options& o) {
  SimFlags f;
  f.burn_in_fraction = o.burn_in;
  f.starved_secrecy = parse_starved_secrecy(o.starved);
  f.jam_success_departs = o.jam_departs;
  f.detector_fading =
      o.detector_fading == "shared" ? DetectorFading::Shared : DetectorFading::Independent;
  f.detector_model =
      o.detector_model == "exact" ? DetectorModel::ExactEnergy : DetectorModel::GaussianApprox;
  f.sample_rule = o.sample_rule == "inverse-bandwidth" ? SampleCountRule::InverseBandwidth
                                                       : SampleCountRule::Nyquist;
  f.batches = o.batches;
  return f;
}

std::string num(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw ConfigError("bad list entry '" + item + "'");
    }
    v.push_back(x);
  }
  if (v.empty()) throw ConfigError("empty value list");
  return v;
}

// --- run -------------------------------------------------------------------

int cmd_run(const Options& o) {
  const RunConfig c = build_config(o);
  const SimFlags flags = build_flags(o);
  const SimReport rep = run(c.system, c.policy, o.seed, o.slots, flags);

  nlohmann::ordered_json j;
  j["config"] = to_json(c);
  j["flags"] = {{"burn_in", flags.burn_in_fraction},
                {"eve_starved_secrecy", to_string(flags.starved_secrecy)},
                {"jam_departs", flags.jam_success_departs},
                {"detector_fading", o.detector_fading},
                {"detector_model", o.detector_model},
                {"sample_rule", o.sample_rule},
                {"batches", flags.batches}};
  j["report"] = to_json(rep);

  const std::string path = o.out.empty() ? "report.json" : o.out;
  open_out(path) << j.dump(2) << "\n";

  std::printf("mu_A=%.4f (+-%.4f) throughput=%.4f mu_sec=%.4f (+-%.4f) alpha_A=%.4f "
              "queue_mean=%.2f -> %s\n",
              rep.mu_a.mean, rep.mu_a.ci, rep.throughput.mean, rep.mu_sec.mean, rep.mu_sec.ci,
              rep.access_prob, rep.queue.mean, path.c_str());
  return kExitOk;
}

// --- fig1 ------------------------------------------------------------------

struct SweepOptions {
  std::string lambdas = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::string modes = "no_attack,attack_nosense,attack_sense";
  std::string svg;
};

int cmd_fig1(const Options& o, const SweepOptions& s) {
  const RunConfig base = build_config(o);
  const SimFlags flags = build_flags(o);
  const std::vector<double> lambdas = parse_list(s.lambdas);

  std::vector<std::string> modes;
  {
    std::stringstream ss(s.modes);
    std::string m;
    while (std::getline(ss, m, ',')) {
      if (m != "no_attack" && m != "attack_nosense" && m != "attack_sense") {
        throw ConfigError("unknown mode '" + m + "'");
      }
      modes.push_back(m);
    }
  }

  const std::string path = o.out.empty() ? "fig1.csv" : o.out;
  std::ofstream csv = open_out(path);
  csv << "lambda_A,mode,mu_sec,ci,alpha_A,rho,alpha_E\n";
  tools::Series series;

  for (double lambda : lambdas) {
    RunConfig c = base;
    c.system.arrival_prob = lambda;
    for (const std::string& mode : modes) {
      double mu = 0.0, ci = 0.0, rho = 0.0, alpha_e = 0.0, alpha_a = 0.0;
      if (mode == "no_attack") {
        AttackerPolicy idle = c.policy;
        idle.split_rho = 0.0;
        idle.jam_prob = 0.0;
        idle.sensing_enabled = false;
        const SimReport rep = run(c.system, idle, o.seed, o.slots, flags);
        mu = rep.mu_sec.mean;
        ci = rep.mu_sec.ci;
        alpha_a = rep.access_prob;
      } else {
        AttackerPolicy p = c.policy;
        p.sensing_enabled = mode == "attack_sense";
        GridSpec g;
        g.points = o.grid_m;
        g.slots = o.slots;
        g.threads = o.threads;
        const GridResult res = grid_search(c.system, p, g, o.seed, flags);
        mu = res.best_value;
        ci = res.best_ci;
        rho = res.best.rho;
        alpha_e = res.best.jam_prob;
        alpha_a = resolve_access_prob(c.system, derive(c.system));
      }
      csv << num(lambda) << "," << mode << "," << num(mu) << "," << num(ci) << ","
          << num(alpha_a) << "," << num(rho) << "," << num(alpha_e) << "\n";
      series[mode].emplace_back(lambda, mu);
      std::fprintf(stderr, "lambda_A=%.3f %-15s mu_sec=%.4f\n", lambda, mode.c_str(), mu);
    }
  }
  if (!s.svg.empty()) {
    std::ofstream svg = open_out(s.svg);
    tools::write_svg(svg, series, "lambda_A (packets/slot)", "secure throughput (packets/slot)");
  }
  std::printf("wrote %s (%zu rows)\n", path.c_str(), lambdas.size() * modes.size());
  return kExitOk;
}

// --- optimize --------------------------------------------------------------

struct OptimizeOptions {
  bool search_tau = false;
  std::string objective = "sim";
};

int cmd_optimize(const Options& o, const OptimizeOptions& opt) {
  const RunConfig c = build_config(o);
  const SimFlags flags = build_flags(o);
  GridSpec g;
  g.points = o.grid_m;
  g.slots = o.slots;
  g.threads = o.threads;
  g.search_tau = opt.search_tau;
  g.objective = opt.objective == "semi" ? GridObjective::SemiAnalytic : GridObjective::Simulation;
  AttackerPolicy p = c.policy;
  if (opt.search_tau) p.sensing_enabled = true;
  const GridResult res = grid_search(c.system, p, g, o.seed, flags);

  const std::string path = o.out.empty() ? "surface.csv" : o.out;
  std::ofstream csv = open_out(path);
  csv << (opt.search_tau ? "rho,alpha_E,tau,mu_sec,ci\n" : "rho,alpha_E,mu_sec,ci\n");
  for (const GridCell& cell : res.surface) {
    csv << num(cell.point.rho) << "," << num(cell.point.jam_prob) << ",";
    if (cell.point.tau) csv << num(*cell.point.tau) << ",";
    if (cell.error) {
      csv << "nan,nan\n";
    } else {
      csv << num(cell.value) << "," << num(cell.ci) << "\n";
    }
  }
  std::printf("%s\n", to_json(res).dump().c_str());
  return kExitOk;
}

// --- validate --------------------------------------------------------------

int cmd_validate(const Options& o, bool quick) {
  ValidationOptions v;
  v.seed = o.seed;
  if (quick) {
    v.channel_draws = 100'000;
    v.detector_trials = 100'000;
    v.fuzz_policies = 500;
  }
  const auto checks = validate_all(v);
  int failed = 0;
  for (const CheckResult& r : checks) {
    std::printf("%s  %-52s impl=%.6f oracle=%.6f delta=%+.6f tol=%.6f\n",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.value, r.reference, r.delta(),
                r.tolerance);
    failed += !r.passed;
  }
  std::printf("%zu checks, %d failed\n", checks.size(), failed);
  return failed ? kExitValidation : kExitOk;
}

// --- defaults --------------------------------------------------------------

int cmd_defaults(const Options& o) {
  const std::string text = format_config(build_config(o));
  if (o.out.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    open_out(o.out) << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Buffer-aided link under a harvesting jammer/eavesdropper: simulator and tools"};
  app.require_subcommand(1);

  Options opts;
  SweepOptions sweep;
  OptimizeOptions optimize;
  bool quick = false;

  auto* run_cmd = app.add_subcommand("run", "Run one simulation and write a JSON report");
  add_common(run_cmd, opts);
  run_cmd->add_option("--out", opts.out, "Report path (default report.json)");

  auto* fig1_cmd = app.add_subcommand("fig1", "Secure throughput vs lambda_A sweep (CSV)");
  add_common(fig1_cmd, opts);
  fig1_cmd->add_option("--out", opts.out, "CSV path (default fig1.csv)");
  fig1_cmd->add_option("--lambdas", sweep.lambdas, "Comma-separated lambda_A values");
  fig1_cmd->add_option("--modes", sweep.modes,
                       "Comma-separated subset of no_attack,attack_nosense,attack_sense");
  fig1_cmd->add_option("--svg", sweep.svg, "Also write an SVG line plot");

  auto* opt_cmd = app.add_subcommand("optimize", "Grid-search Eve's (rho, alpha_E[, tau])");
  add_common(opt_cmd, opts);
  opt_cmd->add_option("--out", opts.out, "Surface CSV path (default surface.csv)");
  opt_cmd->add_flag("--search-tau", optimize.search_tau, "Add tau as a third axis (implies --sense)");
  opt_cmd->add_option("--objective", optimize.objective, "sim or semi")
      ->check(CLI::IsMember({"sim", "semi"}));

  auto* val_cmd = app.add_subcommand("validate", "Closed forms and invariants vs oracles");
  add_common(val_cmd, opts);
  val_cmd->add_flag("--quick", quick, "Use 10x fewer Monte Carlo draws");

  auto* def_cmd = app.add_subcommand("defaults", "Print the effective config file");
  add_common(def_cmd, opts);
  def_cmd->add_option("--out", opts.out, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) return cmd_run(opts);
    if (*fig1_cmd) return cmd_fig1(opts, sweep);
    if (*opt_cmd) return cmd_optimize(opts, optimize);
    if (*val_cmd) return cmd_validate(opts, quick);
    if (*def_cmd) return cmd_defaults(opts);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const InfeasibleError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitUsage;
}
