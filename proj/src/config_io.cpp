#include "jamsec/config_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace jamsec {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
  double x = 0.0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, x);
  if (ec != std::errc() || ptr != end || !std::isfinite(x)) {
    throw ConfigError("bad numeric value for " + std::string(key) + ": '" +
                      std::string(value) + "'");
  }
  return x;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw ConfigError("bad boolean value for " + std::string(key) + ": '" +
                    std::string(value) + "'");
}

// Shortest round-trip representation.
std::string fmt(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

nlohmann::ordered_json estimate_json(const Estimate& e) {
  return {{"mean", e.mean}, {"se", e.se}, {"ci", e.ci}};
}

nlohmann::ordered_json trace_json(const TraceSummary& t) {
  return {{"mean", t.mean}, {"max", t.max}, {"final", t.final}};
}

}  // namespace

const char* to_string(StarvedSecrecy mode) {
  return mode == StarvedSecrecy::AsWritten ? "as-written" : "link-based";
}

StarvedSecrecy parse_starved_secrecy(std::string_view s) {
  if (s == "as-written") return StarvedSecrecy::AsWritten;
  if (s == "link-based") return StarvedSecrecy::LinkBased;
  throw ConfigError("unknown starved-secrecy mode '" + std::string(s) + "'");
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  SystemConfig& s = config.system;
  AttackerPolicy& p = config.policy;
  auto num = [&] { return parse_double(key, value); };

  if (key == "version") {
    if (num() != kConfigVersion) {
      throw ConfigError("unsupported config version '" + std::string(value) + "'");
    }
  } else if (key == "P_A") s.alice_power = num();
  else if (key == "P_J") s.jam_power = num();
  else if (key == "P_d") s.decode_power = num();
  else if (key == "kappa") s.noise_power = num();
  else if (key == "W") s.bandwidth = num();
  else if (key == "T") s.slot_duration = num();
  else if (key == "b") s.packet_bits = num();
  else if (key == "lambda_A") s.arrival_prob = num();
  else if (key == "alpha_A") {
    if (value == "auto") s.access_prob.reset();
    else s.access_prob = num();
  } else if (key == "access_margin") s.access_margin = num();
  else if (key == "alpha_E_assumed") s.assumed_jam_prob = num();
  else if (key == "eta") s.harvest_efficiency = num();
  else if (key == "E_const") s.const_energy = num();
  else if (key == "sigma2_AB") s.var_ab = num();
  else if (key == "sigma2_AE") s.var_ae = num();
  else if (key == "sigma2_EB") s.var_eb = num();
  else if (key == "alpha_E") p.jam_prob = num();
  else if (key == "rho") p.split_rho = num();
  else if (key == "sensing") p.sensing_enabled = parse_bool(key, value);
  else if (key == "tau") p.sensing_time = num();
  else if (key == "P_FA") p.false_alarm_prob = num();
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

RunConfig parse_config(std::string_view text, const std::string& source) {
  RunConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view v = line;
    if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    const auto eq = v.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(source + ":" + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply_setting(config, trim(v.substr(0, eq)), trim(v.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError(source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

std::string format_config(const RunConfig& config) {
  const SystemConfig& s = config.system;
  const AttackerPolicy& p = config.policy;
  std::ostringstream out;
  out << "version = " << kConfigVersion << "\n"
      << "P_A = " << fmt(s.alice_power) << "\n"
      << "P_J = " << fmt(s.jam_power) << "\n"
      << "P_d = " << fmt(s.decode_power) << "\n"
      << "kappa = " << fmt(s.noise_power) << "\n"
      << "W = " << fmt(s.bandwidth) << "\n"
      << "T = " << fmt(s.slot_duration) << "\n"
      << "b = " << fmt(s.packet_bits) << "\n"
      << "lambda_A = " << fmt(s.arrival_prob) << "\n"
      << "alpha_A = " << (s.access_prob ? fmt(*s.access_prob) : std::string("auto")) << "\n"
      << "access_margin = " << fmt(s.access_margin) << "\n"
      << "alpha_E_assumed = " << fmt(s.assumed_jam_prob) << "\n"
      << "eta = " << fmt(s.harvest_efficiency) << "\n"
      << "E_const = " << fmt(s.const_energy) << "\n"
      << "sigma2_AB = " << fmt(s.var_ab) << "\n"
      << "sigma2_AE = " << fmt(s.var_ae) << "\n"
      << "sigma2_EB = " << fmt(s.var_eb) << "\n"
      << "alpha_E = " << fmt(p.jam_prob) << "\n"
      << "rho = " << fmt(p.split_rho) << "\n"
      << "sensing = " << (p.sensing_enabled ? "true" : "false") << "\n"
      << "tau = " << fmt(p.sensing_time) << "\n"
      << "P_FA = " << fmt(p.false_alarm_prob) << "\n";
  return out.str();
}

nlohmann::ordered_json to_json(const RunConfig& config) {
  const SystemConfig& s = config.system;
  const AttackerPolicy& p = config.policy;
  nlohmann::ordered_json j;
  j["P_A"] = s.alice_power;
  j["P_J"] = s.jam_power;
  j["P_d"] = s.decode_power;
  j["kappa"] = s.noise_power;
  j["W"] = s.bandwidth;
  j["T"] = s.slot_duration;
  j["b"] = s.packet_bits;
  j["lambda_A"] = s.arrival_prob;
  j["alpha_A"] = s.access_prob ? nlohmann::ordered_json(*s.access_prob) : "auto";
  j["access_margin"] = s.access_margin;
  j["alpha_E_assumed"] = s.assumed_jam_prob;
  j["eta"] = s.harvest_efficiency;
  j["E_const"] = s.const_energy;
  j["sigma2_AB"] = s.var_ab;
  j["sigma2_AE"] = s.var_ae;
  j["sigma2_EB"] = s.var_eb;
  j["alpha_E"] = p.jam_prob;
  j["rho"] = p.split_rho;
  j["sensing"] = p.sensing_enabled;
  j["tau"] = p.sensing_time;
  j["P_FA"] = p.false_alarm_prob;
  return j;
}

nlohmann::ordered_json to_json(const SimReport& r) {
  nlohmann::ordered_json j;
  j["n_slots"] = r.n_slots;
  j["burn_in_slots"] = r.burn_in_slots;
  j["measured_slots"] = r.measured_slots;
  j["seed"] = r.seed;
  j["alpha_A"] = r.access_prob;
  j["mu_A_hat"] = estimate_json(r.mu_a);
  j["throughput_hat"] = estimate_json(r.throughput);
  j["mu_sec_hat"] = estimate_json(r.mu_sec);
  j["eh_rate"] = estimate_json(r.eh_rate);
  j["depletion_rate"] = estimate_json(r.depletion_rate);
  j["state_probs"] = {
      {"p_low", r.state.p_low},
      {"p_mid", r.state.p_mid},
      {"p_high", r.state.p_high},
      {"pr_queue_nonempty", r.state.pr_queue_nonempty()},
      {"pr_battery_high", r.state.pr_battery_high},
      {"pr_battery_below", r.state.pr_battery_below},
  };
  j["queue"] = trace_json(r.queue);
  j["battery"] = trace_json(r.battery);
  j["initial_queue"] = r.initial_queue;
  j["arrivals"] = r.arrivals;
  j["departures"] = r.departures;
  j["eve_actions"] = {{"jam", r.jam_slots}, {"split_decode", r.decode_slots},
                      {"harvest_only", r.starved_slots}};
  j["sensing"] = {{"sensed_active", r.sensed_active}, {"missed", r.missed},
                  {"sensed_idle", r.sensed_idle}, {"false_alarms", r.false_alarms}};
  return j;
}

nlohmann::ordered_json to_json(const GridResult& g) {
  auto point = [](const GridPoint& p) {
    nlohmann::ordered_json j{{"rho", p.rho}, {"alpha_E", p.jam_prob}};
    if (p.tau) j["tau"] = *p.tau;
    return j;
  };
  nlohmann::ordered_json j;
  j["best"] = point(g.best);
  j["best_value"] = g.best_value;
  j["best_ci"] = g.best_ci;
  j["cells"] = g.surface.size();
  j["failed_cells"] = g.failed_cells;
  if (!g.surface.empty()) j["seed"] = g.surface.front().seed;
  return j;
}

}  // namespace jamsec
