#include "jamsec/params.hpp"

#include <cmath>
#include <string>

namespace jamsec {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }
bool probability(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

void validate(const SystemConfig& c) {
  require(finite_nonneg(c.alice_power), "P_A must be >= 0");
  require(finite_nonneg(c.jam_power), "P_J must be >= 0");
  require(finite_nonneg(c.decode_power), "P_d must be >= 0");
  require(std::isfinite(c.noise_power) && c.noise_power > 0.0, "kappa must be > 0");
  require(std::isfinite(c.bandwidth) && c.bandwidth > 0.0, "W must be > 0");
  require(std::isfinite(c.slot_duration) && c.slot_duration > 0.0, "T must be > 0");
  require(std::isfinite(c.packet_bits) && c.packet_bits > 0.0, "b must be > 0");
  require(probability(c.arrival_prob), "lambda_A must be in [0,1]");
  if (c.access_prob) require(probability(*c.access_prob), "alpha_A must be in [0,1]");
  require(std::isfinite(c.access_margin) && c.access_margin >= 1.0,
          "access_margin must be >= 1");
  require(probability(c.assumed_jam_prob), "alpha_E_assumed must be in [0,1]");
  require(probability(c.harvest_efficiency), "eta must be in [0,1]");
  require(finite_nonneg(c.const_energy), "E_const must be >= 0");
  require(std::isfinite(c.var_ab) && c.var_ab > 0.0 && std::isfinite(c.var_ae) &&
              c.var_ae > 0.0 && std::isfinite(c.var_eb) && c.var_eb > 0.0,
          "channel variances must be > 0");
}

void validate(const AttackerPolicy& p, const SystemConfig& c) {
  require(probability(p.jam_prob), "alpha_E must be in [0,1]");
  require(probability(p.split_rho), "rho must be in [0,1]");
  require(std::isfinite(p.sensing_time) && p.sensing_time > 0.0 &&
              p.sensing_time <= c.slot_duration,
          "tau must be in (0, T]");
  require(std::isfinite(p.false_alarm_prob) && p.false_alarm_prob > 0.0 &&
              p.false_alarm_prob < 1.0,
          "P_FA must be in (0,1)");
  if (p.sensing_enabled) {
    require(p.sensing_time * c.bandwidth >= 1.0, "sensing window must hold at least one sample");
  }
}

DerivedParams derive(const SystemConfig& c) {
  validate(c);
  DerivedParams d;
  d.gamma_a = c.alice_power / c.noise_power;
  d.gamma_e = c.jam_power / c.noise_power;
  d.gamma_tilde_a = c.var_ae * d.gamma_a;
  d.target_rate = c.packet_bits / (c.bandwidth * c.slot_duration);
  d.decode_energy = c.decode_power * c.slot_duration;
  d.jam_energy = c.jam_power * c.slot_duration;
  require(d.jam_energy >= d.decode_energy, "E_J must be >= E_d");
  require(std::isfinite(d.target_rate) && d.target_rate > 0.0, "R must be > 0");
  return d;
}

}  // namespace jamsec
