#pragma once

// System and attacker parameters, unit conversions and derived quantities.
//
// Units are SI throughout: powers in W, energies in J, durations in s,
// bandwidth in Hz. Channel variances are dimensionless mean power gains.

#include <optional>
#include <stdexcept>
#include <string>

namespace jamsec {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SystemConfig {
  double alice_power = 10.0;      // P_A
  double jam_power = 10.0;        // P_J
  double decode_power = 5e-3;     // P_d, gives E_d = 5 uJ at T = 1 ms
  double noise_power = 1.0;       // kappa
  double bandwidth = 1e6;         // W
  double slot_duration = 1e-3;    // T
  double packet_bits = 1000.0;    // b, gives R = 1 bit/s/Hz
  double arrival_prob = 0.5;      // lambda_A
  // Alice's access probability. Unset means "choose it with the stability
  // rule" (see analytics::stable_access_prob).
  std::optional<double> access_prob;
  double access_margin = 1.05;
  double assumed_jam_prob = 0.0;  // alpha_E Alice designs against
  double harvest_efficiency = 0.6;  // eta
  double const_energy = 0.0;        // E_const per slot
  double var_ab = 1.0;
  double var_ae = 1.0;
  double var_eb = 1.0;
};

struct AttackerPolicy {
  double jam_prob = 0.0;        // alpha_E
  double split_rho = 0.0;       // fraction of received power sent to the decoder
  bool sensing_enabled = false;
  double sensing_time = 1e-4;   // tau
  double false_alarm_prob = 0.1;
};

struct DerivedParams {
  double gamma_a = 0.0;        // P_A / kappa
  double gamma_e = 0.0;        // P_J / kappa
  double gamma_tilde_a = 0.0;  // var_ae * gamma_a
  double target_rate = 0.0;    // R = b / (W T), bits/s/Hz
  double decode_energy = 0.0;  // E_d = P_d T
  double jam_energy = 0.0;     // E_J = P_J T
};

double db_to_linear(double db);
double linear_to_db(double linear);

// Throws ConfigError on any out-of-range field.
void validate(const SystemConfig& config);
void validate(const AttackerPolicy& policy, const SystemConfig& config);

// Throws ConfigError when the config is invalid or E_J < E_d.
DerivedParams derive(const SystemConfig& config);

}  // namespace jamsec
