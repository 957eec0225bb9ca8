#pragma once

// Self-checks run by `jamsec validate`: closed forms against brute-force
// Monte Carlo, the missed-detection integral against the simulated
// detector, and an exact energy/queue accounting fuzz.

#include <cstdint>
#include <string>
#include <vector>

namespace jamsec {

struct CheckResult {
  std::string name;
  double value = 0.0;      // implementation
  double reference = 0.0;  // oracle
  double tolerance = 0.0;  // allowed |value - reference|
  bool passed = false;

  double delta() const { return value - reference; }
};

struct ValidationOptions {
  std::uint64_t seed = 1;
  std::int64_t channel_draws = 1'000'000;
  std::int64_t detector_trials = 1'000'000;
  int fuzz_policies = 10'000;
  int fuzz_slots = 1'000;
};

std::vector<CheckResult> validate_channel_closed_forms(const ValidationOptions& opt);
std::vector<CheckResult> validate_missed_detection(const ValidationOptions& opt);
std::vector<CheckResult> validate_false_alarm_calibration(const ValidationOptions& opt);
std::vector<CheckResult> validate_energy_conservation(const ValidationOptions& opt);

std::vector<CheckResult> validate_all(const ValidationOptions& opt);

}  // namespace jamsec
