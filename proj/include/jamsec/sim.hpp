#pragma once

// Slotted Monte Carlo engine. One slot runs, in order: arrival, channel
// draw, Alice's access decision, Eve's action, optional sensing, delivery,
// secrecy adjudication, energy accounting, departure.

#include <cstdint>
#include <optional>

#include "jamsec/actors.hpp"
#include "jamsec/analytics.hpp"
#include "jamsec/channel.hpp"
#include "jamsec/params.hpp"
#include "jamsec/rng.hpp"
#include "jamsec/sensing.hpp"

namespace jamsec {

// Which Alice-Eve gain drives Eve's detector.
enum class DetectorFading {
  // An independent Rayleigh draw for the sensing window. Detection is then
  // independent of the secrecy events, the factorisation the sensing
  // throughput expression relies on.
  Independent,
  // The slot's own g_ae.
  Shared,
};

struct SimFlags {
  double burn_in_fraction = 0.1;
  StarvedSecrecy starved_secrecy = StarvedSecrecy::AsWritten;
  bool jam_success_departs = false;
  DetectorModel detector_model = DetectorModel::GaussianApprox;
  SampleCountRule sample_rule = SampleCountRule::Nyquist;
  DetectorFading detector_fading = DetectorFading::Independent;
  std::int64_t initial_queue = 0;
  double initial_battery = 0.0;
  int batches = 20;
};

// Alice's access probability: the configured value, or the stability rule
// applied to (lambda_A, alpha_E_assumed, P1). May throw InfeasibleError.
double resolve_access_prob(const SystemConfig& config, const DerivedParams& derived);

// Immutable per-run context.
struct SlotContext {
  SystemConfig config;
  AttackerPolicy policy;
  SimFlags flags;
  DerivedParams derived;
  ChannelVariances variances;
  double access_prob = 0.0;
  std::optional<EnergyDetector> detector;

  // Validates everything; throws ConfigError or InfeasibleError.
  static SlotContext make(const SystemConfig& config, const AttackerPolicy& policy,
                          const SimFlags& flags);
};

// One stream per source of randomness so that runs with different attacker
// policies see the same arrivals and channels.
struct SlotStreams {
  RngStream arrivals;
  RngStream channel;
  RngStream access;
  RngStream eve;
  RngStream sensing;

  static SlotStreams derive(std::uint64_t seed);
};

struct SimState {
  AliceState alice;
  EveBattery eve;
};

enum class BatteryBand { Low, Mid, High };  // < E_d, [E_d, E_J), >= E_J

struct SlotOutcome {
  bool arrival = false;
  bool queue_nonempty = false;  // after the arrival, at decision time
  BatteryBand band = BatteryBand::Low;
  SlotRealization gains;
  AliceDecision alice;
  EveAction action = EveAction::HarvestOnly;
  std::optional<DetectionResult> sensing;  // set when Eve sensed in decode mode

  bool I_A = false;
  bool I_E = false;
  bool I_D = false;
  bool I_MD = false;
  bool I_FA = false;

  bool service_opportunity = false;  // a packet would leave if one were queued
  bool delivered = false;
  bool secure = false;
  double e_harvested = 0.0;
  double e_depleted = 0.0;
  double battery_before = 0.0;
  double battery_after = 0.0;
};

SlotOutcome slot_step(SimState& state, SlotStreams& streams, const SlotContext& ctx);

struct Estimate {
  double mean = 0.0;
  double se = 0.0;  // batch-means standard error
  double ci = 0.0;  // 95% half-width
};

struct TraceSummary {
  double mean = 0.0;
  double max = 0.0;
  double final = 0.0;
};

struct SimReport {
  std::int64_t n_slots = 0;
  std::int64_t burn_in_slots = 0;
  std::int64_t measured_slots = 0;
  std::uint64_t seed = 0;
  double access_prob = 0.0;

  Estimate mu_a;        // service opportunities per slot
  Estimate throughput;  // departures per slot
  Estimate mu_sec;      // secure credits per slot
  Estimate eh_rate;     // J per slot
  Estimate depletion_rate;
  StateProbs state;

  TraceSummary queue;
  TraceSummary battery;

  // Whole run, burn-in included.
  std::int64_t initial_queue = 0;
  std::int64_t arrivals = 0;
  std::int64_t departures = 0;

  // Measured window.
  std::int64_t jam_slots = 0;
  std::int64_t decode_slots = 0;
  std::int64_t starved_slots = 0;
  std::int64_t sensed_active = 0;
  std::int64_t missed = 0;
  std::int64_t sensed_idle = 0;
  std::int64_t false_alarms = 0;
};

SimReport run(const SystemConfig& config, const AttackerPolicy& policy, std::uint64_t seed,
              std::int64_t n_slots, const SimFlags& flags = {});

}  // namespace jamsec
