#include "jamsec/actors.hpp"

#include <string>

#include "jamsec/channel.hpp"

namespace jamsec {

const char* to_string(EveAction action) {
  switch (action) {
    case EveAction::HarvestOnly: return "harvest_only";
    case EveAction::SplitDecode: return "split_decode";
    case EveAction::Jam: return "jam";
  }
  return "?";
}

AliceDecision alice_slot_decision(RngStream& rng, const AliceState& alice, double g_ab,
                                  double access_prob, const DerivedParams& derived) {
  AliceDecision d;
  d.accesses = rng.uniform() < access_prob;
  d.link_up = rate_ab(g_ab, derived.gamma_a) >= derived.target_rate;
  d.active = alice.queue_len > 0 && d.accesses && d.link_up;
  return d;
}

EveAction eve_choose_action(RngStream& rng, const EveBattery& battery,
                            const AttackerPolicy& policy, const DerivedParams& derived) {
  const double u = rng.uniform();
  if (battery.level < derived.decode_energy) return EveAction::HarvestOnly;
  if (battery.level < derived.jam_energy) return EveAction::SplitDecode;
  return u < policy.jam_prob ? EveAction::Jam : EveAction::SplitDecode;
}

double energy_harvested(EveAction action, bool alice_active, double g_ae,
                        const AttackerPolicy& policy, const SystemConfig& config,
                        const std::optional<DetectionResult>& sensing) {
  if (!alice_active) return 0.0;
  const double full =
      config.harvest_efficiency * g_ae * config.alice_power * config.slot_duration;
  switch (action) {
    case EveAction::HarvestOnly:
      return full;
    case EveAction::SplitDecode: {
      double share = 1.0 - policy.split_rho;
      if (sensing) {
        const double listen = sensing->missed ? policy.sensing_time / config.slot_duration
                                              : (sensing->detected ? 1.0 : 0.0);
        share *= listen;
      }
      return share * full;
    }
    case EveAction::Jam:
      return 0.0;
  }
  return 0.0;
}

double energy_depleted(EveAction action, bool alice_active, const AttackerPolicy& policy,
                       const SystemConfig& config, const DerivedParams& derived,
                       const std::optional<DetectionResult>& sensing) {
  if (action == EveAction::HarvestOnly) return 0.0;
  if (!sensing) {
    if (!alice_active) return 0.0;
    return action == EveAction::Jam ? derived.jam_energy : derived.decode_energy;
  }
  if (action == EveAction::Jam) return derived.jam_energy;
  const double frac = policy.sensing_time / config.slot_duration;
  if (alice_active) {
    return derived.decode_energy * (sensing->missed ? frac : 1.0);
  }
  return derived.decode_energy * (sensing->false_alarm ? 1.0 : frac);
}

EveBattery battery_step(const EveBattery& battery, double e_out, double e_h, double e_const) {
  if (e_out < 0.0 || e_h < 0.0 || e_const < 0.0) {
    throw InvariantBreach("battery_step: negative energy term");
  }
  if (e_out > battery.level) {
    throw InvariantBreach("battery_step: depletion " + std::to_string(e_out) +
                          " exceeds level " + std::to_string(battery.level));
  }
  return EveBattery{battery.level - e_out + e_h + e_const};
}

}  // namespace jamsec
