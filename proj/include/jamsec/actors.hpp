#pragma once

// Per-slot decisions and energy accounting for Alice (queue + random
// access) and Eve (battery + jam/eavesdrop policy).

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "jamsec/params.hpp"
#include "jamsec/rng.hpp"
#include "jamsec/sensing.hpp"

namespace jamsec {

struct InvariantBreach : std::logic_error {
  using std::logic_error::logic_error;
};

struct AliceState {
  std::int64_t queue_len = 0;
};

// Unbounded battery.
struct EveBattery {
  double level = 0.0;
};

enum class EveAction {
  HarvestOnly,  // level < E_d
  SplitDecode,  // decode with fraction rho, harvest 1 - rho
  Jam,          // only reachable with level >= E_J
};

const char* to_string(EveAction action);

struct AliceDecision {
  bool accesses = false;  // access coin came up
  bool link_up = false;   // rate_ab >= R
  bool active = false;    // queue nonempty, accesses and link_up
};

// Consumes exactly one uniform whatever the state.
AliceDecision alice_slot_decision(RngStream& rng, const AliceState& alice, double g_ab,
                                  double access_prob, const DerivedParams& derived);

// Consumes exactly one uniform whatever the battery level.
EveAction eve_choose_action(RngStream& rng, const EveBattery& battery,
                            const AttackerPolicy& policy, const DerivedParams& derived);

// Energy Eve collects from Alice's signal this slot. `sensing` is empty when
// Eve does not sense; otherwise the split branch is scaled by
// (tau/T * I_MD + I_D).
double energy_harvested(EveAction action, bool alice_active, double g_ae,
                        const AttackerPolicy& policy, const SystemConfig& config,
                        const std::optional<DetectionResult>& sensing);

// Energy Eve spends this slot.
//
// Without sensing every cost is gated by Alice's activity: E_d for
// SplitDecode, E_J for Jam. With sensing the jam cost is unconditional and
// decoding costs E_d (I_MD tau/T + I_D) when Alice is active and
// E_d ((1 - I_FA) tau/T + I_FA) when she is not.
double energy_depleted(EveAction action, bool alice_active, const AttackerPolicy& policy,
                       const SystemConfig& config, const DerivedParams& derived,
                       const std::optional<DetectionResult>& sensing);

// level' = level - E_out + E_H + E_const. Throws InvariantBreach when
// E_out exceeds the level or any term is negative.
EveBattery battery_step(const EveBattery& battery, double e_out, double e_h, double e_const);

}  // namespace jamsec
