#pragma once

// Semi-analytic rate expressions evaluated on supplied battery/queue state
// probabilities, plus the access-probability stability rule.

#include <stdexcept>

#include "jamsec/channel.hpp"

namespace jamsec {

struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Joint battery/queue probabilities. The three joint entries partition
// {Q > 0}; the marginals are over all slots.
struct StateProbs {
  double p_low = 0.0;   // Pr{B < E_d, Q > 0}
  double p_mid = 0.0;   // Pr{E_d <= B < E_J, Q > 0}
  double p_high = 0.0;  // Pr{B >= E_J, Q > 0}
  double pr_battery_high = 0.0;  // Pr{B >= E_J}
  double pr_battery_below = 1.0;  // Pr{B < E_J}

  double pr_queue_nonempty() const { return p_low + p_mid + p_high; }
};

// Which probability credits a slot in which Eve is not eavesdropping
// (battery starved, or she missed Alice).
enum class StarvedSecrecy {
  AsWritten,  // Eve's own link event, Pr{log2(1 + gamma_a g_ae) >= R}
  LinkBased,  // the delivered packet is secure, Pr = P1
};

// How the starved mass enters the no-jam secrecy term.
enum class StarvedGrouping {
  // Term 1 weighs Pr{B < E_J, Q > 0} = p_low + p_mid, so starved slots are
  // credited by both the secrecy term and the starved term.
  Literal,
  // Term 1 weighs p_mid only; every state is counted once. This is also the
  // sensing expression at P_MD = 0.
  Partitioned,
};

double starved_secrecy_prob(const ChannelProbs& probs, StarvedSecrecy mode);

// (alpha_A (1 - alpha_E) Pr{B >= E_J} + alpha_A Pr{B < E_J}) P1
double eq1_service_rate(double access_prob, double jam_prob, const StateProbs& state,
                        double p1);

// Secure throughput without sensing (packets/slot).
double eq5_secure_throughput(double access_prob, double jam_prob, const StateProbs& state,
                             const ChannelProbs& probs,
                             StarvedSecrecy starved = StarvedSecrecy::AsWritten,
                             StarvedGrouping grouping = StarvedGrouping::Literal);

// Secure throughput with sensing; decode-mode mass splits into detected
// (1 - P_MD, no-jam secrecy) and missed (P_MD, starved-style credit).
double eq8_secure_throughput(double access_prob, double jam_prob, const StateProbs& state,
                             const ChannelProbs& probs, double p_md,
                             StarvedSecrecy starved = StarvedSecrecy::AsWritten);

// Smallest alpha_A with lambda_A <= alpha_A (1 - alpha_E) P1, times `margin`,
// capped at 1. Throws InfeasibleError when lambda_A >= (1 - alpha_E) P1 and
// lambda_A > 0.
double stable_access_prob(double arrival_prob, double assumed_jam_prob, double p1,
                          double margin = 1.05);

}  // namespace jamsec
