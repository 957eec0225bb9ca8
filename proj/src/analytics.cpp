#include "jamsec/analytics.hpp"

#include <algorithm>
#include <string>

namespace jamsec {

double starved_secrecy_prob(const ChannelProbs& probs, StarvedSecrecy mode) {
  return mode == StarvedSecrecy::AsWritten ? probs.p3 : probs.p1;
}

double eq1_service_rate(double access_prob, double jam_prob, const StateProbs& state,
                        double p1) {
  return (access_prob * (1.0 - jam_prob) * state.pr_battery_high +
          access_prob * state.pr_battery_below) *
         p1;
}

double eq5_secure_throughput(double access_prob, double jam_prob, const StateProbs& s,
                             const ChannelProbs& probs, StarvedSecrecy starved,
                             StarvedGrouping grouping) {
  const double below_jam = grouping == StarvedGrouping::Literal ? s.p_low + s.p_mid : s.p_mid;
  const double eavesdropped = access_prob * (s.p_high * (1.0 - jam_prob) + below_jam) * probs.p_sec;
  const double starved_term = access_prob * s.p_low * starved_secrecy_prob(probs, starved);
  const double jammed = access_prob * jam_prob * probs.p2 * s.p_high;
  return eavesdropped + starved_term + jammed;
}

double eq8_secure_throughput(double access_prob, double jam_prob, const StateProbs& s,
                             const ChannelProbs& probs, double p_md, StarvedSecrecy starved) {
  const double decode_mass = s.p_high * (1.0 - jam_prob) + s.p_mid;
  const double detected = access_prob * (1.0 - p_md) * decode_mass * probs.p_sec;
  const double unheard = access_prob * (p_md * decode_mass + s.p_low) *
                         starved_secrecy_prob(probs, starved);
  const double jammed = access_prob * jam_prob * probs.p2 * s.p_high;
  return detected + unheard + jammed;
}

double stable_access_prob(double arrival_prob, double assumed_jam_prob, double p1,
                          double margin) {
  if (arrival_prob <= 0.0) return 0.0;
  const double capacity = (1.0 - assumed_jam_prob) * p1;
  if (arrival_prob >= capacity) {
    throw InfeasibleError("no stabilising access probability: lambda_A = " +
                          std::to_string(arrival_prob) + " >= (1 - alpha_E) P1 = " +
                          std::to_string(capacity));
  }
  return std::min(1.0, margin * arrival_prob / capacity);
}

}  // namespace jamsec
