#pragma once

// Rayleigh block fading: per-slot power gains, instantaneous rates and
// the closed-form outage/secrecy probabilities used by the analytics.

#include "jamsec/params.hpp"
#include "jamsec/rng.hpp"

namespace jamsec {

// Exponential power gains |h|^2 for one slot.
struct SlotRealization {
  double g_ab = 0.0;
  double g_ae = 0.0;
  double g_eb = 0.0;
};

struct ChannelVariances {
  double ab = 1.0;
  double ae = 1.0;
  double eb = 1.0;

  static ChannelVariances from(const SystemConfig& c) { return {c.var_ab, c.var_ae, c.var_eb}; }
};

// Draws g_ab, g_ae, g_eb in that order, one uniform each.
SlotRealization sample_slot(RngStream& rng, const ChannelVariances& var);

double rate_ab(double g_ab, double gamma_a);

// [log2(1 + gamma_a g_ab) - log2(1 + rho gamma_a g_ae)]^+
double secrecy_rate_nojam(double g_ab, double g_ae, double gamma_a, double rho);

// Bob's rate while Eve jams: log2(1 + gamma_a g_ab / (1 + gamma_e g_eb)).
double rate_ab_jammed(double g_ab, double g_eb, double gamma_a, double gamma_e);

// Pr{log2(1 + gamma_a g_ab) >= R}
double p1_connection(double rate, double gamma_a, double var_ab);

// Pr{secrecy_rate_nojam >= R}
//   = exp(-(2^R - 1)/(var_ab gamma_a)) * var_ab / (var_ab + 2^R rho var_ae)
double p_secrecy_nojam(double rate, double gamma_a, double rho, double var_ab,
                       double var_ae);

// Pr{rate_ab_jammed >= R}
//   = exp(-(2^R - 1)/(gamma_a var_ab)) / (1 + (2^R - 1) gamma_e var_eb / (gamma_a var_ab))
double p2_jammed(double rate, double gamma_a, double gamma_e, double var_ab,
                 double var_eb);

// Pr{log2(1 + gamma_a g_ae) >= R}
double p3_eve_link(double rate, double gamma_a, double var_ae);

struct ChannelProbs {
  double p1 = 0.0;
  double p_sec = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
};

ChannelProbs channel_probs(const SystemConfig& config, const DerivedParams& derived,
                           double rho);

}  // namespace jamsec
