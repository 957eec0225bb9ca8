#include "jamsec/channel.hpp"

#include <algorithm>
#include <cmath>

namespace jamsec {
namespace {

// Pr{X >= threshold} for X exponential with the given mean.
double exp_tail(double threshold, double mean) {
  if (threshold <= 0.0) return 1.0;
  if (mean <= 0.0) return 0.0;
  return std::exp(-threshold / mean);
}

double snr_threshold(double rate) { return std::exp2(rate) - 1.0; }

}  // namespace

SlotRealization sample_slot(RngStream& rng, const ChannelVariances& var) {
  SlotRealization s;
  s.g_ab = rng.exponential(var.ab);
  s.g_ae = rng.exponential(var.ae);
  s.g_eb = rng.exponential(var.eb);
  return s;
}

double rate_ab(double g_ab, double gamma_a) { return std::log2(1.0 + gamma_a * g_ab); }

double secrecy_rate_nojam(double g_ab, double g_ae, double gamma_a, double rho) {
  const double r = std::log2(1.0 + gamma_a * g_ab) - std::log2(1.0 + rho * gamma_a * g_ae);
  return std::max(0.0, r);
}

double rate_ab_jammed(double g_ab, double g_eb, double gamma_a, double gamma_e) {
  return std::log2(1.0 + gamma_a * g_ab / (1.0 + gamma_e * g_eb));
}

double p1_connection(double rate, double gamma_a, double var_ab) {
  return exp_tail(snr_threshold(rate), var_ab * gamma_a);
}

double p_secrecy_nojam(double rate, double gamma_a, double rho, double var_ab,
                       double var_ae) {
  const double p1 = p1_connection(rate, gamma_a, var_ab);
  if (p1 == 0.0) return 0.0;
  // g_ab >= c/gamma_a + 2^R rho g_ae; average the exponential tail over g_ae.
  const double eve_weight = std::exp2(rate) * rho * var_ae;
  if (eve_weight == 0.0) return p1;
  return p1 * var_ab / (var_ab + eve_weight);
}

double p2_jammed(double rate, double gamma_a, double gamma_e, double var_ab,
                 double var_eb) {
  const double c = snr_threshold(rate);
  if (c <= 0.0) return 1.0;
  const double p1 = exp_tail(c, var_ab * gamma_a);
  if (p1 == 0.0) return 0.0;
  return p1 / (1.0 + c * gamma_e * var_eb / (gamma_a * var_ab));
}

double p3_eve_link(double rate, double gamma_a, double var_ae) {
  return exp_tail(snr_threshold(rate), var_ae * gamma_a);
}

ChannelProbs channel_probs(const SystemConfig& c, const DerivedParams& d, double rho) {
  const double r = d.target_rate;
  return {
      p1_connection(r, d.gamma_a, c.var_ab),
      p_secrecy_nojam(r, d.gamma_a, rho, c.var_ab, c.var_ae),
      p2_jammed(r, d.gamma_a, d.gamma_e, c.var_ab, c.var_eb),
      p3_eve_link(r, d.gamma_a, c.var_ae),
  };
}

}  // namespace jamsec
