#include "jamsec/validation.hpp"

#include <cmath>
#include <cstdio>

#include "jamsec/channel.hpp"
#include "jamsec/sensing.hpp"
#include "jamsec/sim.hpp"

namespace jamsec {
namespace {

std::string label(const char* fmt, double a, double b, double c) {
  char buf[128];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

CheckResult binomial_check(std::string name, double closed_form, std::int64_t hits,
                           std::int64_t n) {
  const double p_hat = static_cast<double>(hits) / static_cast<double>(n);
  // SE at the closed-form value; the empirical one vanishes when p_hat is 0 or 1.
  const double se = std::sqrt(closed_form * (1.0 - closed_form) / static_cast<double>(n));
  CheckResult r{std::move(name), closed_form, p_hat, 3.0 * se, false};
  r.passed = std::fabs(r.delta()) <= r.tolerance;
  return r;
}

}  // namespace

std::vector<CheckResult> validate_channel_closed_forms(const ValidationOptions& opt) {
  std::vector<CheckResult> out;
  std::uint64_t point = 0;
  for (double rate : {0.5, 1.0, 2.0}) {
    for (double gamma : {1.0, 10.0}) {
      for (double rho : {0.0, 0.5, 1.0}) {
        RngStream rng = RngStream::derive(opt.seed, 0xC4A7, point++);
        std::int64_t h1 = 0, hs = 0, h2 = 0, h3 = 0;
        const double c = std::exp2(rate) - 1.0;
        for (std::int64_t i = 0; i < opt.channel_draws; ++i) {
          const double x = rng.exponential(1.0), y = rng.exponential(1.0),
                       z = rng.exponential(1.0);
          h1 += gamma * x >= c;
          hs += (1.0 + gamma * x) >= std::exp2(rate) * (1.0 + rho * gamma * y);
          h2 += gamma * x >= c * (1.0 + gamma * z);
          h3 += gamma * y >= c;
        }
        const std::string at = label("R=%g gamma=%g rho=%g", rate, gamma, rho);
        const std::int64_t n = opt.channel_draws;
        out.push_back(binomial_check("p1 " + at, p1_connection(rate, gamma, 1.0), h1, n));
        out.push_back(binomial_check("p_sec " + at,
                                     p_secrecy_nojam(rate, gamma, rho, 1.0, 1.0), hs, n));
        out.push_back(binomial_check("p2 " + at, p2_jammed(rate, gamma, gamma, 1.0, 1.0), h2, n));
        out.push_back(binomial_check("p3 " + at, p3_eve_link(rate, gamma, 1.0), h3, n));
      }
    }
  }
  return out;
}

std::vector<CheckResult> validate_missed_detection(const ValidationOptions& opt) {
  std::vector<CheckResult> out;
  std::uint64_t point = 0;
  for (int n : {10, 100}) {
    for (double p_fa : {0.05, 0.1}) {
      for (double g : {1.0, 10.0}) {
        const DetectorSpec spec{n, p_fa, g};
        const EnergyDetector det(spec, DetectorModel::GaussianApprox);
        RngStream rng = RngStream::derive(opt.seed, 0xD37, point++);
        std::int64_t missed = 0;
        for (std::int64_t i = 0; i < opt.detector_trials; ++i) {
          const double snr = rng.exponential(g);
          missed += det.sense(rng, true, snr).missed;
        }
        const double emp = static_cast<double>(missed) / static_cast<double>(opt.detector_trials);
        CheckResult r{label("P_MD N=%g P_FA=%g gamma~=%g", n, p_fa, g), p_md_analytic(spec), emp,
                      0.01, false};
        r.passed = std::fabs(r.delta()) <= r.tolerance;
        out.push_back(r);
      }
    }
  }
  return out;
}

std::vector<CheckResult> validate_false_alarm_calibration(const ValidationOptions& opt) {
  std::vector<CheckResult> out;
  std::uint64_t point = 0;
  for (int n : {1, 10, 100}) {
    for (auto model : {DetectorModel::GaussianApprox, DetectorModel::ExactEnergy}) {
      const DetectorSpec spec{n, 0.1, 10.0};
      const EnergyDetector det(spec, model);
      RngStream rng = RngStream::derive(opt.seed, 0xFA, point++);
      std::int64_t alarms = 0;
      for (std::int64_t i = 0; i < opt.detector_trials; ++i) {
        alarms += det.sense(rng, false, 0.0).false_alarm;
      }
      const char* m = model == DetectorModel::GaussianApprox ? "gauss" : "exact";
      out.push_back(binomial_check(std::string("P_FA ") + m + " N=" + std::to_string(n),
                                   spec.false_alarm_prob, alarms, opt.detector_trials));
    }
  }
  return out;
}

std::vector<CheckResult> validate_energy_conservation(const ValidationOptions& opt) {
  RngStream pick = RngStream::derive(opt.seed, 0xE4E);
  std::int64_t violations = 0;
  std::int64_t slots = 0;
  for (int k = 0; k < opt.fuzz_policies; ++k) {
    SystemConfig c;
    c.arrival_prob = pick.uniform();
    c.access_prob = pick.uniform();
    c.alice_power = db_to_linear(20.0 * pick.uniform());
    c.jam_power = db_to_linear(20.0 * pick.uniform());
    c.decode_power = c.jam_power * pick.uniform();
    c.harvest_efficiency = pick.uniform();
    c.const_energy = pick.bernoulli(0.5) ? 0.0 : 1e-3 * pick.uniform();
    AttackerPolicy p;
    p.jam_prob = pick.uniform();
    p.split_rho = pick.uniform();
    p.sensing_enabled = pick.bernoulli(0.5);
    p.sensing_time = c.slot_duration * (0.01 + 0.99 * pick.uniform());
    p.false_alarm_prob = 0.01 + 0.3 * pick.uniform();

    const SlotContext ctx = SlotContext::make(c, p, {});
    SimState state;
    SlotStreams streams = SlotStreams::derive(opt.seed + static_cast<std::uint64_t>(k));
    std::int64_t arrivals = 0, departures = 0;
    for (int t = 0; t < opt.fuzz_slots; ++t, ++slots) {
      try {
        const SlotOutcome o = slot_step(state, streams, ctx);
        arrivals += o.arrival;
        departures += o.delivered;
        const double expected = o.battery_before - o.e_depleted + o.e_harvested + c.const_energy;
        if (o.battery_after != expected || o.battery_after < 0.0 ||
            o.e_depleted > o.battery_before) {
          ++violations;
        }
      } catch (const InvariantBreach&) {
        ++violations;
      }
    }
    if (arrivals - departures != state.alice.queue_len) ++violations;
  }
  CheckResult r{"energy/queue accounting violations over " + std::to_string(slots) + " slots",
                static_cast<double>(violations), 0.0, 0.0, violations == 0};
  return {r};
}

std::vector<CheckResult> validate_all(const ValidationOptions& opt) {
  std::vector<CheckResult> all;
  for (auto* fn : {&validate_channel_closed_forms, &validate_missed_detection,
                   &validate_false_alarm_calibration, &validate_energy_conservation}) {
    auto part = fn(opt);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace jamsec
