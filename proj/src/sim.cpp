#include "jamsec/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace jamsec {
namespace {

enum StreamPurpose : std::uint64_t {
  kArrivals = 1,
  kChannel = 2,
  kAccess = 3,
  kEve = 4,
  kSensing = 5,
};

BatteryBand band_of(double level, const DerivedParams& d) {
  if (level < d.decode_energy) return BatteryBand::Low;
  if (level < d.jam_energy) return BatteryBand::Mid;
  return BatteryBand::High;
}

// Batch means over equal contiguous batches of the measured window.
class BatchAccumulator {
 public:
  BatchAccumulator(std::int64_t n, int batches)
      : n_(n), batches_(static_cast<int>(std::clamp<std::int64_t>(batches, 1, std::max<std::int64_t>(n, 1)))),
        sums_(batches_, 0.0) {}

  void add(std::int64_t index, double x) { sums_[batch_of(index)] += x; }

  Estimate estimate() const {
    Estimate e;
    std::vector<double> means(batches_);
    double total = 0.0;
    for (int b = 0; b < batches_; ++b) {
      const double size = static_cast<double>(batch_end(b) - batch_begin(b));
      means[b] = size > 0 ? sums_[b] / size : 0.0;
      total += sums_[b];
    }
    e.mean = n_ > 0 ? total / static_cast<double>(n_) : 0.0;
    if (batches_ < 2) {
      e.se = e.ci = std::numeric_limits<double>::quiet_NaN();
      return e;
    }
    double mean_of_means = 0.0;
    for (double m : means) mean_of_means += m;
    mean_of_means /= batches_;
    double ss = 0.0;
    for (double m : means) ss += (m - mean_of_means) * (m - mean_of_means);
    const double sd = std::sqrt(ss / (batches_ - 1));
    e.se = sd / std::sqrt(static_cast<double>(batches_));
    boost::math::students_t dist(batches_ - 1);
    e.ci = boost::math::quantile(boost::math::complement(dist, 0.025)) * e.se;
    return e;
  }

 private:
  std::int64_t batch_begin(int b) const { return n_ * b / batches_; }
  std::int64_t batch_end(int b) const { return n_ * (b + 1) / batches_; }
  int batch_of(std::int64_t i) const {
    int b = static_cast<int>(i * batches_ / n_);
    while (b + 1 < batches_ && i >= batch_end(b)) ++b;
    while (b > 0 && i < batch_begin(b)) --b;
    return b;
  }

  std::int64_t n_;
  int batches_;
  std::vector<double> sums_;
};

}  // namespace

double resolve_access_prob(const SystemConfig& config, const DerivedParams& derived) {
  if (config.access_prob) return *config.access_prob;
  const double p1 = p1_connection(derived.target_rate, derived.gamma_a, config.var_ab);
  return stable_access_prob(config.arrival_prob, config.assumed_jam_prob, p1,
                            config.access_margin);
}

SlotContext SlotContext::make(const SystemConfig& config, const AttackerPolicy& policy,
                              const SimFlags& flags) {
  SlotContext ctx;
  ctx.config = config;
  ctx.policy = policy;
  ctx.flags = flags;
  ctx.derived = derive(config);
  validate(policy, config);
  if (!(flags.burn_in_fraction >= 0.0 && flags.burn_in_fraction < 1.0)) {
    throw ConfigError("burn-in fraction must be in [0,1)");
  }
  if (flags.batches < 1) throw ConfigError("batch count must be >= 1");
  if (flags.initial_queue < 0 || !(flags.initial_battery >= 0.0)) {
    throw ConfigError("initial queue and battery must be >= 0");
  }
  ctx.variances = ChannelVariances::from(config);
  ctx.access_prob = resolve_access_prob(config, ctx.derived);
  if (policy.sensing_enabled) {
    DetectorSpec spec;
    spec.n_samples = sample_count(policy.sensing_time, config.bandwidth, flags.sample_rule);
    spec.false_alarm_prob = policy.false_alarm_prob;
    spec.gamma_tilde_a = ctx.derived.gamma_tilde_a;
    ctx.detector.emplace(spec, flags.detector_model);
  }
  return ctx;
}

SlotStreams SlotStreams::derive(std::uint64_t seed) {
  return {RngStream::derive(seed, kArrivals), RngStream::derive(seed, kChannel),
          RngStream::derive(seed, kAccess), RngStream::derive(seed, kEve),
          RngStream::derive(seed, kSensing)};
}

SlotOutcome slot_step(SimState& state, SlotStreams& streams, const SlotContext& ctx) {
  const DerivedParams& d = ctx.derived;
  const AttackerPolicy& policy = ctx.policy;
  SlotOutcome out;

  out.arrival = streams.arrivals.bernoulli(ctx.config.arrival_prob);
  if (out.arrival) ++state.alice.queue_len;
  out.queue_nonempty = state.alice.queue_len > 0;

  out.gains = sample_slot(streams.channel, ctx.variances);
  const SlotRealization& g = out.gains;

  out.alice = alice_slot_decision(streams.access, state.alice, g.g_ab, ctx.access_prob, d);
  out.I_A = out.alice.active;

  out.battery_before = state.eve.level;
  out.band = band_of(state.eve.level, d);
  out.action = eve_choose_action(streams.eve, state.eve, policy, d);
  out.I_E = out.action == EveAction::Jam;

  // Would Eve's detector have missed Alice had she transmitted this slot.
  // Equals I_MD whenever Alice is active.
  bool would_miss = false;
  if (ctx.detector) {
    // Draws happen every slot so the sensing stream stays aligned across policies.
    const double g_sense = ctx.flags.detector_fading == DetectorFading::Independent
                               ? streams.sensing.exponential(ctx.variances.ae)
                               : g.g_ae;
    const double snr = d.gamma_a * g_sense;
    const double noise = ctx.detector->draw_noise(streams.sensing);
    const DetectionResult r = ctx.detector->decide(noise, out.I_A, snr);
    if (out.action == EveAction::SplitDecode) {
      out.sensing = r;
      out.I_D = out.I_A && r.detected;
      out.I_MD = r.missed;
      out.I_FA = r.false_alarm;
      would_miss = ctx.detector->decide(noise, true, snr).missed;
    }
  }

  const bool jammed_link_ok = rate_ab_jammed(g.g_ab, g.g_eb, d.gamma_a, d.gamma_e) >= d.target_rate;
  const bool jam_passes = ctx.flags.jam_success_departs && jammed_link_ok;
  out.service_opportunity =
      out.alice.accesses && out.alice.link_up && (!out.I_E || jam_passes);
  out.delivered = out.I_A && (!out.I_E || jam_passes);

  // Slots where Eve does not eavesdrop. As-written credits Alice's attempt
  // (queue nonempty and access) by Eve's own link event, evaluated even when
  // Alice's link is in outage; link-based credits the delivered packet.
  const bool attempt = out.queue_nonempty && out.alice.accesses;
  const bool as_written = ctx.flags.starved_secrecy == StarvedSecrecy::AsWritten;
  const bool eve_link_ok = rate_ab(g.g_ae, d.gamma_a) >= d.target_rate;
  const bool eavesdrop_secure =
      out.I_A && secrecy_rate_nojam(g.g_ab, g.g_ae, d.gamma_a, policy.split_rho) >= d.target_rate;
  switch (out.action) {
    case EveAction::Jam:
      out.secure = out.I_A && jammed_link_ok;
      break;
    case EveAction::HarvestOnly:
      out.secure = as_written ? attempt && eve_link_ok : out.I_A;
      break;
    case EveAction::SplitDecode:
      if (!out.sensing) {
        out.secure = eavesdrop_secure;
      } else if (out.I_D) {
        out.secure = eavesdrop_secure;
      } else if (as_written) {
        out.secure = attempt && would_miss && eve_link_ok;
      } else {
        out.secure = out.I_MD;
      }
      break;
  }

  out.e_harvested =
      energy_harvested(out.action, out.I_A, g.g_ae, policy, ctx.config, out.sensing);
  out.e_depleted = energy_depleted(out.action, out.I_A, policy, ctx.config, d, out.sensing);
  state.eve = battery_step(state.eve, out.e_depleted, out.e_harvested, ctx.config.const_energy);
  out.battery_after = state.eve.level;

  if (out.delivered) --state.alice.queue_len;
  return out;
}

SimReport run(const SystemConfig& config, const AttackerPolicy& policy, std::uint64_t seed,
              std::int64_t n_slots, const SimFlags& flags) {
  if (n_slots < 1) throw ConfigError("n_slots must be >= 1");
  const SlotContext ctx = SlotContext::make(config, policy, flags);

  SimReport rep;
  rep.n_slots = n_slots;
  rep.seed = seed;
  rep.access_prob = ctx.access_prob;
  rep.burn_in_slots = static_cast<std::int64_t>(std::floor(flags.burn_in_fraction *
                                                           static_cast<double>(n_slots)));
  rep.measured_slots = n_slots - rep.burn_in_slots;
  rep.initial_queue = flags.initial_queue;

  SimState state;
  state.alice.queue_len = flags.initial_queue;
  state.eve.level = flags.initial_battery;
  SlotStreams streams = SlotStreams::derive(seed);

  const std::int64_t m = rep.measured_slots;
  BatchAccumulator mu_a(m, flags.batches), thr(m, flags.batches), sec(m, flags.batches),
      eh(m, flags.batches), dep(m, flags.batches);
  std::int64_t n_low = 0, n_mid = 0, n_high = 0, n_battery_high = 0;
  double queue_sum = 0.0, battery_sum = 0.0;
  rep.queue.max = static_cast<double>(state.alice.queue_len);
  rep.battery.max = state.eve.level;

  for (std::int64_t t = 0; t < n_slots; ++t) {
    const SlotOutcome o = slot_step(state, streams, ctx);
    rep.arrivals += o.arrival;
    rep.departures += o.delivered;
    if (t < rep.burn_in_slots) continue;

    const std::int64_t i = t - rep.burn_in_slots;
    mu_a.add(i, o.service_opportunity);
    thr.add(i, o.delivered);
    sec.add(i, o.secure);
    eh.add(i, o.e_harvested);
    dep.add(i, o.e_depleted);

    if (o.band == BatteryBand::High) ++n_battery_high;
    if (o.queue_nonempty) {
      switch (o.band) {
        case BatteryBand::Low: ++n_low; break;
        case BatteryBand::Mid: ++n_mid; break;
        case BatteryBand::High: ++n_high; break;
      }
    }
    switch (o.action) {
      case EveAction::Jam: ++rep.jam_slots; break;
      case EveAction::SplitDecode: ++rep.decode_slots; break;
      case EveAction::HarvestOnly: ++rep.starved_slots; break;
    }
    if (o.sensing) {
      if (o.I_A) {
        ++rep.sensed_active;
        rep.missed += o.I_MD;
      } else {
        ++rep.sensed_idle;
        rep.false_alarms += o.I_FA;
      }
    }

    const double q = static_cast<double>(state.alice.queue_len);
    queue_sum += q;
    battery_sum += state.eve.level;
    rep.queue.max = std::max(rep.queue.max, q);
    rep.battery.max = std::max(rep.battery.max, state.eve.level);
  }

  const double md = static_cast<double>(m);
  rep.mu_a = mu_a.estimate();
  rep.throughput = thr.estimate();
  rep.mu_sec = sec.estimate();
  rep.eh_rate = eh.estimate();
  rep.depletion_rate = dep.estimate();
  rep.state.p_low = n_low / md;
  rep.state.p_mid = n_mid / md;
  rep.state.p_high = n_high / md;
  rep.state.pr_battery_high = n_battery_high / md;
  rep.state.pr_battery_below = 1.0 - rep.state.pr_battery_high;
  rep.queue.mean = queue_sum / md;
  rep.queue.final = static_cast<double>(state.alice.queue_len);
  rep.battery.mean = battery_sum / md;
  rep.battery.final = state.eve.level;
  return rep;
}

}  // namespace jamsec
