// Acceptance suite. Prints one PASS/FAIL line per criterion (plus detail
// lines indented underneath) and exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "jamsec/analytics.hpp"
#include "jamsec/attacker_opt.hpp"
#include "jamsec/config_io.hpp"
#include "jamsec/sim.hpp"
#include "jamsec/validation.hpp"
#include "oracles.hpp"

using namespace jamsec;

namespace {

struct Verdict {
  bool passed = false;
  std::string summary;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. Every closed form against brute-force Monte Carlo, 3 binomial SE.
Verdict closed_forms() {
  const std::int64_t n = 1'000'000;
  int total = 0, ok = 0;
  double worst = 0.0;
  std::uint64_t seed = 1000;
  for (double rate : {0.5, 1.0, 2.0}) {
    for (double gamma : {1.0, 10.0}) {
      for (double rho : {0.0, 0.5, 1.0}) {
        const auto mc = oracle::channel_mc(rate, gamma, gamma, rho, n, seed++);
        const double cf[] = {p1_connection(rate, gamma, 1.0),
                             p_secrecy_nojam(rate, gamma, rho, 1.0, 1.0),
                             p2_jammed(rate, gamma, gamma, 1.0, 1.0),
                             p3_eve_link(rate, gamma, 1.0)};
        const double emp[] = {mc.p1, mc.p_sec, mc.p2, mc.p3};
        const char* names[] = {"p1", "p_sec", "p2", "p3"};
        for (int k = 0; k < 4; ++k) {
          const double z = (emp[k] - cf[k]) / oracle::binomial_se(cf[k], n);
          worst = std::max(worst, std::fabs(z));
          ++total;
          if (std::fabs(z) <= 3.0) {
            ++ok;
          } else {
            std::printf("      %s R=%g gamma=%g rho=%g closed=%.6f mc=%.6f z=%.2f\n", names[k],
                        rate, gamma, rho, cf[k], emp[k], z);
          }
        }
      }
    }
  }
  return {ok == total, fmt("%d/%d within 3 SE, worst |z| = %.2f", ok, total, worst)};
}

// 2. Missed-detection integral against the simulated detector, +-0.01.
Verdict missed_detection() {
  const std::int64_t trials = 1'000'000;
  double worst = 0.0;
  std::uint64_t seed = 2000;
  bool all = true;
  for (int n : {10, 100}) {
    for (double p_fa : {0.05, 0.1}) {
      for (double g : {1.0, 10.0}) {
        const DetectorSpec spec{n, p_fa, g};
        const EnergyDetector det(spec, DetectorModel::GaussianApprox);
        RngStream rng(seed++);
        std::int64_t missed = 0;
        for (std::int64_t i = 0; i < trials; ++i) {
          missed += det.sense(rng, true, rng.exponential(g)).missed;
        }
        const double emp = static_cast<double>(missed) / static_cast<double>(trials);
        const double ana = p_md_analytic(spec);
        const double d = std::fabs(emp - ana);
        worst = std::max(worst, d);
        all = all && d <= 0.01;
        std::printf("      N=%-3d P_FA=%.2f gamma~=%-4g analytic=%.5f simulated=%.5f |d|=%.5f\n",
                    n, p_fa, g, ana, emp, d);
      }
    }
  }
  return {all, fmt("8 points, worst |delta| = %.5f (tol 0.01)", worst)};
}

// 3. Exact battery and queue accounting over 10^6 slots of random policies.
Verdict conservation() {
  ValidationOptions opt;
  opt.seed = 3000;
  opt.fuzz_policies = 1000;
  opt.fuzz_slots = 1000;
  const CheckResult r = validate_energy_conservation(opt).front();
  return {r.passed, fmt("%s: %.0f", r.name.c_str(), r.value)};
}

// 4. Empirical state probabilities plugged into the throughput expressions.
Verdict semi_analytic() {
  RngStream pick(4000);
  int ok = 0, total = 0;
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    SystemConfig c;
    AttackerPolicy p;
    c.alice_power = db_to_linear(3.0 + 12.0 * pick.uniform());
    c.jam_power = db_to_linear(3.0 + 12.0 * pick.uniform());
    const double rate = 0.5 + 1.5 * pick.uniform();
    c.packet_bits = rate * c.bandwidth * c.slot_duration;
    c.arrival_prob = 0.1 + 0.8 * pick.uniform();
    c.access_prob = 0.3 + 0.7 * pick.uniform();
    p.jam_prob = pick.uniform();
    p.split_rho = pick.uniform();
    const double e_d = std::exp(std::log(1e-6) + (std::log(5e-3) - std::log(1e-6)) * pick.uniform());
    c.decode_power = std::min(e_d / c.slot_duration, c.jam_power);
    c.harvest_efficiency = 0.2 + 0.8 * pick.uniform();
    p.sensing_enabled = pick.uniform() < 0.5;
    p.sensing_time = c.slot_duration * (0.02 + 0.48 * pick.uniform());
    p.false_alarm_prob = 0.01 + 0.19 * pick.uniform();

    const SimReport r = run(c, p, 4100 + k, 100'000);
    const DerivedParams d = derive(c);
    const ChannelProbs probs = channel_probs(c, d, p.split_rho);
    const double eq1 = eq1_service_rate(r.access_prob, p.jam_prob, r.state, probs.p1);
    double sec = 0.0;
    if (p.sensing_enabled) {
      const DetectorSpec ds{sample_count(p.sensing_time, c.bandwidth, SampleCountRule::Nyquist),
                            p.false_alarm_prob, d.gamma_tilde_a};
      sec = eq8_secure_throughput(r.access_prob, p.jam_prob, r.state, probs, p_md_analytic(ds));
    } else {
      sec = eq5_secure_throughput(r.access_prob, p.jam_prob, r.state, probs,
                                  StarvedSecrecy::AsWritten, StarvedGrouping::Partitioned);
    }
    const double z1 = (r.mu_a.mean - eq1) / r.mu_a.se;
    const double z2 = (r.mu_sec.mean - sec) / r.mu_sec.se;
    worst = std::max({worst, std::fabs(z1), std::fabs(z2)});
    total += 2;
    ok += (std::fabs(z1) <= 3.0) + (std::fabs(z2) <= 3.0);
    std::printf("      pair %d %s: mu_A=%.4f eq1=%.4f z=%+.2f | mu_sec=%.4f %s=%.4f z=%+.2f\n", k,
                p.sensing_enabled ? "sense" : "plain", r.mu_a.mean, eq1, z1, r.mu_sec.mean,
                p.sensing_enabled ? "eq8" : "eq5", sec, z2);
  }
  return {ok == total, fmt("%d/%d within 3 batch-means SE, worst |z| = %.2f", ok, total, worst)};
}

// 5. Stable below the access bound, linear queue growth above the service rate.
Verdict stability() {
  const std::int64_t n = 1'000'000;
  SystemConfig c;
  c.access_prob = 0.8;
  AttackerPolicy p;
  p.jam_prob = 0.3;
  p.split_rho = 0.5;
  const DerivedParams d = derive(c);
  const double bound = *c.access_prob * (1.0 - p.jam_prob) * p1_connection(d.target_rate, d.gamma_a, c.var_ab);
  bool all = true;
  for (std::uint64_t seed : {51, 52, 53}) {
    SystemConfig low = c;
    low.arrival_prob = 0.9 * bound;
    const SimReport r = run(low, p, seed, n);

    SystemConfig sat = c;
    sat.arrival_prob = 1.0;
    const double mu = run(sat, p, seed, n).mu_a.mean;
    SystemConfig high = c;
    high.arrival_prob = std::min(1.0, 1.1 * mu);
    const SimReport h = run(high, p, seed, n);

    const bool ok = r.queue.mean < 100.0 && h.queue.final > 0.05 * static_cast<double>(n);
    all = all && ok;
    std::printf("      seed %llu: lambda=%.4f mean queue %.2f | mu_A=%.4f lambda=%.4f final queue %.0f\n",
                static_cast<unsigned long long>(seed), low.arrival_prob, r.queue.mean, mu,
                high.arrival_prob, h.queue.final);
  }
  return {all, fmt("bound alpha_A(1-alpha_E)P1 = %.4f; 3 seeds", bound)};
}

// 6. Secure throughput vs arrival rate with and without an optimised attack.
Verdict figure1() {
  const std::vector<double> lambdas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  const std::int64_t slots = 100'000;
  const std::uint64_t seed = 6000;
  const SystemConfig base;  // 10 dB powers, eta 0.6, E_d 5 uJ, E_const 0
  GridSpec g;
  g.points = 11;
  g.slots = slots;

  bool reduction = true, sensing_close = true;
  double loss_07 = 0.0, baseline_07 = 0.0;
  std::printf("      lambda  no_attack  attack_nosense (rho,aE)  attack_sense (rho,aE)\n");
  for (double lambda : lambdas) {
    SystemConfig c = base;
    c.arrival_prob = lambda;
    const double none = run(c, AttackerPolicy{}, seed, slots).mu_sec.mean;
    AttackerPolicy plain, sensing;
    sensing.sensing_enabled = true;
    const GridResult a = grid_search(c, plain, g, seed);
    const GridResult s = grid_search(c, sensing, g, seed);
    std::printf("      %.1f     %.4f     %.4f (%.1f,%.1f)        %.4f (%.1f,%.1f)\n", lambda, none,
                a.best_value, a.best.rho, a.best.jam_prob, s.best_value, s.best.rho,
                s.best.jam_prob);
    if (lambda >= 0.3 - 1e-12) {
      reduction = reduction && a.best_value < none && s.best_value < none;
    }
    sensing_close = sensing_close && std::fabs(a.best_value - s.best_value) <= 0.02;
    if (std::fabs(lambda - 0.7) < 1e-12) {
      baseline_07 = none;
      loss_07 = 1.0 - a.best_value / none;
    }
  }
  const bool part_a = std::fabs(baseline_07 - 0.7) <= 0.03;
  const bool part_b = reduction && loss_07 >= 0.30 && loss_07 <= 0.70;
  std::printf("      (a) no-attack mu_sec at 0.7 = %.4f [%s]\n", baseline_07, part_a ? "ok" : "off");
  std::printf("      (b) strict reduction for lambda >= 0.3: %s; loss at 0.7 = %.1f%% [%s]\n",
              reduction ? "yes" : "no", 100.0 * loss_07, part_b ? "ok" : "off");
  std::printf("      (c) sensing within 0.02 everywhere: %s\n", sensing_close ? "yes" : "no");
  return {part_a && part_b && sensing_close,
          fmt("baseline %.4f, loss %.1f%%, sensing gap %s", baseline_07, 100.0 * loss_07,
              sensing_close ? "<= 0.02" : "> 0.02")};
}

// 7. Repeated calls with the same seed give identical results.
Verdict determinism() {
  SystemConfig c;
  c.arrival_prob = 0.6;
  AttackerPolicy p;
  p.jam_prob = 0.4;
  p.split_rho = 0.6;
  p.sensing_enabled = true;
  const bool runs = to_json(run(c, p, 7, 200'000)).dump() == to_json(run(c, p, 7, 200'000)).dump();

  GridSpec g;
  g.points = 4;
  g.slots = 20'000;
  g.threads = 1;
  const std::string serial = to_json(grid_search(c, p, g, 7)).dump();
  g.threads = 4;
  const std::string threaded = to_json(grid_search(c, p, g, 7)).dump();
  const bool grids = serial == threaded;

  ValidationOptions v;
  v.channel_draws = 20'000;
  v.detector_trials = 20'000;
  v.fuzz_policies = 50;
  v.fuzz_slots = 200;
  const auto a = validate_all(v), b = validate_all(v);
  bool checks = a.size() == b.size();
  for (std::size_t i = 0; checks && i < a.size(); ++i) {
    checks = a[i].value == b[i].value && a[i].reference == b[i].reference;
  }
  return {runs && grids && checks,
          fmt("run %s, grid (1 vs 4 threads) %s, validate %s", runs ? "identical" : "DIFFERS",
              grids ? "identical" : "DIFFERS", checks ? "identical" : "DIFFERS")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> fn;
  };
  const Criterion criteria[] = {
      {"1 closed forms vs Monte Carlo (10^6 draws)", closed_forms},
      {"2 missed-detection integral vs detector (10^6 trials)", missed_detection},
      {"3 exact energy and queue conservation (10^6 slots)", conservation},
      {"4 semi-analytic consistency (10 random pairs, 10^5 slots)", semi_analytic},
      {"5 stability dichotomy (3 seeds, 10^6 slots)", stability},
      {"6 secure throughput sweep with optimised attacks (M=11)", figure1},
      {"7 determinism", determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::printf("... %s\n", c.name);
    std::fflush(stdout);
    const Verdict v = c.fn();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %s: %s (%.1f s)\n", v.passed ? "PASS" : "FAIL", c.name, v.summary.c_str(),
                secs);
    std::fflush(stdout);
    failed += !v.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed ? 1 : 0;
}
