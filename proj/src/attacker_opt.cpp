#include "jamsec/attacker_opt.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "jamsec/analytics.hpp"

namespace jamsec {

void GridSpec::validate() const {
  if (points < 2) throw ConfigError("grid needs M >= 2 points per axis");
  if (slots < 1) throw ConfigError("grid cells need at least one slot");
  if (tau_max < 0.0) throw ConfigError("tau_max must be >= 0");
}

std::vector<double> unit_axis(int points) {
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i) v[i] = static_cast<double>(i) / (points - 1);
  return v;
}

std::vector<double> tau_axis(int points, double tau_max) {
  std::vector<double> v(points);
  for (int k = 0; k < points; ++k) v[k] = tau_max * (k + 1) / points;
  return v;
}

GridResult grid_search(const GridSpec& spec, double tau_max, const CellEvaluator& evaluate,
                       std::uint64_t seed_for_ledger) {
  spec.validate();
  const auto unit = unit_axis(spec.points);
  const auto taus = spec.search_tau ? tau_axis(spec.points, tau_max) : std::vector<double>{};

  GridResult result;
  for (double rho : unit) {
    for (double alpha : unit) {
      if (spec.search_tau) {
        for (double tau : taus) result.surface.push_back({{rho, alpha, tau}, 0, 0, seed_for_ledger, {}});
      } else {
        result.surface.push_back({{rho, alpha, std::nullopt}, 0, 0, seed_for_ledger, {}});
      }
    }
  }

  // Cells write only their own slot, so the merge does not depend on scheduling.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < result.surface.size(); i = next++) {
      GridCell& cell = result.surface[i];
      try {
        const CellValue v = evaluate(cell.point);
        cell.value = v.value;
        cell.ci = v.ci;
      } catch (const std::exception& e) {
        cell.error = e.what();
      }
    }
  };
  unsigned n_threads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
  n_threads = std::clamp<unsigned>(n_threads, 1, static_cast<unsigned>(result.surface.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // Surface order is already (rho, alpha_E, tau) ascending, so the first
  // strict minimum is the tie-break winner.
  const GridCell* best = nullptr;
  for (const GridCell& cell : result.surface) {
    if (cell.error) {
      ++result.failed_cells;
      continue;
    }
    if (!best || cell.value < best->value) best = &cell;
  }
  if (!best) throw std::runtime_error("grid_search: every cell failed");
  result.best = best->point;
  result.best_value = best->value;
  result.best_ci = best->ci;
  return result;
}

GridResult grid_search(const SystemConfig& config, const AttackerPolicy& base_policy,
                       const GridSpec& spec, std::uint64_t base_seed, const SimFlags& flags) {
  spec.validate();
  const double tau_max = spec.tau_max > 0.0 ? spec.tau_max : config.slot_duration;
  const DerivedParams derived = derive(config);

  auto evaluate = [&](const GridPoint& p) {
    AttackerPolicy policy = base_policy;
    policy.split_rho = p.rho;
    policy.jam_prob = p.jam_prob;
    if (p.tau) policy.sensing_time = *p.tau;
    const SimReport rep = run(config, policy, base_seed, spec.slots, flags);
    if (spec.objective == GridObjective::Simulation) {
      return CellValue{rep.mu_sec.mean, rep.mu_sec.ci};
    }
    const ChannelProbs probs = channel_probs(config, derived, policy.split_rho);
    double value = 0.0;
    if (policy.sensing_enabled) {
      DetectorSpec ds;
      ds.n_samples = sample_count(policy.sensing_time, config.bandwidth, flags.sample_rule);
      ds.false_alarm_prob = policy.false_alarm_prob;
      ds.gamma_tilde_a = derived.gamma_tilde_a;
      value = eq8_secure_throughput(rep.access_prob, policy.jam_prob, rep.state, probs,
                                    p_md_analytic(ds), flags.starved_secrecy);
    } else {
      value = eq5_secure_throughput(rep.access_prob, policy.jam_prob, rep.state, probs,
                                    flags.starved_secrecy, StarvedGrouping::Partitioned);
    }
    return CellValue{value, rep.mu_sec.ci};
  };
  return grid_search(spec, tau_max, evaluate, base_seed);
}

}  // namespace jamsec
