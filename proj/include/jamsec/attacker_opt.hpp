#pragma once

// Eve's offline strategy search: exhaustive grid over (rho, alpha_E) and
// optionally tau, minimising Alice's secure throughput.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jamsec/params.hpp"
#include "jamsec/sim.hpp"

namespace jamsec {

enum class GridObjective {
  Simulation,    // mu_sec_hat of the run
  SemiAnalytic,  // the secure-throughput expression on the run's empirical state probabilities
};

struct GridSpec {
  int points = 11;  // M per axis
  bool search_tau = false;
  double tau_max = 0.0;  // 0 means the slot duration
  GridObjective objective = GridObjective::Simulation;
  std::int64_t slots = 100000;
  unsigned threads = 0;  // 0 means hardware concurrency

  void validate() const;
};

struct GridPoint {
  double rho = 0.0;
  double jam_prob = 0.0;
  std::optional<double> tau;
};

struct CellValue {
  double value = 0.0;
  double ci = 0.0;
};

struct GridCell {
  GridPoint point;
  double value = 0.0;
  double ci = 0.0;
  std::uint64_t seed = 0;
  std::optional<std::string> error;  // evaluator failure; excluded from the argmin
};

struct GridResult {
  GridPoint best;
  double best_value = 0.0;
  double best_ci = 0.0;
  std::vector<GridCell> surface;  // rho-major, then alpha_E, then tau
  std::size_t failed_cells = 0;
};

// Axis values: i/(M-1) on [0,1]; tau_max (k+1)/M on (0, tau_max].
std::vector<double> unit_axis(int points);
std::vector<double> tau_axis(int points, double tau_max);

using CellEvaluator = std::function<CellValue(const GridPoint&)>;

// Evaluates every cell (in parallel) and returns the argmin. Ties go to the
// smallest rho, then alpha_E, then tau. Throws std::runtime_error when every
// cell failed.
GridResult grid_search(const GridSpec& spec, double tau_max, const CellEvaluator& evaluate,
                       std::uint64_t seed_for_ledger = 0);

// Simulation-backed search. Every cell reuses `base_seed`, so all cells see
// the same arrivals and channels (common random numbers).
GridResult grid_search(const SystemConfig& config, const AttackerPolicy& base_policy,
                       const GridSpec& spec, std::uint64_t base_seed,
                       const SimFlags& flags = {});

}  // namespace jamsec
