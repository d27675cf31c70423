#ifndef PRCURVE_SIMULATION_HPP_
#define PRCURVE_SIMULATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "prcurve/class_score_model.hpp"

namespace prcurve {

// How the positive-class count n+ is chosen per replicate. Binomial matches
// sampling n labeled instances i.i.d.; fixed-expected pins n+ = round(n pi+)
// for variance-reduction experiments.
enum class ClassCountMode { kBinomial, kFixedExpected };

struct SimulationConfig {
  explicit SimulationConfig(ClassScoreModel m) : model(std::move(m)) {}

  ClassScoreModel model;
  int n = 1000;
  int replicates = 5000;
  std::vector<double> grid;  // recall values in (0, 1]
  std::uint64_t master_seed = 1;
  ClassCountMode mode = ClassCountMode::kBinomial;
};

struct Histogram {
  double lo = 0.0;
  double width = 0.0;
  std::vector<long> counts;
};

// Freedman-Diaconis bin width with a 30-bin fallback when the IQR
// degenerates; a single bin when all values coincide.
Histogram build_histogram(const std::vector<double>& values);

// Two plateau-merged local maxima at least 2 bins apart whose valley stays
// under half the smaller peak.
bool histogram_bimodal(const Histogram& hist);

// One-sample Kolmogorov-Smirnov distance between the values and the
// standard normal (fully specified; nothing re-estimated).
double ks_statistic_standard_normal(std::vector<double> z);

// Per-grid-point comparison of the replicate distribution with the
// asymptotic normal approximation.
//
// flag semantics:
//   kOk          z = sqrt(n) (v - PR(x)) / sigma(x), KS vs N(0,1)
//   kDegenerate  sigma^2(x) = 0; mass_at_limit reported instead of KS
//   kUnbounded   sigma^2(x) = +inf; no standardization
//   kEmpirical   no densities (discrete law): z = (v - mean)/sd, KS vs
//                N(0,1) as a plain normality check
//   kUnavailable x = 1 (outside the open interval the theory covers)
struct PerXSummary {
  enum class Flag { kOk, kDegenerate, kUnbounded, kEmpirical, kUnavailable };

  double x = 0.0;
  double mean = 0.0;
  double sd = 0.0;
  Flag flag = Flag::kUnavailable;
  std::optional<double> ks;
  std::optional<double> z_mean;
  std::optional<double> z_sd;
  std::optional<double> mass_at_limit;  // fraction of replicates at PR(x)
  Histogram histogram;
  bool bimodal = false;
};

struct SimulationResult {
  explicit SimulationResult(SimulationConfig c) : config(std::move(c)) {}

  SimulationConfig config;
  // Row-major replicate x grid matrix of pr_hat values.
  std::vector<double> values;
  std::vector<int> n_plus_per_replicate;
  long redraws = 0;  // all-one-class label draws that were rejected
  std::vector<PerXSummary> per_x;

  double value(int replicate, int grid_index) const {
    return values[static_cast<std::size_t>(replicate) * config.grid.size() +
                  static_cast<std::size_t>(grid_index)];
  }
};

// Runs the replicates (in parallel when workers > 1) and summarizes each
// grid point. Replicate r always derives its substream from
// (master_seed, r), so the matrix is identical for any worker count.
SimulationResult run_simulation(const SimulationConfig& config,
                                unsigned workers = 1);

// Recomputes the summary for one grid value (must be present in the grid).
PerXSummary compare_to_normal(const SimulationResult& result,
                              const ClassScoreModel& model, double x);

}  // namespace prcurve

#endif  // PRCURVE_SIMULATION_HPP_
