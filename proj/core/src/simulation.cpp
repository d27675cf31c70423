#include "prcurve/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "prcurve/asymptotics.hpp"
#include "prcurve/empirical.hpp"
#include "prcurve/population.hpp"
#include "prcurve/special_functions.hpp"

namespace prcurve {

Histogram build_histogram(const std::vector<double>& values) {
  Histogram hist;
  if (values.empty()) return hist;
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front();
  const double hi = sorted.back();
  if (lo == hi) {
    hist.lo = lo;
    hist.width = 1.0;
    hist.counts.assign(1, static_cast<long>(sorted.size()));
    return hist;
  }
  const double n = static_cast<double>(sorted.size());
  auto type7 = [&](double q) {
    const double pos = q * (n - 1.0);
    const std::size_t i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    if (i + 1 >= sorted.size()) return sorted.back();
    return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
  };
  const double iqr = type7(0.75) - type7(0.25);
  double width = 2.0 * iqr / std::cbrt(n);
  std::size_t bins;
  if (width > 0.0) {
    bins = static_cast<std::size_t>(std::ceil((hi - lo) / width));
    bins = std::clamp<std::size_t>(bins, 1, 100000);
  } else {
    bins = 30;
  }
  hist.lo = lo;
  hist.width = (hi - lo) / static_cast<double>(bins);
  hist.counts.assign(bins, 0);
  for (double v : sorted) {
    auto b = static_cast<std::size_t>((v - lo) / hist.width);
    if (b >= bins) b = bins - 1;  // v == hi lands in the last bin
    ++hist.counts[b];
  }
  return hist;
}

bool histogram_bimodal(const Histogram& hist) {
  const std::vector<long>& c = hist.counts;
  if (c.size() < 3) return false;

  // Plateau-merged local maxima: a maximal run of equal counts that stands
  // strictly above both neighbors (edges count as zero outside). Only
  // substantial maxima count as modes; sampling noise in sparse tail bins
  // must not read as extra peaks.
  long gmax = 0;
  for (long v : c) gmax = std::max(gmax, v);
  const long floor_height = (gmax + 4) / 5;  // 20% of the tallest bin
  struct Peak {
    std::size_t pos;
    long height;
  };
  std::vector<Peak> peaks;
  std::size_t i = 0;
  while (i < c.size()) {
    std::size_t j = i;
    while (j + 1 < c.size() && c[j + 1] == c[i]) ++j;
    const long left = i == 0 ? 0 : c[i - 1];
    const long right = j + 1 < c.size() ? c[j + 1] : 0;
    if (c[i] >= floor_height && c[i] > left && c[i] > right) {
      peaks.push_back({(i + j) / 2, c[i]});
    }
    i = j + 1;
  }
  for (std::size_t a = 0; a < peaks.size(); ++a) {
    for (std::size_t b = a + 1; b < peaks.size(); ++b) {
      if (peaks[b].pos - peaks[a].pos < 2) continue;
      long valley = std::numeric_limits<long>::max();
      for (std::size_t k = peaks[a].pos + 1; k < peaks[b].pos; ++k) {
        valley = std::min(valley, c[k]);
      }
      const long smaller = std::min(peaks[a].height, peaks[b].height);
      if (2 * valley < smaller) return true;
    }
  }
  return false;
}

double ks_statistic_standard_normal(std::vector<double> z) {
  if (z.empty()) throw std::domain_error("ks: empty sample");
  std::sort(z.begin(), z.end());
  const double n = static_cast<double>(z.size());
  double d = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double f = normal_cdf(z[i]);
    d = std::max(d, std::fabs((static_cast<double>(i) + 1.0) / n - f));
    d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
  }
  return d;
}

namespace {

void validate_config(const SimulationConfig& cfg) {
  if (cfg.n < 2) throw std::domain_error("simulation: n must be >= 2");
  if (cfg.replicates < 1) {
    throw std::domain_error("simulation: replicates must be >= 1");
  }
  if (cfg.grid.empty()) throw std::domain_error("simulation: empty grid");
  for (double x : cfg.grid) {
    if (!(x > 0.0 && x <= 1.0)) {
      throw std::domain_error("simulation: grid values must lie in (0, 1]");
    }
  }
  if (cfg.mode == ClassCountMode::kFixedExpected) {
    const long k = std::lround(cfg.n * cfg.model.pi_plus());
    if (k < 1 || k >= cfg.n) {
      throw std::domain_error(
          "simulation: fixed-expected mode needs 1 <= round(n pi+) <= n-1");
    }
  }
}

// One replicate: class counts, class samples, pr_hat on the grid.
// Everything is drawn from this replicate's own substream.
long run_replicate(const SimulationConfig& cfg, std::uint64_t replicate,
                   double* out_row, int* out_n_plus) {
  RandomStream stream(cfg.master_seed, replicate);
  const double pi_plus = cfg.model.pi_plus();
  const std::size_t n = static_cast<std::size_t>(cfg.n);

  std::size_t n_plus = 0;
  long redraws = 0;
  if (cfg.mode == ClassCountMode::kBinomial) {
    for (;;) {
      n_plus = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (stream.uniform01() < pi_plus) ++n_plus;
      }
      if (n_plus > 0 && n_plus < n) break;
      ++redraws;  // a one-class sample has no PR estimate; redraw, counted
      if (redraws > 1000000) {
        throw std::runtime_error(
            "simulation: prior is too extreme for n, both classes are "
            "almost never drawn together");
      }
    }
  } else {
    n_plus = static_cast<std::size_t>(std::lround(cfg.n * pi_plus));
  }

  EmpiricalSample sample;
  sample.s_plus = draw_samples(cfg.model.plus(), n_plus, stream);
  sample.s_minus = draw_samples(cfg.model.minus(), n - n_plus, stream);

  const PRHatCurve curve(sample);
  for (std::size_t g = 0; g < cfg.grid.size(); ++g) {
    out_row[g] = curve.value(cfg.grid[g]);
  }
  *out_n_plus = static_cast<int>(n_plus);
  return redraws;
}

PerXSummary summarize_column(const std::vector<double>& column,
                             const ClassScoreModel& model, double x, int n) {
  PerXSummary s;
  s.x = x;
  const double r = static_cast<double>(column.size());
  double mean = 0.0;
  for (double v : column) mean += v;
  mean /= r;
  double ss = 0.0;
  for (double v : column) ss += (v - mean) * (v - mean);
  const double sd = column.size() > 1 ? std::sqrt(ss / (r - 1.0)) : 0.0;
  s.mean = mean;
  s.sd = sd;
  s.histogram = build_histogram(column);
  s.bimodal = histogram_bimodal(s.histogram);

  const bool continuous =
      model.plus().is_continuous() && model.minus().is_continuous();
  const auto mass_at = [&](double center) {
    long hits = 0;
    for (double v : column) {
      if (std::fabs(v - center) <= 1e-12) ++hits;
    }
    return static_cast<double>(hits) / r;
  };

  if (x == 1.0) {
    s.flag = PerXSummary::Flag::kUnavailable;
    return s;
  }
  if (!continuous) {
    // No densities, no sigma^2: keep the centering at the population value
    // and substitute only the unavailable scale by the sample sd. A normal
    // limit would make these z-scores standard normal.
    s.flag = PerXSummary::Flag::kEmpirical;
    const double pr = eval_pr(model, x);
    s.mass_at_limit = mass_at(pr);
    if (sd > 1e-15) {
      std::vector<double> z;
      z.reserve(column.size());
      for (double v : column) z.push_back((v - pr) / sd);
      s.ks = ks_statistic_standard_normal(std::move(z));
    }
    return s;
  }

  const VarianceProfile prof = sigma_squared(model, x);
  if (prof.flag == VarianceProfile::Flag::kDegenerate) {
    s.flag = PerXSummary::Flag::kDegenerate;
    s.mass_at_limit = mass_at(prof.pr);
    return s;
  }
  if (prof.flag == VarianceProfile::Flag::kUnbounded) {
    s.flag = PerXSummary::Flag::kUnbounded;
    return s;
  }
  s.flag = PerXSummary::Flag::kOk;
  const double scale = std::sqrt(static_cast<double>(n) / prof.sigma2);
  std::vector<double> z;
  z.reserve(column.size());
  for (double v : column) z.push_back((v - prof.pr) * scale);
  double zm = 0.0;
  for (double v : z) zm += v;
  zm /= r;
  double zss = 0.0;
  for (double v : z) zss += (v - zm) * (v - zm);
  s.z_mean = zm;
  s.z_sd = z.size() > 1 ? std::sqrt(zss / (r - 1.0)) : 0.0;
  s.ks = ks_statistic_standard_normal(std::move(z));
  return s;
}

}  // namespace

SimulationResult run_simulation(const SimulationConfig& cfg, unsigned workers) {
  validate_config(cfg);
  const std::size_t r_count = static_cast<std::size_t>(cfg.replicates);
  const std::size_t g_count = cfg.grid.size();

  SimulationResult result{cfg};
  result.values.assign(r_count * g_count, 0.0);
  result.n_plus_per_replicate.assign(r_count, 0);
  std::vector<long> redraws(r_count, 0);

  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t rep = lo; rep < hi; ++rep) {
      redraws[rep] = run_replicate(cfg, rep, &result.values[rep * g_count],
                                   &result.n_plus_per_replicate[rep]);
    }
  };

  if (workers <= 1 || r_count < 2) {
    run_range(0, r_count);
  } else {
    const std::size_t w = std::min<std::size_t>(workers, r_count);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(w);
    pool.reserve(w);
    for (std::size_t t = 0; t < w; ++t) {
      const std::size_t lo = r_count * t / w;
      const std::size_t hi = r_count * (t + 1) / w;
      pool.emplace_back([&, lo, hi, t] {
        try {
          run_range(lo, hi);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  result.redraws = 0;
  for (long c : redraws) result.redraws += c;

  // Ordered deterministic reduction: summaries depend only on the matrix.
  std::vector<double> column(r_count);
  for (std::size_t g = 0; g < g_count; ++g) {
    for (std::size_t rep = 0; rep < r_count; ++rep) {
      column[rep] = result.values[rep * g_count + g];
    }
    result.per_x.push_back(
        summarize_column(column, cfg.model, cfg.grid[g], cfg.n));
  }
  return result;
}

PerXSummary compare_to_normal(const SimulationResult& result,
                              const ClassScoreModel& model, double x) {
  const std::vector<double>& grid = result.config.grid;
  const auto it = std::find(grid.begin(), grid.end(), x);
  if (it == grid.end()) {
    throw std::invalid_argument("compare_to_normal: x is not a grid value");
  }
  const std::size_t g = static_cast<std::size_t>(it - grid.begin());
  const std::size_t r_count = static_cast<std::size_t>(result.config.replicates);
  std::vector<double> column(r_count);
  for (std::size_t rep = 0; rep < r_count; ++rep) {
    column[rep] = result.values[rep * grid.size() + g];
  }
  return summarize_column(column, model, x, result.config.n);
}

}  // namespace prcurve
