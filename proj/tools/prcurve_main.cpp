// prcurve: population and empirical precision-recall / ROC curve toolkit.
//
// Subcommands:
//   population  exact curves, limit report, reference/separation curves
//   empirical   PR point sets and the functional PR estimator from a CSV
//   variance    asymptotic variance profile and condition diagnostics
//   simulate    Monte Carlo study of the empirical PR estimator
//   check       property verdicts for a model (chance, bounds, invariance)
//   cases       list built-in distribution presets
//
// Exit codes: 0 success, 1 usage or property failure, 2 unknown preset,
// 3 malformed config, 4 malformed score CSV, 5 invalid grid.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prcurve/asymptotics.hpp"
#include "prcurve/class_score_model.hpp"
#include "prcurve/csv_io.hpp"
#include "prcurve/empirical.hpp"
#include "prcurve/errors.hpp"
#include "prcurve/model_config.hpp"
#include "prcurve/population.hpp"
#include "prcurve/presets.hpp"
#include "prcurve/simulation.hpp"
#include "prcurve/svg_chart.hpp"

namespace {

using nlohmann::ordered_json;
using namespace prcurve;

constexpr int kExitUsage = 1;
constexpr int kExitUnknownPreset = 2;
constexpr int kExitBadConfig = 3;
constexpr int kExitBadScoreCsv = 4;
constexpr int kExitBadGrid = 5;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

// Flags shared by every model-driven subcommand.
struct ModelOptions {
  std::string preset;
  std::string config_path;
  double pi_plus = -1.0;
  double skew = -1.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--preset", preset,
                    "built-in distribution pair (see 'prcurve cases')");
    cmd->add_option("--config", config_path, "model config JSON file");
    cmd->add_option("--pi-plus", pi_plus, "positive-class prior in (0,1)")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    cmd->add_option("--skew", skew,
                    "class imbalance pi-/pi+ (alternative to --pi-plus)")
        ->check(CLI::Range(1e-9, 1e9));
  }

  ClassScoreModel resolve() const {
    ScoreDistributionPtr plus;
    ScoreDistributionPtr minus;
    std::optional<double> config_pi;
    if (preset.empty() == config_path.empty()) {
      fail(kExitUsage, "exactly one of --preset/--config is required");
    }
    if (!preset.empty()) {
      try {
        const CasePreset& p = find_case_preset(preset);
        plus = p.plus;
        minus = p.minus;
      } catch (const std::invalid_argument& e) {
        fail(kExitUnknownPreset, e.what());
      }
    } else {
      std::ifstream in(config_path);
      if (!in) fail(kExitBadConfig, "cannot open config: " + config_path);
      std::stringstream buffer;
      buffer << in.rdbuf();
      try {
        ModelConfig cfg = parse_model_config(buffer.str());
        plus = cfg.plus;
        minus = cfg.minus;
        config_pi = cfg.pi_plus;
      } catch (const ParseError& e) {
        fail(kExitBadConfig, config_path + ": " + e.what());
      }
    }
    double pi = 0.5;
    if (config_pi.has_value()) pi = *config_pi;
    if (skew > 0.0 && pi_plus > 0.0) {
      if (std::fabs(pi_plus - pi_plus_from_skew(skew)) > 1e-12) {
        fail(kExitUsage,
             "--pi-plus and --skew disagree (pi+ = 1/(1+skew) must hold)");
      }
    }
    if (skew > 0.0) pi = pi_plus_from_skew(skew);
    if (pi_plus > 0.0) pi = pi_plus;
    try {
      return ClassScoreModel(plus, minus, pi);
    } catch (const std::invalid_argument& e) {
      fail(kExitUsage, e.what());
    }
  }
};

std::vector<double> parse_grid_list(const std::string& spec) {
  std::vector<double> xs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      xs.push_back(std::stod(item));
    } catch (const std::exception&) {
      fail(kExitBadGrid, "bad grid value: '" + item + "'");
    }
  }
  if (xs.empty()) fail(kExitBadGrid, "empty grid");
  return xs;
}

void check_grid_open_unit(const std::vector<double>& xs, bool allow_one) {
  for (double x : xs) {
    const bool ok = allow_one ? (x > 0.0 && x <= 1.0) : (x > 0.0 && x < 1.0);
    if (!ok) {
      fail(kExitBadGrid, "grid value " + format_double(x) +
                             (allow_one ? " outside (0,1]" : " outside (0,1)"));
    }
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(kExitUsage, "cannot write " + path.string());
  out << text;
}

ordered_json finite_or_string(double v) {
  if (std::isinf(v)) return v > 0 ? ordered_json("inf") : ordered_json("-inf");
  return ordered_json(v);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PRCURVE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 1;
}

// ---------------------------------------------------------------------------
// population

int cmd_population(const ModelOptions& model_opts, int grid_count,
                   const std::string& out_dir, const std::string& prefix,
                   bool reference, bool separation,
                   const std::string& thresholds_spec, bool svg) {
  const ClassScoreModel model = model_opts.resolve();
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);

  const std::vector<double> xs = default_grid(grid_count);
  std::vector<double> pr_xs = xs;
  pr_xs.push_back(1.0);
  const CurveGrid roc = sample_roc(model, xs);
  const CurveGrid pr = sample_pr(model, pr_xs);

  std::ostringstream roc_csv;
  write_curve_csv(roc_csv, roc);
  write_file(dir / (prefix + "_roc.csv"), roc_csv.str());
  std::ostringstream pr_csv;
  write_curve_csv(pr_csv, pr);
  write_file(dir / (prefix + "_pr.csv"), pr_csv.str());

  const CurveLimits limits = curve_limits(model);
  ordered_json lim;
  lim["roc_at_0"] = limits.roc_at_0;
  lim["roc_at_1"] = limits.roc_at_1;
  lim["pr_at_1"] = limits.pr_at_1;
  lim["pr_at_0"] = limits.pr_at_0.has_value()
                       ? finite_or_string(*limits.pr_at_0)
                       : ordered_json(nullptr);
  switch (limits.pr_at_0_branch) {
    case CurveLimits::ZeroRecallBranch::kDensityRatio:
      lim["p2_branch"] = "density-ratio";
      break;
    case CurveLimits::ZeroRecallBranch::kLowerPlusMax:
      lim["p2_branch"] = "lower-plus-max";
      break;
    case CurveLimits::ZeroRecallBranch::kNoDensities:
      lim["p2_branch"] = "no-densities";
      break;
  }
  lim["k_estimate"] = limits.k_estimate.has_value()
                          ? finite_or_string(*limits.k_estimate)
                          : ordered_json(nullptr);
  write_file(dir / (prefix + "_limits.json"), lim.dump(2) + "\n");

  if (reference) {
    const ReferenceCurves ref = reference_curves(model.pi_plus(), xs);
    const std::pair<const char*, const CurveGrid*> refs[] = {
        {"chance_roc", &ref.chance_roc},
        {"chance_pr", &ref.chance_pr},
        {"pr_lower_bound", &ref.pr_lower_bound}};
    for (const auto& [name, grid] : refs) {
      std::ostringstream os;
      write_curve_csv(os, *grid);
      write_file(dir / (prefix + "_" + std::string(name) + ".csv"), os.str());
    }
  }

  if (separation) {
    std::vector<double> ts;
    if (!thresholds_spec.empty()) {
      ts = parse_grid_list(thresholds_spec);
    } else {
      for (double p = 0.02; p < 0.999; p += 0.02) {
        for (const ScoreDistribution* d : {&model.plus(), &model.minus()}) {
          const ExtendedReal q = d->quantile(p);
          if (q.is_finite()) ts.push_back(q.finite());
        }
      }
    }
    try {
      const SeparationCurves sep = separation_curves(model, ts);
      const auto emit = [&](const char* name,
                            const std::optional<ParametricCurve>& curve) {
        if (!curve.has_value()) return;
        std::ostringstream os;
        write_parametric_csv(os, *curve);
        write_file(dir / (prefix + "_" + name + ".csv"), os.str());
      };
      emit("perfect_roc", sep.perfect_roc);
      emit("perfect_pr", sep.perfect_pr);
      emit("reverse_roc", sep.reverse_roc);
      emit("reverse_pr", sep.reverse_pr);
    } catch (const NotApplicableError& e) {
      std::cerr << "separation curves skipped: " << e.what() << "\n";
    }
  }

  if (svg) {
    const ReferenceCurves ref = reference_curves(model.pi_plus(), xs);
    write_file(dir / (prefix + "_roc.svg"),
               render_svg_chart("ROC curve", "fpr", "tpr",
                                {{"ROC", "firebrick", roc, false},
                                 {"chance", "gray", ref.chance_roc, true}}));
    write_file(
        dir / (prefix + "_pr.svg"),
        render_svg_chart("PR curve", "recall", "precision",
                         {{"PR", "firebrick", pr, false},
                          {"chance", "gray", ref.chance_pr, true},
                          {"lower bound", "silver", ref.pr_lower_bound,
                           true}}));
  }

  std::cout << "population: wrote " << prefix << "_roc.csv, " << prefix
            << "_pr.csv, " << prefix << "_limits.json in " << out_dir << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// empirical

int cmd_empirical(const std::string& scores_path, int grid_count,
                  const std::string& out_dir, const std::string& prefix,
                  bool svg) {
  std::ifstream in(scores_path);
  if (!in) fail(kExitBadScoreCsv, "cannot open scores: " + scores_path);
  EmpiricalSample sample;
  try {
    sample = read_score_csv(in);
  } catch (const ParseError& e) {
    fail(kExitBadScoreCsv, scores_path + ": " + e.what());
  } catch (const std::domain_error& e) {
    fail(kExitBadScoreCsv, scores_path + ": " + e.what());
  }

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);

  std::ostringstream star_csv;
  write_point_set_csv(star_csv, pr_star(sample));
  write_file(dir / (prefix + "_pr_star.csv"), star_csv.str());
  std::ostringstream zero_csv;
  write_point_set_csv(zero_csv, pr_zero(sample));
  write_file(dir / (prefix + "_pr_zero.csv"), zero_csv.str());

  const PRHatCurve curve(sample);
  std::vector<double> xs = default_grid(grid_count);
  xs.push_back(1.0);
  std::vector<double> values;
  values.reserve(xs.size());
  for (double x : xs) values.push_back(curve.value(x));
  std::ostringstream hat_csv;
  write_pr_hat_csv(hat_csv, xs, values);
  write_file(dir / (prefix + "_pr_hat.csv"), hat_csv.str());

  if (svg) {
    CurveGrid grid;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      grid.push_back({xs[i], values[i]});
    }
    write_file(dir / (prefix + "_pr_hat.svg"),
               render_svg_chart("Empirical PR curve", "recall", "precision",
                                {{"pr_hat", "steelblue", grid, false}}));
  }

  std::cout << "empirical: n+ = " << sample.n_plus()
            << ", n- = " << sample.n_minus() << "; wrote " << prefix
            << "_pr_star.csv, " << prefix << "_pr_zero.csv, " << prefix
            << "_pr_hat.csv in " << out_dir << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// variance

int cmd_variance(const ModelOptions& model_opts, const std::string& grid_spec,
                 int grid_count, double epsilon, const std::string& out_dir,
                 const std::string& prefix) {
  const ClassScoreModel model = model_opts.resolve();
  std::vector<double> xs =
      grid_spec.empty() ? default_grid(grid_count) : parse_grid_list(grid_spec);
  check_grid_open_unit(xs, /*allow_one=*/false);

  std::vector<VarianceProfile> profiles;
  profiles.reserve(xs.size());
  try {
    for (double x : xs) profiles.push_back(sigma_squared(model, x));
  } catch (const UnsupportedOperationError& e) {
    fail(kExitUsage, std::string(e.what()) +
                         " (variance needs a continuous model)");
  }

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  std::ostringstream csv;
  write_variance_csv(csv, profiles);
  write_file(dir / (prefix + "_variance.csv"), csv.str());

  const ConditionReport report = condition_check(model, epsilon);
  ordered_json cond;
  cond["epsilon"] = report.epsilon;
  cond["fd_step"] = report.fd_step;
  cond["slope_sup"] = finite_or_string(report.slope_sup);
  cond["slope_bounded"] = report.slope_bounded;
  cond["gamma_estimate"] = report.gamma_estimate;
  cond["density_positive"] = report.density_positive;
  write_file(dir / (prefix + "_conditions.json"), cond.dump(2) + "\n");

  std::cout << "variance: wrote " << prefix << "_variance.csv and " << prefix
            << "_conditions.json in " << out_dir << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

const char* flag_name(PerXSummary::Flag flag) {
  switch (flag) {
    case PerXSummary::Flag::kOk: return "ok";
    case PerXSummary::Flag::kDegenerate: return "degenerate";
    case PerXSummary::Flag::kUnbounded: return "unbounded";
    case PerXSummary::Flag::kEmpirical: return "empirical";
    case PerXSummary::Flag::kUnavailable: return "unavailable";
  }
  return "unavailable";
}

int cmd_simulate(const ModelOptions& model_opts, int n, int replicates,
                 const std::string& grid_spec, std::uint64_t seed,
                 const std::string& mode_name, unsigned threads,
                 const std::string& out_dir, const std::string& prefix) {
  SimulationConfig cfg{model_opts.resolve()};
  cfg.n = n;
  cfg.replicates = replicates;
  cfg.master_seed = seed;
  if (mode_name == "binomial") {
    cfg.mode = ClassCountMode::kBinomial;
  } else if (mode_name == "fixed") {
    cfg.mode = ClassCountMode::kFixedExpected;
  } else {
    fail(kExitUsage, "--mode must be 'binomial' or 'fixed'");
  }
  if (grid_spec.empty()) {
    for (int i = 1; i <= 10; ++i) cfg.grid.push_back(i / 10.0);
  } else {
    cfg.grid = parse_grid_list(grid_spec);
  }
  check_grid_open_unit(cfg.grid, /*allow_one=*/true);

  const SimulationResult result = [&]() -> SimulationResult {
    try {
      return run_simulation(cfg, threads);
    } catch (const std::domain_error& e) {
      fail(kExitUsage, e.what());
    }
  }();

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  std::ostringstream csv;
  write_simulation_csv(csv, result);
  write_file(dir / (prefix + "_sim.csv"), csv.str());

  ordered_json summary;
  ordered_json config_echo;
  config_echo["model_plus"] = cfg.model.plus().describe();
  config_echo["model_minus"] = cfg.model.minus().describe();
  config_echo["pi_plus"] = cfg.model.pi_plus();
  config_echo["skew"] = cfg.model.skew();
  config_echo["n"] = cfg.n;
  config_echo["replicates"] = cfg.replicates;
  config_echo["grid"] = cfg.grid;
  config_echo["master_seed"] = cfg.master_seed;
  config_echo["mode"] = mode_name;
  summary["config"] = config_echo;
  summary["redraws"] = result.redraws;
  ordered_json per_x = ordered_json::array();
  for (const PerXSummary& s : result.per_x) {
    ordered_json row;
    row["x"] = s.x;
    row["mean"] = s.mean;
    row["sd"] = s.sd;
    row["flag"] = flag_name(s.flag);
    row["ks"] = s.ks.has_value() ? ordered_json(*s.ks) : ordered_json(nullptr);
    row["z_mean"] =
        s.z_mean.has_value() ? ordered_json(*s.z_mean) : ordered_json(nullptr);
    row["z_sd"] =
        s.z_sd.has_value() ? ordered_json(*s.z_sd) : ordered_json(nullptr);
    row["mass_at_limit"] = s.mass_at_limit.has_value()
                               ? ordered_json(*s.mass_at_limit)
                               : ordered_json(nullptr);
    row["bimodal"] = s.bimodal;
    ordered_json hist;
    hist["lo"] = s.histogram.lo;
    hist["width"] = s.histogram.width;
    hist["counts"] = s.histogram.counts;
    row["bins"] = hist;
    per_x.push_back(row);
  }
  summary["per_x"] = per_x;
  write_file(dir / (prefix + "_summary.json"), summary.dump(2) + "\n");

  std::cout << "simulate: " << replicates << " replicates at n = " << n
            << " (" << result.redraws << " redraws); wrote " << prefix
            << "_sim.csv and " << prefix << "_summary.json in " << out_dir
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const ModelOptions& model_opts, int grid_count) {
  const ClassScoreModel model = model_opts.resolve();
  const std::vector<double> xs = default_grid(grid_count);
  bool all_pass = true;
  const auto row = [&](const char* id, const char* what, bool applicable,
                       bool pass, const std::string& detail = "") {
    std::cout << id;
    for (std::size_t i = std::string(id).size(); i < 14; ++i) std::cout << ' ';
    std::cout << what;
    for (std::size_t i = std::string(what).size(); i < 44; ++i) std::cout << ' ';
    if (!applicable) {
      std::cout << "n/a";
    } else if (pass) {
      std::cout << "pass";
    } else {
      std::cout << "FAIL";
      all_pass = false;
    }
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
  };

  // The ROC curve never decreases.
  {
    bool ok = true;
    double prev = -1.0;
    for (double x : xs) {
      const double y = eval_roc(model, x);
      if (y < prev - 1e-12) ok = false;
      prev = y;
    }
    row("roc-monotone", "ROC nondecreasing on grid", true, ok);
  }

  const CurveLimits limits = curve_limits(model);
  // The recall -> 1 limit is always approachable on the grid and must
  // match the curve. The recall -> 0 limit can sit beyond floating-point
  // resolution (a bounded + class against an unbounded - class reaches it
  // only for x below the - tail mass at M+), so it is reported, not
  // asserted.
  {
    const double near_one = eval_pr(model, 1.0 - 1e-6);
    const bool ok = std::fabs(near_one - limits.pr_at_1) <= 1e-2;
    std::string detail = "pr_at_1 = " + format_double(limits.pr_at_1);
    if (limits.pr_at_0.has_value()) {
      detail += ", pr_at_0 = " + format_double(*limits.pr_at_0);
    }
    row("pr-endpoint", "PR endpoint limit at recall 1", true, ok, detail);
  }

  // When the sufficient shape conditions apply they must agree with the
  // sampled classification.
  {
    const MonotonicityVerdict v = classify_pr_monotonicity(model, grid_count);
    bool applicable = v.densities_available &&
                      (v.guaranteed_nonincreasing || v.guaranteed_nondecreasing);
    bool ok = true;
    if (applicable) {
      if (v.guaranteed_nonincreasing) {
        ok = v.classification == Monotonicity::kNonincreasing;
      } else {
        ok = v.classification == Monotonicity::kNondecreasing;
      }
    }
    row("shape-rule", "shape condition vs sampled verdict", applicable, ok);
  }

  // Chance curves built from this model's own class laws.
  {
    bool ok = true;
    for (const ScoreDistributionPtr& d : {model.plus_ptr(), model.minus_ptr()}) {
      const ClassScoreModel chance(d, d, model.pi_plus());
      for (double x : {0.1, 0.5, 0.9}) {
        const double pr = eval_pr(chance, x);
        const double roc = eval_roc(chance, x);
        if (d->is_continuous()) {
          if (std::fabs(pr - model.pi_plus()) > 1e-9) ok = false;
          if (std::fabs(roc - x) > 1e-9) ok = false;
        } else {
          if (pr < model.pi_plus() - 1e-12) ok = false;
          if (roc > x + 1e-12) ok = false;
        }
      }
    }
    row("chance", "chance curves from shared law", true, ok);
  }

  // Separation constructions when the supports are ordered.
  {
    const bool perfect = model.minus().support_max() < model.plus().support_min();
    const bool reverse = model.plus().support_max() < model.minus().support_min();
    bool ok = true;
    if (perfect || reverse) {
      std::vector<double> ts;
      for (double p = 0.05; p < 0.99; p += 0.05) {
        for (const ScoreDistribution* d : {&model.plus(), &model.minus()}) {
          const ExtendedReal q = d->quantile(p);
          if (q.is_finite()) ts.push_back(q.finite());
        }
      }
      const SeparationCurves sep = separation_curves(model, ts);
      if (perfect && sep.perfect_pr.has_value()) {
        for (const ParametricPoint& p : *sep.perfect_pr) {
          if (p.x < 1.0 && p.y != 1.0) ok = false;
        }
      }
      if (reverse && sep.reverse_pr.has_value()) {
        const double pi_p = model.pi_plus();
        const double pi_m = model.pi_minus();
        for (const ParametricPoint& p : *sep.reverse_pr) {
          if (p.x > 0.0 &&
              std::fabs(p.y - pi_p * p.x / (pi_p * p.x + pi_m)) > 1e-12) {
            ok = false;
          }
        }
      }
    }
    row("separation", "separation curves", perfect || reverse, ok);
  }

  // Achievable lower bound.
  {
    bool ok = true;
    const double pi_p = model.pi_plus();
    const double pi_m = model.pi_minus();
    for (double x : xs) {
      if (eval_pr(model, x) < pi_p * x / (pi_p * x + pi_m) - 1e-12) ok = false;
    }
    row("lower-bound", "PR lower bound", true, ok);
  }

  // A shared increasing affine map leaves both curves unchanged.
  {
    const ClassScoreModel mapped(make_affine(0.25, 2.0, model.plus_ptr()),
                                 make_affine(0.25, 2.0, model.minus_ptr()),
                                 model.pi_plus());
    bool ok = true;
    for (double x : {0.05, 0.2, 0.5, 0.8, 0.95}) {
      if (std::fabs(eval_roc(model, x) - eval_roc(mapped, x)) > 1e-9) ok = false;
      if (std::fabs(eval_pr(model, x) - eval_pr(mapped, x)) > 1e-9) ok = false;
    }
    row("invariance", "invariance to increasing transforms", true, ok);
  }

  const MonotonicityVerdict verdict =
      classify_pr_monotonicity(model, grid_count);
  const char* name = "non-monotone";
  if (verdict.classification == Monotonicity::kNonincreasing) {
    name = "nonincreasing";
  } else if (verdict.classification == Monotonicity::kNondecreasing) {
    name = "nondecreasing";
  }
  std::cout << "PR monotonicity: " << name << "\n";
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// cases

int cmd_cases() {
  for (const CasePreset& p : case_presets()) {
    std::cout << p.name << "\n  " << p.summary << "\n  minus: "
              << p.minus->describe() << "\n  plus:  " << p.plus->describe()
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"population and empirical precision-recall curve toolkit"};
  app.require_subcommand(1);

  // population
  auto* population = app.add_subcommand(
      "population", "exact ROC/PR curves and limit report for a model");
  ModelOptions pop_model;
  pop_model.attach(population);
  int pop_grid = 512;
  std::string pop_out = ".";
  std::string pop_prefix = "population";
  bool pop_reference = false;
  bool pop_separation = false;
  std::string pop_thresholds;
  bool pop_svg = false;
  population->add_option("--grid-count", pop_grid, "grid resolution")
      ->check(CLI::Range(2, 10000000));
  population->add_option("--out", pop_out, "output directory");
  population->add_option("--prefix", pop_prefix, "output file prefix");
  population->add_flag("--reference", pop_reference,
                       "also write chance and lower-bound curves");
  population->add_flag("--separation", pop_separation,
                       "also write separation curves when applicable");
  population->add_option("--thresholds", pop_thresholds,
                         "comma list of thresholds for --separation");
  population->add_flag("--svg", pop_svg, "also render SVG charts");

  // empirical
  auto* empirical = app.add_subcommand(
      "empirical", "PR point sets and functional estimator from labeled scores");
  std::string scores_path;
  int emp_grid = 512;
  std::string emp_out = ".";
  std::string emp_prefix = "empirical";
  bool emp_svg = false;
  empirical->add_option("--scores", scores_path, "label,score CSV file")
      ->required();
  empirical->add_option("--grid-count", emp_grid, "pr_hat grid resolution")
      ->check(CLI::Range(2, 10000000));
  empirical->add_option("--out", emp_out, "output directory");
  empirical->add_option("--prefix", emp_prefix, "output file prefix");
  empirical->add_flag("--svg", emp_svg, "also render an SVG chart");

  // variance
  auto* variance = app.add_subcommand(
      "variance", "asymptotic variance profile and condition diagnostics");
  ModelOptions var_model;
  var_model.attach(variance);
  std::string var_grid_spec;
  int var_grid_count = 512;
  double var_epsilon = 0.05;
  std::string var_out = ".";
  std::string var_prefix = "variance";
  variance->add_option("--grid", var_grid_spec, "comma list of recall values");
  variance->add_option("--grid-count", var_grid_count,
                       "grid resolution when --grid is not given")
      ->check(CLI::Range(2, 10000000));
  variance->add_option("--epsilon", var_epsilon,
                       "interval clip for the condition checks");
  variance->add_option("--out", var_out, "output directory");
  variance->add_option("--prefix", var_prefix, "output file prefix");

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo study of the empirical PR estimator");
  ModelOptions sim_model;
  sim_model.attach(simulate);
  int sim_n = 1000;
  int sim_replicates = 5000;
  std::string sim_grid_spec;
  std::uint64_t sim_seed = default_seed();
  std::string sim_mode = "binomial";
  unsigned sim_threads = 1;
  std::string sim_out = ".";
  std::string sim_prefix = "simulation";
  simulate->add_option("--n", sim_n, "total sample size per replicate")
      ->check(CLI::Range(2, 100000000));
  simulate->add_option("--replicates", sim_replicates, "number of replicates")
      ->check(CLI::Range(1, 100000000));
  simulate->add_option("--grid", sim_grid_spec,
                       "comma list of recall values (default 0.1..1.0)");
  simulate->add_option("--seed", sim_seed,
                       "master seed (default $PRCURVE_SEED or 1)");
  simulate->add_option("--mode", sim_mode, "binomial | fixed");
  simulate->add_option("--threads", sim_threads, "worker threads");
  simulate->add_option("--out", sim_out, "output directory");
  simulate->add_option("--prefix", sim_prefix, "output file prefix");

  // check
  auto* check = app.add_subcommand(
      "check", "run the curve property verdicts for a model");
  ModelOptions check_model;
  check_model.attach(check);
  int check_grid = 2000;
  check->add_option("--grid-count", check_grid, "grid resolution")
      ->check(CLI::Range(3, 10000000));

  // cases
  app.add_subcommand("cases", "list built-in presets and their parameters");

  CLI11_PARSE(app, argc, argv);

  try {
    if (population->parsed()) {
      return cmd_population(pop_model, pop_grid, pop_out, pop_prefix,
                            pop_reference, pop_separation, pop_thresholds,
                            pop_svg);
    }
    if (empirical->parsed()) {
      return cmd_empirical(scores_path, emp_grid, emp_out, emp_prefix, emp_svg);
    }
    if (variance->parsed()) {
      return cmd_variance(var_model, var_grid_spec, var_grid_count,
                          var_epsilon, var_out, var_prefix);
    }
    if (simulate->parsed()) {
      return cmd_simulate(sim_model, sim_n, sim_replicates, sim_grid_spec,
                          sim_seed, sim_mode, sim_threads, sim_out, sim_prefix);
    }
    if (check->parsed()) {
      return cmd_check(check_model, check_grid);
    }
    return cmd_cases();
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
