#include <doctest.h>

#include <sstream>
#include <string>

#include "prcurve/csv_io.hpp"
#include "prcurve/errors.hpp"
#include "prcurve/model_config.hpp"
#include "prcurve/population.hpp"
#include "prcurve/presets.hpp"
#include "prcurve/svg_chart.hpp"

using namespace prcurve;

TEST_CASE("number formatting") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(2.0 / 3.0) == "0.666666667");
  CHECK(format_double(1e-4) == "0.0001");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("curve csv round trip is byte stable") {
  const ClassScoreModel model = make_case_model("case-a", 0.5);
  const CurveGrid curve = sample_pr(model, default_grid(64));
  std::ostringstream first;
  write_curve_csv(first, curve);
  std::istringstream back(first.str());
  const CurveGrid reread = read_curve_csv(back);
  std::ostringstream second;
  write_curve_csv(second, reread);
  CHECK(first.str() == second.str());
}

TEST_CASE("score csv parsing") {
  std::istringstream good(
      "label,score\n+,0.9\n-,0.5\n1,0.4\nneg,0.1\npos,0.7\n0,0.2\n");
  const EmpiricalSample s = read_score_csv(good);
  CHECK(s.n_plus() == 3);
  CHECK(s.n_minus() == 3);

  std::istringstream bad_label("label,score\nmaybe,0.3\n");
  CHECK_THROWS_WITH_AS(read_score_csv(bad_label),
                       "line 2: unknown label 'maybe' (expected +, -, 1, 0, "
                       "pos, neg)",
                       ParseError);
  std::istringstream bad_number("label,score\n+,0.5\n-,zero\n");
  try {
    read_score_csv(bad_number);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream bad_header("score,label\n");
  CHECK_THROWS_AS(read_score_csv(bad_header), ParseError);
  std::istringstream one_class("label,score\n+,0.5\n");
  CHECK_THROWS_AS(read_score_csv(one_class), std::domain_error);
}

TEST_CASE("point set csv spells out undefined precision") {
  PRPointSet pts;
  pts.push_back({0.9, 0.0, std::nullopt});
  pts.push_back({0.4, 0.5, 0.5});
  std::ostringstream os;
  write_point_set_csv(os, pts);
  CHECK(os.str() == "t,recall,precision\n0.9,0,undefined\n0.4,0.5,0.5\n");
}

TEST_CASE("model config parsing") {
  const ModelConfig direct = parse_model_config(R"({
    "plus": {"family": "affine", "c0": 8, "c1": -1,
             "of": {"family": "lognormal", "mu": 1.4, "sigma": 1}},
    "minus": {"family": "normal", "mu": 0, "sigma": 1},
    "pi_plus": 0.25
  })");
  REQUIRE(direct.pi_plus.has_value());
  CHECK(*direct.pi_plus == 0.25);
  CHECK(direct.plus->support_max().finite() == 8.0);

  const ModelConfig preset = parse_model_config(R"({"preset": "case-f"})");
  CHECK(!preset.pi_plus.has_value());
  CHECK(!preset.plus->is_continuous());

  const ModelConfig discrete = parse_model_config(R"({
    "plus": {"family": "discrete", "atoms": [0.1, 0.4], "weights": [0.5, 0.5]},
    "minus": {"family": "uniform", "lo": 0, "hi": 1}
  })");
  CHECK(discrete.plus->quantile(1.0).finite() == 0.4);

  CHECK_THROWS_AS(parse_model_config("{"), ParseError);
  CHECK_THROWS_AS(parse_model_config(R"({"plus": 3, "minus": 4})"), ParseError);
  CHECK_THROWS_AS(
      parse_model_config(
          R"({"plus": {"family": "cauchy"}, "minus": {"family": "normal"}})"),
      ParseError);
  CHECK_THROWS_AS(parse_model_config(R"({"preset": "case-z"})"), ParseError);
}

TEST_CASE("variance csv carries flags") {
  std::vector<VarianceProfile> rows;
  VarianceProfile p{};
  p.x = 0.3;
  p.pr = 1.0;
  p.flag = VarianceProfile::Flag::kDegenerate;
  rows.push_back(p);
  std::ostringstream os;
  write_variance_csv(os, rows);
  CHECK(os.str().find("degenerate") != std::string::npos);
  CHECK(os.str().rfind("x,pr,alpha,slope,sigma2,flag\n", 0) == 0);
}

TEST_CASE("svg output is a well-formed document") {
  const ClassScoreModel model = make_case_model("case-c", 0.5);
  SvgSeries series;
  series.label = "PR";
  series.color = "firebrick";
  series.points = sample_pr(model, default_grid(50));
  const std::string svg = render_svg_chart("PR curve", "recall", "precision",
                                           {series});
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("</svg>") == svg.size() - 7);
}
