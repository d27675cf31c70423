#include "prcurve/csv_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "prcurve/errors.hpp"

namespace prcurve {

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(trim(cur));
  return fields;
}

double parse_number(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, "not a number: '" + s + "'");
  }
}

void expect_header(std::istream& is, const std::string& expected) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError(1, "empty file");
  if (trim(line) != expected) {
    throw ParseError(1, "expected header '" + expected + "', got '" +
                            trim(line) + "'");
  }
}

}  // namespace

void write_curve_csv(std::ostream& os, const CurveGrid& curve) {
  os << "x,y\n";
  for (const CurvePoint& p : curve) {
    os << format_double(p.x) << ',' << format_double(p.y) << '\n';
  }
}

CurveGrid read_curve_csv(std::istream& is) {
  expect_header(is, "x,y");
  CurveGrid out;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 2 fields, got " +
                                    std::to_string(fields.size()));
    }
    out.push_back(
        {parse_number(fields[0], line_no), parse_number(fields[1], line_no)});
  }
  return out;
}

void write_parametric_csv(std::ostream& os, const ParametricCurve& curve) {
  os << "t,x,y\n";
  for (const ParametricPoint& p : curve) {
    os << format_double(p.t) << ',' << format_double(p.x) << ','
       << format_double(p.y) << '\n';
  }
}

void write_point_set_csv(std::ostream& os, const PRPointSet& points) {
  os << "t,recall,precision\n";
  for (const PrPoint& p : points) {
    os << format_double(p.threshold) << ',' << format_double(p.recall) << ',';
    if (p.precision.has_value()) {
      os << format_double(*p.precision);
    } else {
      os << "undefined";
    }
    os << '\n';
  }
}

void write_pr_hat_csv(std::ostream& os, const std::vector<double>& xs,
                      const std::vector<double>& values) {
  if (xs.size() != values.size()) {
    throw std::invalid_argument("write_pr_hat_csv: length mismatch");
  }
  os << "x,pr_hat\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << format_double(xs[i]) << ',' << format_double(values[i]) << '\n';
  }
}

void write_variance_csv(std::ostream& os,
                        const std::vector<VarianceProfile>& profiles) {
  os << "x,pr,alpha,slope,sigma2,flag\n";
  for (const VarianceProfile& p : profiles) {
    const char* flag = "ok";
    if (p.flag == VarianceProfile::Flag::kDegenerate) flag = "degenerate";
    if (p.flag == VarianceProfile::Flag::kUnbounded) flag = "unbounded";
    os << format_double(p.x) << ',' << format_double(p.pr) << ','
       << format_double(p.alpha) << ',' << format_double(p.slope) << ','
       << format_double(p.sigma2) << ',' << flag << '\n';
  }
}

void write_simulation_csv(std::ostream& os, const SimulationResult& result) {
  os << "x,replicate,pr_hat\n";
  const std::size_t g_count = result.config.grid.size();
  for (std::size_t g = 0; g < g_count; ++g) {
    const std::string x_str = format_double(result.config.grid[g]);
    for (int rep = 0; rep < result.config.replicates; ++rep) {
      os << x_str << ',' << rep << ','
         << format_double(result.value(rep, static_cast<int>(g))) << '\n';
    }
  }
}

EmpiricalSample read_score_csv(std::istream& is) {
  expect_header(is, "label,score");
  EmpiricalSample sample;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 2 fields, got " +
                                    std::to_string(fields.size()));
    }
    const std::string& label = fields[0];
    const double score = parse_number(fields[1], line_no);
    if (label == "+" || label == "1" || label == "pos") {
      sample.s_plus.push_back(score);
    } else if (label == "-" || label == "0" || label == "neg") {
      sample.s_minus.push_back(score);
    } else {
      throw ParseError(line_no, "unknown label '" + label +
                                    "' (expected +, -, 1, 0, pos, neg)");
    }
  }
  if (sample.s_plus.empty() || sample.s_minus.empty()) {
    throw std::domain_error("score file needs at least one row per class");
  }
  return sample;
}

void write_score_csv(std::ostream& os, const EmpiricalSample& sample) {
  os << "label,score\n";
  for (double s : sample.s_plus) os << "+," << format_double(s) << '\n';
  for (double s : sample.s_minus) os << "-," << format_double(s) << '\n';
}

}  // namespace prcurve
