#include "prcurve/model_config.hpp"

#include <json.hpp>

#include "prcurve/errors.hpp"
#include "prcurve/presets.hpp"

namespace prcurve {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ParseError(1, std::string("missing numeric field '") + key + "'");
  }
  return j[key].get<double>();
}

ScoreDistributionPtr distribution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw ParseError(1, "distribution needs a string 'family' field");
  }
  const std::string family = j["family"].get<std::string>();
  if (family == "normal") {
    return make_normal(require_number(j, "mu"), require_number(j, "sigma"));
  }
  if (family == "lognormal") {
    return make_lognormal(require_number(j, "mu"), require_number(j, "sigma"));
  }
  if (family == "beta") {
    return make_beta(require_number(j, "a"), require_number(j, "b"));
  }
  if (family == "uniform") {
    return make_uniform(require_number(j, "lo"), require_number(j, "hi"));
  }
  if (family == "discrete") {
    if (!j.contains("atoms") || !j["atoms"].is_array()) {
      throw ParseError(1, "discrete distribution needs an 'atoms' array");
    }
    std::vector<double> atoms = j["atoms"].get<std::vector<double>>();
    std::vector<double> weights;
    if (j.contains("weights")) {
      weights = j["weights"].get<std::vector<double>>();
    }
    return make_discrete(std::move(atoms), std::move(weights));
  }
  if (family == "affine") {
    if (!j.contains("of")) {
      throw ParseError(1, "affine distribution needs an inner 'of' object");
    }
    return make_affine(require_number(j, "c0"), require_number(j, "c1"),
                       distribution_from_json(j["of"]));
  }
  throw ParseError(1, "unknown family '" + family + "'");
}

}  // namespace

ModelConfig parse_model_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(1, "config must be a JSON object");

  ModelConfig out;
  try {
    if (j.contains("preset")) {
      const CasePreset& preset =
          find_case_preset(j["preset"].get<std::string>());
      out.plus = preset.plus;
      out.minus = preset.minus;
    } else {
      if (!j.contains("plus") || !j.contains("minus")) {
        throw ParseError(1, "config needs 'plus' and 'minus' distributions");
      }
      out.plus = distribution_from_json(j["plus"]);
      out.minus = distribution_from_json(j["minus"]);
    }
    if (j.contains("pi_plus")) {
      out.pi_plus = j["pi_plus"].get<double>();
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(1, e.what());
  }
  return out;
}

}  // namespace prcurve
