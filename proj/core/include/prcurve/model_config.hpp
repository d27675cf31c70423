#ifndef PRCURVE_MODEL_CONFIG_HPP_
#define PRCURVE_MODEL_CONFIG_HPP_

#include <optional>
#include <string>

#include "prcurve/score_distribution.hpp"

namespace prcurve {

// A parsed model config file:
//   {"plus": <dist>, "minus": <dist>, "pi_plus": 0.5}
// where <dist> is one of
//   {"family": "normal",    "mu": .., "sigma": ..}
//   {"family": "lognormal", "mu": .., "sigma": ..}
//   {"family": "beta",      "a": .., "b": ..}
//   {"family": "uniform",   "lo": .., "hi": ..}
//   {"family": "discrete",  "atoms": [..], "weights": [..]?}
//   {"family": "affine",    "c0": .., "c1": .., "of": <dist>}
// or {"preset": "case-a"} naming a built-in pair. pi_plus is optional; the
// caller usually resolves it from flags.
struct ModelConfig {
  ScoreDistributionPtr plus;
  ScoreDistributionPtr minus;
  std::optional<double> pi_plus;
};

// Throws ParseError (with a line of context) on malformed input.
ModelConfig parse_model_config(const std::string& json_text);

}  // namespace prcurve

#endif  // PRCURVE_MODEL_CONFIG_HPP_
