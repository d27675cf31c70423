#ifndef PRCURVE_PRESETS_HPP_
#define PRCURVE_PRESETS_HPP_

#include <string>
#include <vector>

#include "prcurve/class_score_model.hpp"
#include "prcurve/score_distribution.hpp"

namespace prcurve {

// Built-in distribution pairs covering the qualitatively distinct regimes:
//
//   case-a       bi-normal: N(0,1) vs N(1.4,1)
//   case-a-star  bi-lognormal with the same parameters (same curves as
//                case-a by invariance to increasing transformations)
//   case-b       N(0,1) vs 8 - LogNormal(1.4,1); non-monotone PR curve
//   case-c       beta(2,5) vs beta(5,2); bounded scores
//   case-d       U[0,1] vs U[0.5,1.5]; overlapping non-subset ranges
//   case-e       case-d with the classes swapped; worse than random
//   case-f       overlapping discrete uniform laws; discontinuous PR curve
struct CasePreset {
  std::string name;
  std::string summary;
  ScoreDistributionPtr minus;
  ScoreDistributionPtr plus;
};

// All presets in canonical order.
const std::vector<CasePreset>& case_presets();

// Lookup by name ("case-a", ..., "case-f"). Throws std::invalid_argument
// for an unknown name.
const CasePreset& find_case_preset(const std::string& name);

// Convenience: preset distributions combined with a class prior.
ClassScoreModel make_case_model(const std::string& name, double pi_plus);

}  // namespace prcurve

#endif  // PRCURVE_PRESETS_HPP_
