#include "prcurve/presets.hpp"

#include <stdexcept>

namespace prcurve {

const std::vector<CasePreset>& case_presets() {
  static const std::vector<CasePreset> presets = [] {
    std::vector<CasePreset> v;
    v.push_back({"case-a", "bi-normal N(0,1) vs N(1.4,1)",
                 make_normal(0.0, 1.0), make_normal(1.4, 1.0)});
    v.push_back({"case-a-star", "bi-lognormal LN(0,1) vs LN(1.4,1)",
                 make_lognormal(0.0, 1.0), make_lognormal(1.4, 1.0)});
    v.push_back({"case-b", "N(0,1) vs 8 - LogNormal(1.4,1)",
                 make_normal(0.0, 1.0),
                 make_affine(8.0, -1.0, make_lognormal(1.4, 1.0))});
    v.push_back({"case-c", "bi-beta beta(2,5) vs beta(5,2)",
                 make_beta(2.0, 5.0), make_beta(5.0, 2.0)});
    v.push_back({"case-d", "U[0,1] vs U[0.5,1.5]", make_uniform(0.0, 1.0),
                 make_uniform(0.5, 1.5)});
    v.push_back({"case-e", "U[0.5,1.5] vs U[0,1]", make_uniform(0.5, 1.5),
                 make_uniform(0.0, 1.0)});
    v.push_back({"case-f",
                 "discrete uniform on 10 vs 5 overlapping score values",
                 make_discrete({0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.4, 0.5,
                                0.6, 0.7}),
                 make_discrete({0.2, 0.35, 0.5, 0.75, 0.9})});
    return v;
  }();
  return presets;
}

const CasePreset& find_case_preset(const std::string& name) {
  for (const CasePreset& p : case_presets()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown preset: " + name);
}

ClassScoreModel make_case_model(const std::string& name, double pi_plus) {
  const CasePreset& p = find_case_preset(name);
  return ClassScoreModel(p.plus, p.minus, pi_plus);
}

}  // namespace prcurve
