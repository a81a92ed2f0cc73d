#ifndef LCWB_TRANSFORMS_HPP
#define LCWB_TRANSFORMS_HPP

#include "lcwb/cohomology.hpp"
#include "lcwb/hulls.hpp"

namespace lcwb {

struct TransformResult {
  std::string functor;  // "gammaV" | "derived-gammaV" | "nagata"
  std::map<LCKey, LCEntry> entries;

  int dim(int i, const Multideg& a) const {
    auto it = entries.find({i, a});
    return it == entries.end() ? 0 : it->second.dim;
  }
  int unstabilized_count() const {
    int c = 0;
    for (auto& [k, e] : entries)
      if (!e.stabilized) ++c;
    return c;
  }
};

// Gamma_{V_K}(M) = colim Hom(V/K^tV, M), degreewise stabilized
TransformResult gamma_V(ModulePtr M, const ModuleObject& V, const Ideal& K, const DegreeBox& box,
                        int tmax = 12);

// H^i_{V_K}(M) = colim Ext^i(V/K^tV, M)
TransformResult derived_gamma_V(ModulePtr M, const ModuleObject& V, const Ideal& K,
                                const DegreeBox& box, int imax, int tmax = 12);

// Delta_{V_K}(M) and its derived values: colim Ext^i(K^tV, M)
TransformResult nagata_transform(ModulePtr M, const ModuleObject& V, const Ideal& K,
                                 const DegreeBox& box, int imax, int tmax = 12);

struct GammaVIdentityReport {
  int degrees = 0;
  int mismatches = 0;
  bool agree = true;
};

// Gamma_{V_K}(M) = Hom_R(V, Gamma_K(M)) degreewise
GammaVIdentityReport gamma_V_identity_check(ModulePtr M, const ModuleObject& V, const Ideal& K,
                                            const DegreeBox& box, int degree_bound,
                                            int tmax = 12);

struct HullSesReport {
  int degrees_tested = 0;
  int unstabilized = 0;
  bool exact = true;         // 0 -> Gamma_{V_K}(E) -> Hom(V,E) -> Delta_{V_K}(E) -> 0
  bool dichotomy_ok = true;  // Gamma/Delta take the predicted branch everywhere
  HullBranch predicted_gamma = HullBranch::Zero;
  HullBranch predicted_delta = HullBranch::HomVE;
};

HullSesReport hull_ses_check(const InjectiveModel& E, const ModuleObject& V, const Ideal& K,
                             int radius, int tmax = 8);

}  // namespace lcwb

#endif
