#ifndef LCWB_COHOMOLOGY_HPP
#define LCWB_COHOMOLOGY_HPP

#include <map>
#include <string>
#include <tuple>

#include "lcwb/cech.hpp"
#include "lcwb/primes.hpp"

namespace lcwb {

struct LCKey {
  int i = 0;
  Multideg a;
  bool operator<(const LCKey& o) const {
    if (i != o.i) return i < o.i;
    return a < o.a;
  }
};

struct LCEntry {
  int dim = 0;
  bool stabilized = true;
  int t_star = 0;  // first step of the stable window (colimit routes)
};

struct LocalCohomologyTable {
  std::string route;
  std::map<LCKey, LCEntry> entries;

  int dim(int i, const Multideg& a) const {
    auto it = entries.find({i, a});
    return it == entries.end() ? 0 : it->second.dim;
  }
  bool stabilized_at(int i, const Multideg& a) const {
    auto it = entries.find({i, a});
    return it == entries.end() ? true : it->second.stabilized;
  }
  int unstabilized_count() const {
    int c = 0;
    for (auto& [k, e] : entries)
      if (!e.stabilized) ++c;
    return c;
  }
};

// monomials of the generators of a monomial-generated ideal (coefficients
// normalized away); throws NonHomogeneousInput for non-term generators
std::vector<Monomial> monomial_generators(const Ideal& I);

// ----- Cech route -----

class CechCohomology {
 public:
  CechCohomology(ModulePtr M, const Ideal& I);

  CechEngine& engine() { return engine_; }
  LocalCohomologyTable table(const DegreeBox& box, int imax);
  FpCohomology cohomology_at(int i, const Multideg& a) { return engine_.cohomology(i, a); }

 private:
  ModulePtr M_;
  CechEngine engine_;
};

// ----- colim-Ext route -----

// Degreewise Ext^i(W, M) through a free resolution of W and graded pieces of
// M; keeps the Hom-complex data so induced maps can be computed.
class ExtPieces {
 public:
  ExtPieces(ModulePtr M, ModuleObject W, int imax);

  const FreeResolution& resolution() const { return res_; }
  const ModuleObject& target() const { return *M_; }
  int imax() const { return imax_; }

  struct Cx {
    std::vector<int> dims;                          // per level 0..imax+?
    std::vector<Mat<PrimeField>> delta;             // delta[k] : level k -> k+1
    std::vector<std::vector<GradedPiece>> blocks;   // per level, per W-resolution generator
  };

  const Cx& complex(const Multideg& a);
  FpCohomology cohomology(int i, const Multideg& a);

 private:
  ModulePtr M_;
  GradedPresentation PM_;
  FreeResolution res_;
  int imax_;
  std::map<Multideg, Cx> cx_cache_;
  std::map<std::pair<int, Multideg>, FpCohomology> coh_cache_;
};

// chain map lift of the module map W_A -> W_B whose level-0 matrix is f0
// (images of A's generators in B's generator coordinates)
std::vector<PolyMat> lift_chain_map(const RingPtr& ring, const FreeResolution& A,
                                    const FreeResolution& B, const PolyMat& f0);

// induced Ext^i(W_B, M)_a -> Ext^i(W_A, M)_a (contravariant) from the lift
Mat<PrimeField> ext_transition(ExtPieces& B, ExtPieces& A, const std::vector<PolyMat>& u,
                               int i, const Multideg& a);

// Towers V/K^tV (generalized torsion) and K^tV (Nagata transforms), with the
// induced directed systems on Ext
class ExtTower {
 public:
  enum class Mode { QuotientPowers, PowerSubmodule };

  ExtTower(ModulePtr M, ModuleObject V, Ideal K, Mode mode, int imax, int tmax);

  int tmax() const { return tmax_; }
  const ModuleObject& module_at(int t);  // W_t, 1-based
  ExtPieces& level(int t);
  // inclusion columns of K^tV in V-coordinates (PowerSubmodule mode)
  const PolyMat& inclusion_columns(int t);
  // dims equal and transitions iso on the window [t, t+2]
  bool stable_window(int t, int i, const Multideg& a);
  // Ext^i(W_t, M)_a -> Ext^i(W_{t+1}, M)_a
  Mat<PrimeField> step_map(int t, int i, const Multideg& a);
  // stabilization: two consecutive iso steps
  LCEntry colim_entry(int i, const Multideg& a);

 private:
  ModulePtr M_;
  ModuleObject V_;
  Ideal K_;
  Mode mode_;
  int imax_, tmax_;
  std::vector<ModuleObject> towers_;              // W_1, W_2, ...
  std::vector<PolyMat> sub_cols_;                 // inclusion columns (PowerSubmodule)
  std::vector<std::unique_ptr<ExtPieces>> levels_;
  std::vector<std::vector<PolyMat>> lifts_;       // chain maps res_{t+1} -> res_t
  void ensure_level(int t);
};

LocalCohomologyTable colim_ext_route(ModulePtr M, const ModuleObject& V, const Ideal& K,
                                     const DegreeBox& box, int imax, int tmax = 12);

// ----- two-ideal route -----

struct TwoIdealResult {
  LocalCohomologyTable table;  // route "two-ideal"
  GammaResult gamma;
  ModuleObject quotient;  // M / Gamma_{I,J}(M)
};

TwoIdealResult two_ideal_cohomology(ModulePtr M, const Ideal& I, const Ideal& J,
                                    const DegreeBox& box, int imax, int degree_bound);

// ----- probes and experiments -----

struct TorsionProbeReport {
  int elements = 0;
  int confirmed = 0;
  int cap_exceeded = 0;
  int failures = 0;
  Ideal K;  // the intersection of W-member monomial primes used
};

TorsionProbeReport torsionness_probe(CechCohomology& cech, const DegreeBox& box, int imax,
                                     const Ideal& I, const Ideal& J, int cap);

struct AssFinitenessReport {
  bool hypothesis_ok = true;     // H^j finitely generated surrogate for j < i
  bool j_part_ok = true;         // J * H^i finitely generated surrogate
  std::vector<Ideal> detected;   // primes with nonzero socle in H^i/N inside the box
  std::vector<Ideal> candidates;
  bool contained = true;
  bool finite = true;
  std::string note;
};

// N is spanned by the full pieces of H^i at the listed degrees (empty list
// gives N = 0)
AssFinitenessReport ass_finiteness_experiment(ModulePtr M, const Ideal& I, const Ideal& J, int i,
                                              const DegreeBox& box, int degree_bound,
                                              const std::vector<Multideg>& n_generator_degrees = {});

}  // namespace lcwb

#endif
