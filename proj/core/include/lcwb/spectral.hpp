#ifndef LCWB_SPECTRAL_HPP
#define LCWB_SPECTRAL_HPP

#include <map>
#include <memory>

#include "lcwb/poset.hpp"

namespace lcwb {

// Explicit functor data on the poset at one slot: a space per node and a
// matrix per comparable pair.
struct PosetFunctorData {
  std::vector<int> dims;
  std::map<std::pair<int, int>, Mat<PrimeField>> maps;  // (p,q), p < q
};

// composability on all triples p < q < r; throws NonFunctorialTransitions
void check_functorial(const PrimeField& F, const PosetOfSums& P, const PosetFunctorData& data);

// homology of the Roos chain complex C_k = sum over chains of F(p_0)
std::vector<int> roos_homology_dims(const PrimeField& F, const PosetOfSums& P,
                                    const PosetFunctorData& data, int kmax);

// L_0 via the direct colimit construction (coequalizer), for cross-checking
int poset_colimit_dim(const PrimeField& F, const PosetOfSums& P, const PosetFunctorData& data);

struct PageTable {
  // pages[r-1]: dims of E_r at (s, t); einf; total cohomology of Tot
  std::vector<std::map<std::pair<int, int>, int>> pages;
  std::map<std::pair<int, int>, int> einf;
  std::map<int, int> total;
  bool any_higher_dr = false;  // some d_r (r >= 2) is nonzero
  std::map<int, std::vector<int>> filtration;  // per n: dims of F^s H^n, s = -L..0
};

// Cech-Roos bicomplex for the Gamma_{I_p} system with J = 0: columns are
// Roos chain positions, rows are Cech levels of the canonical generator
// lists. Converges to H_I(M) for I the intersection of the family.
class CechRoosBicomplex {
 public:
  CechRoosBicomplex(ModulePtr M, PosetOfSums P);

  const PosetOfSums& poset() const { return P_; }

  PageTable pages_at(const Multideg& a);
  // dims of E_2 at (s = -i, t = j) straight from the page table
  std::map<std::pair<int, int>, int> e2_at(const Multideg& a);

  // independent abutment H^n_I(M)_a via the Cech complex on the
  // intersection ideal
  int abutment_dim(int n, const Multideg& a);

  // consistency: d_total^2 = 0 at this degree
  bool total_dd_zero(const Multideg& a);

  // dimension bookkeeping: dim D^{s,t} blocks at this degree
  std::map<std::pair<int, int>, int> block_dims(const Multideg& a);

 private:
  ModulePtr M_;
  PosetOfSums P_;
  std::vector<std::unique_ptr<CechEngine>> engines_;   // per node
  std::unique_ptr<CechCohomology> abutment_;
  int tmax_ = 0;

  struct TotData {
    // per total degree n: dims and block layout, full differential
    std::map<int, Mat<PrimeField>> d;         // Tot^n -> Tot^{n+1}
    std::map<int, int> dims;
    // block offsets: per n, list of (s, t, chain index, dim, offset)
    struct Block {
      int s, t, chain, dim, offset;
    };
    std::map<int, std::vector<Block>> blocks;
  };
  std::map<Multideg, TotData> cache_;
  const TotData& tot(const Multideg& a);
};

// E2-only spectral data for the stabilized-value plugins (Gamma_V, Delta_V,
// and the two-ideal Gamma_{I,J} route for J != 0). Full d_r differentials
// would need the paper's injective resolutions; dims of E_2 plus the
// independently computed abutment are produced instead, with a degeneration
// criterion that licenses asserting convergence.
class TransformSpectral {
 public:
  enum class Kind { GammaV, DeltaV, GammaIJ };

  TransformSpectral(Kind kind, ModulePtr M, PosetOfSums P, Ideal J, ModuleObject V, int jmax,
                    int tmax, int degree_bound);

  const PosetOfSums& poset() const { return P_; }

  // value dims R^j Psi_p(M)_a per node
  PosetFunctorData values(int j, const Multideg& a);

  std::map<std::pair<int, int>, int> e2_at(const Multideg& a);  // (s=-i, j) -> dim
  bool degenerate_at(const Multideg& a);
  int abutment_dim(int n, const Multideg& a);
  bool stabilized() const { return stabilized_; }

  void assert_functorial(const Multideg& a);

 private:
  Kind kind_;
  ModulePtr M_;
  PosetOfSums P_;
  Ideal J_;
  ModuleObject V_;
  int jmax_, tmax_, degree_bound_;
  bool stabilized_ = true;

  // GammaV / DeltaV state
  std::vector<std::unique_ptr<ExtTower>> towers_;
  std::unique_ptr<ExtTower> abut_tower_;
  int common_t_ = 1;
  std::map<std::pair<int, int>, std::vector<PolyMat>> node_lifts_;  // (p,q)

  // GammaIJ (two-ideal) state
  std::vector<ModuleObject> gammas_;     // subobject modules of Gamma_{I_p,J}(M)
  std::vector<SubobjectHandle> gsubs_;   // the subobjects themselves
  std::vector<ModuleObject> quotients_;  // M / Gamma_{I_p,J}(M)
  std::vector<std::unique_ptr<CechEngine>> qengines_;
  std::unique_ptr<LocalCohomologyTable> abut_table_;

  void init_transform();
  void init_two_ideal();
  Mat<PrimeField> node_map(int p, int q, int j, const Multideg& a);
};

struct ConvergenceLine {
  Multideg a;
  int n = 0;
  int einf_total = 0;
  int abutment = 0;
  bool match = false;
};

// per total degree and multidegree: sum of E_inf dims against the abutment
std::vector<ConvergenceLine> convergence_report(CechRoosBicomplex& ss, const DegreeBox& box,
                                                int nmin, int nmax);

}  // namespace lcwb

#endif
