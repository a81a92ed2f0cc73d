#ifndef LCWB_CECH_HPP
#define LCWB_CECH_HPP

#include <map>
#include <vector>

#include "lcwb/graded.hpp"

namespace lcwb {

// Cohomology of a finite complex of F_p spaces at one slot, with enough
// structure to express further cocycles in the chosen basis.
struct FpCohomology {
  int dim = 0;
  Mat<PrimeField> reps;            // cochain-coordinate representatives (columns)
  ColSpace<PrimeField> image;      // im(d_in)
  ColSpace<PrimeField> kernel;     // ker(d_out)
};

FpCohomology complex_cohomology(const PrimeField& F, const Mat<PrimeField>* d_in,
                                const Mat<PrimeField>* d_out, int dim_here);

// coordinates of the cocycle z in the cohomology basis (reduces mod image)
std::vector<uint32_t> cohomology_coords(const PrimeField& F, const FpCohomology& H,
                                        std::vector<uint32_t> z);

// Degreewise Cech complex of a graded module object on an ordered list of
// monomial generators. C^k = direct sum over k-subsets of the localizations;
// dropping index j in a face map contributes the sign (-1)^j.
class CechEngine {
 public:
  CechEngine(ModulePtr M, std::vector<Monomial> gens);

  int ngens() const { return static_cast<int>(gens_.size()); }
  const std::vector<Monomial>& gens() const { return gens_; }
  const ModulePtr& module() const { return M_; }

  struct DegreeData {
    std::vector<GradedPiece> pieces;       // per subset mask
    std::vector<std::vector<int>> masks;   // masks per level k
    std::vector<int> dims;                 // dim C^k
    std::vector<Mat<PrimeField>> d;        // d[k] : C^k -> C^{k+1}
  };

  const DegreeData& at(const Multideg& a);

  FpCohomology cohomology(int k, const Multideg& a);

  // induced multiplication by x^e (e >= 0 componentwise) on H^k
  Mat<PrimeField> action(int k, const Multideg& a, const Multideg& e);

  // d(k+1) after d(k) vanishes at this degree
  bool dd_zero(const Multideg& a);

  // blockwise map C^k(a) -> C^k(a+e) given by multiplication by x^e
  Mat<PrimeField> cochain_mult(int k, const Multideg& a, const Multideg& e);

  const GradedPresentation& loc(int mask) const { return locs_[mask]; }

 private:
  ModulePtr M_;
  std::vector<Monomial> gens_;
  std::vector<GradedPresentation> locs_;  // per mask
  std::map<Multideg, DegreeData> cache_;
  std::map<std::pair<int, Multideg>, FpCohomology> coh_cache_;
};

// Chain map C(G_src) -> C(G_tgt) for a subsequence selection: tgt_index[j] =
// position in src of the j-th generator of the target list. Components are
// identity localizations on matching subsets, zero otherwise.
Mat<PrimeField> cech_drop_map(CechEngine& src, CechEngine& tgt, const std::vector<int>& tgt_index,
                              int k, const Multideg& a);

}  // namespace lcwb

#endif
