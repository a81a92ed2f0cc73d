#ifndef LCWB_GROEBNER_HPP
#define LCWB_GROEBNER_HPP

#include <memory>
#include <vector>

#include "lcwb/poly.hpp"

namespace lcwb {

// Element of a free module R^m, column convention.
using PolyVec = std::vector<Poly>;

PolyVec pv_zero(const RingPtr& ring, int m);
bool pv_is_zero(const PolyVec& v);
PolyVec pv_add(const PolyVec& a, const PolyVec& b);
PolyVec pv_sub(const PolyVec& a, const PolyVec& b);
PolyVec pv_scale(const PolyVec& v, const Poly& a);
bool pv_equal(const PolyVec& a, const PolyVec& b);

// Matrix over R as a list of columns in R^rows.
using PolyMat = std::vector<PolyVec>;

PolyMat pm_mul(const PolyMat& A, const PolyMat& B);       // (A*B) columns
PolyVec pm_apply(const PolyMat& A, const PolyVec& x);     // A*x
PolyMat pm_identity(const RingPtr& ring, int n);
bool pm_is_zero(const PolyMat& A);

// Column multidegree when all entries are multihomogeneous and consistent
// with the given row shifts: deg(entry_i) + row_deg[i] constant.
std::optional<Multideg> column_multidegree(const PolyVec& col, const std::vector<Multideg>& row_degs);

// Grobner basis of a submodule of R^m (m = 1 recovers ideals). The module
// order is position-over-term with lower components dominating, which makes
// trailing components an elimination block (used for syzygy extraction).
class ModuleGB {
 public:
  ModuleGB(RingPtr ring, int ncomp, std::vector<PolyVec> gens,
           MonomialOrder order = MonomialOrder::degrevlex(), bool track_cofactors = false);
  ~ModuleGB();
  ModuleGB(ModuleGB&&) noexcept;
  ModuleGB& operator=(ModuleGB&&) noexcept;

  const RingPtr& ring() const { return ring_; }
  int ncomp() const { return ncomp_; }

  // reduced basis (monic, self-reduced, deterministically sorted)
  const std::vector<PolyVec>& basis() const;

  PolyVec normal_form(const PolyVec& v) const;
  bool contains(const PolyVec& v) const;

  // v = remainder + sum_i cof[i] * gens[i]; requires track_cofactors
  PolyVec normal_form_cofactors(const PolyVec& v, std::vector<Poly>& cof) const;

  // convenience for ncomp == 1
  Poly normal_form_poly(const Poly& f) const;
  bool contains_poly(const Poly& f) const;

 private:
  struct Impl;
  RingPtr ring_;
  int ncomp_;
  std::unique_ptr<Impl> impl_;
};

// Generators of the syzygy module of the given columns in R^m, as vectors in
// R^s (s = number of columns). Preserves multihomogeneity of the input.
std::vector<PolyVec> syzygies(const RingPtr& ring, int m, const std::vector<PolyVec>& cols,
                              MonomialOrder order = MonomialOrder::degrevlex());

// Express v as a combination of the columns if possible.
bool lift_through(const RingPtr& ring, int m, const std::vector<PolyVec>& cols, const PolyVec& v,
                  std::vector<Poly>& cof);

}  // namespace lcwb

#endif
