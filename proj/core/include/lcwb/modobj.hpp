#ifndef LCWB_MODOBJ_HPP
#define LCWB_MODOBJ_HPP

#include <memory>
#include <optional>
#include <vector>

#include "lcwb/ideal.hpp"

namespace lcwb {

// Finite-dimensional F_p-algebra given by structure constants; acts on
// module objects through matrices over R that commute with the R-action.
struct AlgebraSpec {
  int dim = 1;
  // mul[i][j][k] = coefficient of e_k in e_i * e_j
  std::vector<std::vector<std::vector<uint32_t>>> mul;
  std::vector<uint32_t> unit;

  static AlgebraSpec trivial();
  // associativity and unit laws on all basis triples
  void validate(const PrimeField& F) const;
};

class ModuleObject;
using ModulePtr = std::shared_ptr<const ModuleObject>;

// Subobject of an ambient module object: columns of `inclusion` generate it
// (in ambient generator coordinates). Always closed under the R-action by
// construction; A-stability is a validation pass.
struct SubobjectHandle {
  ModulePtr ambient;
  PolyMat inclusion;

  bool is_zero() const;
};

// Finitely presented module object: coker of a matrix over R on `ngens`
// generators, optionally Z^n-graded and optionally with a commuting action
// of a finite-dimensional algebra.
class ModuleObject {
 public:
  ModuleObject() = default;
  ModuleObject(RingPtr ring, int ngens, PolyMat relations,
               std::optional<std::vector<Multideg>> gen_degs = std::nullopt);

  static ModuleObject free_module(RingPtr ring, int rank, bool graded = true);
  static ModuleObject cyclic(const Ideal& I, bool graded_if_possible = true);  // R/I
  static ModuleObject direct_sum(const ModuleObject& a, const ModuleObject& b);

  const RingPtr& ring() const { return ring_; }
  int ngens() const { return ngens_; }
  const PolyMat& relations() const { return rels_; }
  bool graded() const { return gen_degs_.has_value(); }
  const std::optional<std::vector<Multideg>>& gen_degs() const { return gen_degs_; }

  bool has_algebra() const { return algebra_.has_value(); }
  const std::optional<AlgebraSpec>& algebra() const { return algebra_; }
  const std::vector<PolyMat>& action() const { return action_; }
  void set_action(AlgebraSpec spec, std::vector<PolyMat> action);

  // action matrices preserve relations and satisfy the multiplication table
  void validate_action() const;

  PolyVec nf(const PolyVec& v) const;               // normal form mod relations
  bool is_zero_in_module(const PolyVec& v) const;
  bool is_zero_module() const;

  // membership in span(columns | relations)
  bool in_span(const PolyMat& cols, const PolyVec& v) const;

  ModulePtr shared() const;

 private:
  RingPtr ring_;
  int ngens_ = 0;
  PolyMat rels_;
  std::optional<std::vector<Multideg>> gen_degs_;
  std::optional<AlgebraSpec> algebra_;
  std::vector<PolyMat> action_;  // one ngens x ngens matrix per A-basis element

  struct Cache;
  std::shared_ptr<Cache> cache_;
  const ModuleGB& rel_gb() const;
};

// ----- constructions on subobjects -----

SubobjectHandle whole_subobject(ModulePtr M);
SubobjectHandle zero_subobject(ModulePtr M);

// presentation of the subobject as a module object (A-action lifted when present)
ModuleObject subobject_module(const SubobjectHandle& N);

bool subobject_contains(const SubobjectHandle& big, const SubobjectHandle& small);
bool subobject_equal(const SubobjectHandle& a, const SubobjectHandle& b);

SubobjectHandle subobject_sum(const SubobjectHandle& a, const SubobjectHandle& b);
SubobjectHandle subobject_intersection(const SubobjectHandle& a, const SubobjectHandle& b);
// (b : a) = { r in R : r a <= b }
Ideal subobject_colon(const SubobjectHandle& b, const SubobjectHandle& a);

// ----- module operations -----

Ideal annihilator(const ModuleObject& M);
Ideal annihilator(const SubobjectHandle& N);  // elements killing N inside the ambient

// kernel and image of the scalar action a_M
std::pair<SubobjectHandle, SubobjectHandle> kernel_and_image_of_scalar(ModulePtr M,
                                                                       const Poly& a);

// kernel of the map M -> target given by columns `phi` (images of M's
// generators in target coordinates)
SubobjectHandle kernel_of_map(ModulePtr source, const ModuleObject& target, const PolyMat& phi);

// M / N with inherited grading and action; projection is the identity matrix
ModuleObject quotient_object(const ModuleObject& M, const SubobjectHandle& N);

// joint kernel of the ideal's generators acting on M: Hom(R/K, M) as a subobject
SubobjectHandle ideal_kernel_subobject(ModulePtr M, const Ideal& K);

// (0 :_M K^inf): saturation by iterated kernels
SubobjectHandle ideal_power_torsion(ModulePtr M, const Ideal& K);

// multiply subobject by ideal: K * N
SubobjectHandle ideal_times_subobject(const Ideal& K, const SubobjectHandle& N);

struct FreeResolution {
  // matrices[k]: F_{k+1} -> F_k (matrices[0] is the presentation of the module)
  std::vector<PolyMat> matrices;
  std::vector<int> ranks;                       // ranks of F_0, F_1, ...
  std::vector<std::vector<Multideg>> shifts;    // generator degrees per level (graded case)
  bool graded = false;
};

// minimal-ish free resolution of the cokernel of the presentation
FreeResolution free_resolution(const ModuleObject& M, int length);

// Hom_R(V, M): presentation plus carrier columns (each generator of the Hom
// object is a tuple of elements of M, one per generator of V).
struct HomResult {
  ModuleObject module;
  PolyMat carriers;  // columns in R^{V.ngens * M.ngens}, blocks by V-generator
  int vgens = 0;
};

HomResult hom_internal(const ModuleObject& V, const ModuleObject& M);

// Ext^i_R(V, M) for 0 <= i <= length
std::vector<ModuleObject> ext_modules(const ModuleObject& V, const ModuleObject& M, int length);

// localization at a monomial multiplicative set
struct LocalizedModule {
  ModuleObject presentation;   // relations saturated at the inverted monomial
  std::vector<bool> inverted;  // per variable
  SubobjectHandle kernel;      // Ker(M -> M_T) inside the original M
};

LocalizedModule localize(ModulePtr M, const Monomial& denominator);

// prune generating columns that lie in the span of the others (mod relations
// of the ambient free module when given)
PolyMat minimalize_columns(const RingPtr& ring, int m, const PolyMat& cols,
                           const PolyMat* modulo = nullptr);

}  // namespace lcwb

#endif
