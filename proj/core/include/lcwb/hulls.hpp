#ifndef LCWB_HULLS_HPP
#define LCWB_HULLS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lcwb/linalg.hpp"
#include "lcwb/modobj.hpp"
#include "lcwb/ratfunc.hpp"

namespace lcwb {

// One indecomposable catalogue hull E(R/p) for a monomial prime p = (x_S):
// inverse polynomials in the S-variables with coefficients in the rational
// function field of the remaining variables. Catalogue: S = all variables
// (any n, coefficients F_p); |S^c| = 1 with n <= 2; S empty with n = 1
// (the rational function field itself).
struct HullSummand {
  std::vector<int> inv_vars;   // S, ascending
  std::vector<int> coef_vars;  // complement, ascending (size <= 1)
  Multideg shift;              // socle degree, full Z^n (only S-coords used)
};

class InjectiveModel {
 public:
  InjectiveModel() = default;

  // E(R/p)(shift); throws UnsupportedPrime outside the catalogue
  static InjectiveModel hull_of_prime(const RingPtr& ring, const Ideal& p,
                                      const Multideg& shift);
  static InjectiveModel hull_of_prime(const RingPtr& ring, const Ideal& p);

  static InjectiveModel direct_sum(const InjectiveModel& a, const InjectiveModel& b);

  const RingPtr& ring() const { return ring_; }
  const std::vector<HullSummand>& summands() const { return summands_; }

  // algebra decoration: matrices mix summands of identical (S, shift) only
  void set_action(AlgebraSpec spec, std::vector<Mat<PrimeField>> matrices);
  bool has_algebra() const { return algebra_.has_value(); }

  bool uniform_class() const;          // all summands share S and S^c
  Ideal class_prime() const;           // (x_S) for the uniform class
  std::vector<int> lattice_vars() const;  // S of the uniform class

  // dimension over the coefficient field of the degree-a piece (uniform class;
  // a is a full multidegree, only S-coordinates are read)
  int piece_dim(const Multideg& a) const;

  // closed-form annihilator of a basis element of summand s in degree a
  Ideal element_annihilator(int s, const Multideg& a) const;

  // test degrees: socle corner minus [0, radius]^S, coordinates outside S zero
  std::vector<Multideg> test_degrees(int radius) const;

 private:
  RingPtr ring_;
  std::vector<HullSummand> summands_;
  std::optional<AlgebraSpec> algebra_;
  std::vector<Mat<PrimeField>> action_;
};

enum class HullBranch { Zero, Identity, HomVE };

const char* hull_branch_name(HullBranch b);

struct HullValueReport {
  std::string functor;
  HullBranch predicted = HullBranch::Zero;
  bool agreement = true;
  int degrees_tested = 0;
  int cap_exceeded = 0;
  std::vector<std::string> notes;
};

// torsion part of Gamma_{K,J} on the model, degreewise, against the
// W(K,J)-membership prediction
HullValueReport gamma_on_hull(const InjectiveModel& E, const Ideal& K, const Ideal& J,
                              int radius, int cap);

// localization at a monomial (or at the complement of a monomial prime)
HullValueReport localize_hull(const InjectiveModel& E, const Monomial& f, int radius);
HullValueReport localize_hull_at_prime_complement(const InjectiveModel& E, const Ideal& q,
                                                  int radius);

struct DecompositionReport {
  // detected multiset of (prime, socle degree, multiplicity)
  struct Item {
    Ideal prime;
    Multideg socle_degree;
    int multiplicity = 1;
  };
  std::vector<Item> detected;
  bool matches_construction = false;
};

DecompositionReport decomposition_check(const InjectiveModel& E, int radius);

// dim over the coefficient field of Hom_R(V, E)_d (V graded f.p., uniform E)
int hull_hom_dim(const InjectiveModel& E, const ModuleObject& V, const Multideg& d);

struct HullHomMapInfo {
  int dim_src = 0;  // Hom(V, E)_d
  int dim_tgt = 0;  // Hom(W, E)_d
  int rank = 0;     // of the restriction along W -> V
};

// restriction along the map W -> V given by columns over R
HullHomMapInfo hull_hom_map(const InjectiveModel& E, const ModuleObject& V,
                            const ModuleObject& W, const PolyMat& w_to_v, const Multideg& d);

struct HomExactnessReport {
  int degrees_tested = 0;
  bool surjective_everywhere = true;
  std::vector<std::string> failures;
};

// Hom(V, E) -> Hom(V', E) surjective degreewise, V' <= V by inclusion columns
HomExactnessReport hom_exactness_on_hull(const InjectiveModel& E, const ModuleObject& V,
                                         const PolyMat& sub_inclusion, int radius);

}  // namespace lcwb

#endif
