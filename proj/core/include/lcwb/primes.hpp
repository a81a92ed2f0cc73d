#ifndef LCWB_PRIMES_HPP
#define LCWB_PRIMES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lcwb/modobj.hpp"

namespace lcwb {

// p in W(I,J): I^n <= p + J for n >> 1, decided through radical membership
// of the generators of I in rad(p + J). Throws NotPrime if p fails the
// configured validation (monomial primes combinatorially, linear forms by
// rank, zero ideal).
bool w_membership(const Ideal& I, const Ideal& J, const Ideal& p);

// all monomial primes of the ambient ring on the given variable pool
std::vector<Ideal> monomial_primes_on(const RingPtr& ring, const std::vector<int>& vars);

struct ElementaryWitness {
  SubobjectHandle subobject;  // cyclic (A-orbit) subobject with maximal annihilator
  Ideal prime;
  bool certified = false;     // monomial prime + sampled stability checks passed
  int degree_bound = 0;
  int sampled_subobjects = 0;
};

// Bounded search over cyclic subobjects generated by monomial multiples of
// the generators (and their A-orbits), picking an inclusion-maximal
// annihilator. Throws ZeroModule/SearchExhausted.
ElementaryWitness find_elementary_subobject(ModulePtr M, int degree_bound);

struct PrimeFiltration {
  std::vector<SubobjectHandle> chain;  // strictly increasing, ending at M
  std::vector<Ideal> quotient_primes;
  bool certified = false;
};

PrimeFiltration prime_filtration(ModulePtr M, int degree_bound);

struct AssResult {
  std::vector<Ideal> primes;    // verified associated primes
  std::vector<Ideal> superset;  // filtration primes (contains Ass when certified)
  bool certified = false;
};

AssResult associated_primes(ModulePtr M, int degree_bound);

// support of a finitely generated object: V(Ann M)
Ideal support_annihilator(const ModuleObject& M);
bool in_support(const ModuleObject& M, const Ideal& p);
std::vector<Ideal> minimal_support_primes(const ModuleObject& M);  // monomial Ann only

struct GammaResult {
  SubobjectHandle torsion;
  Ideal K;        // intersection of the associated primes lying in W(I,J)
  AssResult ass;  // the Ass computation used
};

// Gamma_{I,J}(M) = (0 :_M K^inf) with K = the intersection of
// Ass(M) ∩ W(I,J). Throws AssIncomplete when Ass is not certified.
GammaResult gamma_torsion(ModulePtr M, const Ideal& I, const Ideal& J, int degree_bound);

struct TorsionTheoryReport {
  bool quotient_torsion_free = false;  // Gamma(M/Gamma(M)) = 0
  int subobjects_checked = 0;
  bool hereditary_ok = false;  // Gamma(N) = N ∩ Gamma(M) on sampled subobjects
};

TorsionTheoryReport torsion_theory_check(ModulePtr M, const Ideal& I, const Ideal& J,
                                         int degree_bound);

struct GammaPrimeSample {
  bool power_side = false;    // I^n N <= J N for some n <= cap
  bool radical_side = false;  // I <= rad(Ann N + J)
  bool cap_exceeded = false;
  int witness_n = -1;
};

struct GammaPrimeReport {
  std::vector<GammaPrimeSample> samples;
  bool all_agree = true;
  int cap = 0;
};

GammaPrimeReport gamma_prime_equivalence(ModulePtr M, const Ideal& I, const Ideal& J,
                                         int nsamples, int cap);

struct NzdResult {
  bool found = false;
  Poly element;           // a in I, nonzerodivisor on M
  Ideal covering_prime;   // when !found: associated prime containing I
  bool kernel_verified = false;
};

NzdResult nonzerodivisor_in_ideal(const Ideal& I, ModulePtr M, int degree_bound);

// ----- search utilities shared with other engines -----

// nonzero elements m * e_i (monomial m of total degree <= d), normal forms
// deduplicated, in a deterministic order
std::vector<PolyVec> candidate_elements(const ModuleObject& M, int degree_bound);

// cyclic A-R-subobject generated by v (columns = A-orbit of v)
SubobjectHandle cyclic_subobject(ModulePtr M, const PolyVec& v);

// ----- appendix certificates -----

struct IntegralityCertificate {
  int n = 0;
  std::vector<Poly> lower;  // p(X) = sum_k lower[k] X^k, coefficients in I'
  bool verified = false;
};

// Determinant-trick certificate for phi(M) <= I'M: phi^n + p(phi) = 0.
// Throws NotIntoIdealTimesModule when the precondition fails.
IntegralityCertificate integrality_certificate(const ModuleObject& M, const PolyMat& phi,
                                               const Ideal& Iprime);

// t in 1 + I' with t M = 0, from the certificate at phi = id.
// Throws PreconditionFailed unless M = I'M.
Poly nakayama_witness(const ModuleObject& M, const Ideal& Iprime);

struct RadicalIdentityReport {
  Ideal ann_quotient;      // Ann(M / I'M)
  Ideal ann_plus;          // Ann(M) + I'
  bool radicals_equal = false;
};

RadicalIdentityReport radical_annihilator_identity(const ModuleObject& M, const Ideal& Iprime);

}  // namespace lcwb

#endif
