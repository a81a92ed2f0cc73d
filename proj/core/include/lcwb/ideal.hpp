#ifndef LCWB_IDEAL_HPP
#define LCWB_IDEAL_HPP

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lcwb/groebner.hpp"
#include "lcwb/poly.hpp"

namespace lcwb {

// Ideal of R with a lazily computed reduced Grobner basis (degrevlex). The
// cache is shared across copies and populated once.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  // reduced Grobner basis, canonical
  const std::vector<Poly>& gb() const;
  const ModuleGB& gb_engine() const;

  bool contains(const Poly& f) const;
  Poly normal_form(const Poly& f) const;
  bool is_zero() const;
  bool is_unit() const;

  bool contains_ideal(const Ideal& other) const;
  bool equals(const Ideal& other) const;  // via reduced GB comparison

  bool is_monomial() const;               // reduced GB generated by monomials
  bool is_monomial_prime() const;         // generated by a subset of variables
  std::vector<int> variable_support() const;  // defined for monomial primes

  std::string str() const;  // canonical printing via reduced GB

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_quotient(const Ideal& a, const Ideal& b);   // (a : b)
Ideal ideal_saturation(const Ideal& a, const Ideal& b);  // (a : b^infinity)
Ideal ideal_power(const Ideal& a, int t);

// f in rad(I), decided by 1 in I + (1 - z f) in R[z].
bool radical_membership(const Poly& f, const Ideal& I);

// I <= rad(J) generatorwise.
bool ideal_in_radical(const Ideal& I, const Ideal& J);

// Minimal primes of a monomial ideal, as monomial primes (minimal covers of
// the generator supports). Requires is_monomial().
std::vector<Ideal> monomial_minimal_primes(const Ideal& I);

// List of variable-generated primes on the ambient ring (all 2^n - ... no:
// subsets of the given variable set), used as candidate pools.
Ideal monomial_prime(const RingPtr& ring, const std::vector<int>& vars);

// "Validated prime": monomial primes combinatorially; zero ideal; ideals
// generated by independent linear forms. Anything else is rejected.
bool validated_prime(const Ideal& p);

// Lift a polynomial into a ring with the same leading variables plus extras.
Poly lift_poly(const RingPtr& target, const Poly& f);

}  // namespace lcwb

#endif
