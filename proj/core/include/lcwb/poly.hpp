#ifndef LCWB_POLY_HPP
#define LCWB_POLY_HPP

#include <cassert>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcwb/fp.hpp"
#include "lcwb/monomial.hpp"

namespace lcwb {

// Immutable ring context R = F_p[x_1, ..., x_n], shared by all values built
// over it.
struct PolyRing {
  PrimeField field;
  int nvars;
  std::vector<std::string> varnames;

  static std::shared_ptr<const PolyRing> make(uint32_t p, std::vector<std::string> names);
  // variables named x1..xn (or x,y,z for n <= 3)
  static std::shared_ptr<const PolyRing> make(uint32_t p, int nvars);

  // Same characteristic, one fresh variable appended (Rabinowitsch trick).
  std::shared_ptr<const PolyRing> extended(const std::string& fresh) const;

  bool compatible(const PolyRing& o) const {
    return field.modulus() == o.field.modulus() && nvars == o.nvars;
  }
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial m;
  uint32_t c = 0;
};

// Sparse multivariate polynomial; terms sorted descending in degrevlex
// (the canonical storage order, independent of any working order).
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, uint32_t c);
  static Poly monomial(RingPtr ring, Monomial m, uint32_t c = 1);
  static Poly variable(RingPtr ring, int i);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }
  bool is_term() const { return terms_.size() == 1; }
  size_t nterms() const { return terms_.size(); }

  const Term& leading() const {
    assert(!terms_.empty());
    return terms_[0];
  }

  int total_deg() const;

  // Multidegree when every term shares one; nullopt otherwise.
  std::optional<Multideg> multidegree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(uint32_t c) const;
  Poly times_term(const Monomial& m, uint32_t c) const;

  bool operator==(const Poly& o) const { return terms_equal(o); }
  bool operator!=(const Poly& o) const { return !terms_equal(o); }

  std::string str() const;

 private:
  bool terms_equal(const Poly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_str(const PolyRing& ring, const Monomial& m);

}  // namespace lcwb

#endif
