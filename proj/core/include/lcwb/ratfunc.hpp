#ifndef LCWB_RATFUNC_HPP
#define LCWB_RATFUNC_HPP

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "lcwb/fp.hpp"

namespace lcwb {

// Dense univariate polynomials over F_p, used as the coefficient base of the
// rational-function fields that hull models live over.
struct UniPoly {
  std::vector<uint32_t> c;  // c[i] = coefficient of t^i; no trailing zeros

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }

  static UniPoly zero() { return {}; }
  static UniPoly constant(uint32_t v) {
    UniPoly r;
    if (v != 0) r.c = {v};
    return r;
  }
  static UniPoly t_power(int e, uint32_t v = 1) {
    UniPoly r;
    if (v != 0) {
      r.c.assign(e + 1, 0);
      r.c[e] = v;
    }
    return r;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool operator==(const UniPoly& o) const { return c == o.c; }
};

inline UniPoly uadd(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    uint32_t x = i < a.c.size() ? a.c[i] : 0;
    uint32_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = F.add(x, y);
  }
  r.trim();
  return r;
}

inline UniPoly uneg(const PrimeField& F, const UniPoly& a) {
  UniPoly r = a;
  for (auto& v : r.c) v = F.neg(v);
  return r;
}

inline UniPoly usub(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  return uadd(F, a, uneg(F, b));
}

inline UniPoly umul(const PrimeField& F, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  UniPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

// quotient-remainder; b != 0
inline void udivmod(const PrimeField& F, const UniPoly& a, const UniPoly& b, UniPoly& q,
                    UniPoly& rem) {
  assert(!b.is_zero());
  q = {};
  rem = a;
  uint32_t lb_inv = F.inv(b.c.back());
  while (!rem.is_zero() && rem.deg() >= b.deg()) {
    int shift = rem.deg() - b.deg();
    uint32_t coef = F.mul(rem.c.back(), lb_inv);
    if (q.c.size() < static_cast<size_t>(shift + 1)) q.c.resize(shift + 1, 0);
    q.c[shift] = F.add(q.c[shift], coef);
    for (int i = 0; i <= b.deg(); ++i)
      rem.c[i + shift] = F.sub(rem.c[i + shift], F.mul(coef, b.c[i]));
    rem.trim();
  }
  q.trim();
}

inline UniPoly ugcd(const PrimeField& F, UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    udivmod(F, a, b, q, r);
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    uint32_t inv = F.inv(a.c.back());
    for (auto& v : a.c) v = F.mul(v, inv);
  }
  return a;
}

// Fractions num/den over F_p[t], normalized with monic denominator and
// gcd(num, den) = 1.
struct RatFunc {
  UniPoly num;
  UniPoly den;  // monic, nonzero

  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
};

// Field of univariate rational functions F_p(t); satisfies the same concept
// as PrimeField so the dense linear algebra is generic over either.
class RatFuncField {
 public:
  using Elem = RatFunc;

  explicit RatFuncField(uint32_t p = 32003) : F_(p) {}

  const PrimeField& base() const { return F_; }

  Elem zero() const { return {UniPoly::zero(), UniPoly::constant(1)}; }
  Elem one() const { return {UniPoly::constant(1), UniPoly::constant(1)}; }
  bool is_zero(const Elem& a) const { return a.num.is_zero(); }

  Elem from_scalar(uint32_t v) const { return make(UniPoly::constant(v), UniPoly::constant(1)); }
  Elem from_poly(const UniPoly& u) const { return make(u, UniPoly::constant(1)); }

  Elem make(UniPoly n, UniPoly d) const {
    assert(!d.is_zero());
    if (n.is_zero()) return zero();
    UniPoly g = ugcd(F_, n, d);
    if (g.deg() > 0 || (g.deg() == 0 && g.c[0] != 1)) {
      UniPoly q, r;
      udivmod(F_, n, g, q, r);
      n = q;
      udivmod(F_, d, g, q, r);
      d = q;
    }
    uint32_t lead = d.c.back();
    if (lead != 1) {
      uint32_t inv = F_.inv(lead);
      for (auto& v : d.c) v = F_.mul(v, inv);
      for (auto& v : n.c) v = F_.mul(v, inv);
    }
    return {n, d};
  }

  Elem add(const Elem& a, const Elem& b) const {
    return make(uadd(F_, umul(F_, a.num, b.den), umul(F_, b.num, a.den)),
                umul(F_, a.den, b.den));
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return make(usub(F_, umul(F_, a.num, b.den), umul(F_, b.num, a.den)),
                umul(F_, a.den, b.den));
  }
  Elem neg(const Elem& a) const { return {uneg(F_, a.num), a.den}; }
  Elem mul(const Elem& a, const Elem& b) const {
    return make(umul(F_, a.num, b.num), umul(F_, a.den, b.den));
  }
  Elem inv(const Elem& a) const {
    assert(!a.num.is_zero());
    return make(a.den, a.num);
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

 private:
  PrimeField F_;
};

}  // namespace lcwb

#endif
