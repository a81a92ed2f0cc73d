#ifndef LCWB_FP_HPP
#define LCWB_FP_HPP

#include <cassert>
#include <cstdint>

namespace lcwb {

// Arithmetic in F_p for a word-sized prime (default 32003). Elements are
// residues in [0, p); the context object carries the modulus.
class PrimeField {
 public:
  using Elem = uint32_t;

  explicit PrimeField(uint32_t p = 32003) : p_(p) { assert(p >= 2); }

  uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    uint64_t s = static_cast<uint64_t>(a) + b;
    return s >= p_ ? static_cast<Elem>(s - p_) : static_cast<Elem>(s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<uint64_t>(a) * b) % p_);
  }

  Elem inv(Elem a) const {
    assert(a != 0);
    // extended Euclid
    int64_t t = 0, nt = 1;
    int64_t r = p_, nr = a;
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    assert(r == 1);
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, uint64_t e) const {
    Elem r = one(), base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

}  // namespace lcwb

#endif
