#ifndef LCWB_MONOMIAL_HPP
#define LCWB_MONOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

namespace lcwb {

// Z^n degree vector; may have negative entries (shifts, localized degrees).
using Multideg = std::vector<int>;

inline Multideg mdeg_add(const Multideg& a, const Multideg& b) {
  assert(a.size() == b.size());
  Multideg r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Multideg mdeg_sub(const Multideg& a, const Multideg& b) {
  assert(a.size() == b.size());
  Multideg r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool mdeg_leq(const Multideg& a, const Multideg& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline int mdeg_total(const Multideg& a) { return std::accumulate(a.begin(), a.end(), 0); }

// Exponent vector with nonnegative entries; the same vector doubles as the
// Z^n multidegree of the monomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
#ifndef NDEBUG
    for (int v : e_) assert(v >= 0);
#endif
  }

  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial var(int nvars, int i, int e = 1) {
    Monomial m(nvars);
    m.e_[i] = e;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  int& at(int i) { return e_[i]; }
  const std::vector<int>& exps() const { return e_; }
  Multideg multidegree() const { return e_; }

  int deg() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    assert(nvars() == o.nvars());
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    assert(nvars() == o.nvars());
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // o / this, assuming divisibility
  Monomial quotient_into(const Monomial& o) const {
    assert(divides(o));
    Monomial r(o);
    for (int i = 0; i < nvars(); ++i) r.e_[i] -= e_[i];
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    assert(nvars() == o.nvars());
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] = std::max(r.e_[i], o.e_[i]);
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    assert(nvars() == o.nvars());
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e_[i] = std::min(r.e_[i], o.e_[i]);
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
  }

  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > 0) s.push_back(i);
    return s;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  bool operator<(const Monomial& o) const { return e_ < o.e_; }  // container order only

 private:
  std::vector<int> e_;
};

struct MonomialOrder {
  enum class Kind { Degrevlex, Lex, Block };

  Kind kind = Kind::Degrevlex;
  // For Block: variables [0, block) are compared first (eliminated block),
  // each block internally by degrevlex.
  int block = 0;

  static MonomialOrder degrevlex() { return {Kind::Degrevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elim(int first_block) { return {Kind::Block, first_block}; }

  // -1 if a < b, 0 if equal, +1 if a > b
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::Lex: {
        for (int i = 0; i < a.nvars(); ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      }
      case Kind::Degrevlex:
        return drl_range(a, b, 0, a.nvars());
      case Kind::Block: {
        int c = drl_range(a, b, 0, block);
        if (c != 0) return c;
        return drl_range(a, b, block, a.nvars());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

 private:
  static int drl_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace lcwb

#endif
