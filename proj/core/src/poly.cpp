#include "lcwb/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lcwb {

namespace {
const MonomialOrder kCanonical = MonomialOrder::degrevlex();
}

std::shared_ptr<const PolyRing> PolyRing::make(uint32_t p, std::vector<std::string> names) {
  auto r = std::make_shared<PolyRing>(PolyRing{PrimeField(p), static_cast<int>(names.size()),
                                               std::move(names)});
  return r;
}

std::shared_ptr<const PolyRing> PolyRing::make(uint32_t p, int nvars) {
  std::vector<std::string> names;
  if (nvars <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (int i = 0; i < nvars; ++i) names.push_back(xyz[i]);
  } else {
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return make(p, std::move(names));
}

std::shared_ptr<const PolyRing> PolyRing::extended(const std::string& fresh) const {
  std::vector<std::string> names = varnames;
  names.push_back(fresh);
  return make(field.modulus(), std::move(names));
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const PrimeField& F = ring_->field;
  std::map<std::vector<int>, uint32_t> acc;
  for (auto& t : terms) {
    if (t.c % F.modulus() == 0) continue;
    auto key = t.m.exps();
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(std::move(key), t.c % F.modulus());
    else
      it->second = F.add(it->second, t.c % F.modulus());
  }
  for (auto& [e, c] : acc) {
    if (c != 0) terms_.push_back({Monomial(e), c});
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return kCanonical.greater(a.m, b.m); });
}

Poly Poly::constant(RingPtr ring, uint32_t c) {
  Poly r(ring);
  uint32_t cc = c % ring->field.modulus();
  if (cc != 0) r.terms_.push_back({Monomial::one(ring->nvars), cc});
  return r;
}

Poly Poly::monomial(RingPtr ring, Monomial m, uint32_t c) {
  Poly r(ring);
  uint32_t cc = c % ring->field.modulus();
  if (cc != 0) r.terms_.push_back({std::move(m), cc});
  return r;
}

Poly Poly::variable(RingPtr ring, int i) {
  return monomial(ring, Monomial::var(ring->nvars, i), 1);
}

int Poly::total_deg() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, t.m.deg());
  return d;
}

std::optional<Multideg> Poly::multidegree() const {
  if (terms_.empty()) return std::nullopt;
  Multideg d = terms_[0].m.multidegree();
  for (size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].m.multidegree() != d) return std::nullopt;
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  assert(ring_ && o.ring_ && ring_->compatible(*o.ring_));
  const PrimeField& F = ring_->field;
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = kCanonical.cmp(terms_[i].m, o.terms_[j].m);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      uint32_t s = F.add(terms_[i].c, o.terms_[j].c);
      if (s != 0) r.terms_.push_back({terms_[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  const PrimeField& F = ring_->field;
  for (auto& t : r.terms_) t.c = F.neg(t.c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(uint32_t c) const {
  const PrimeField& F = ring_->field;
  uint32_t cc = c % F.modulus();
  if (cc == 0) return Poly(ring_);
  Poly r(*this);
  for (auto& t : r.terms_) t.c = F.mul(t.c, cc);
  return r;
}

Poly Poly::times_term(const Monomial& m, uint32_t c) const {
  const PrimeField& F = ring_->field;
  uint32_t cc = c % F.modulus();
  if (cc == 0) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m * m, F.mul(t.c, cc)});
  return r;  // multiplying by a fixed monomial preserves the sort order
}

Poly Poly::operator*(const Poly& o) const {
  assert(ring_ && o.ring_ && ring_->compatible(*o.ring_));
  const PrimeField& F = ring_->field;
  std::map<std::vector<int>, uint32_t> acc;
  for (auto& a : terms_) {
    for (auto& b : o.terms_) {
      Monomial m = a.m * b.m;
      uint32_t c = F.mul(a.c, b.c);
      auto key = m.exps();
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(std::move(key), c);
      else
        it->second = F.add(it->second, c);
    }
  }
  std::vector<Term> ts;
  for (auto& [e, c] : acc)
    if (c != 0) ts.push_back({Monomial(e), c});
  Poly r(ring_);
  r.terms_ = std::move(ts);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return kCanonical.greater(a.m, b.m); });
  return r;
}

bool Poly::terms_equal(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].c != o.terms_[i].c || terms_[i].m != o.terms_[i].m) return false;
  return true;
}

std::string monomial_str(const PolyRing& ring, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < ring.nvars; ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << ring.varnames[i];
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : terms_) {
    if (!first) os << " + ";
    if (t.m.is_one()) {
      os << t.c;
    } else if (t.c == 1) {
      os << monomial_str(*ring_, t.m);
    } else {
      os << t.c << "*" << monomial_str(*ring_, t.m);
    }
    first = false;
  }
  return os.str();
}

}  // namespace lcwb
