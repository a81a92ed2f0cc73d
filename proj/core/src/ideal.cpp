#include "lcwb/ideal.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "lcwb/error.hpp"
#include "lcwb/linalg.hpp"

namespace lcwb {

struct Ideal::Cache {
  std::once_flag flag;
  std::unique_ptr<ModuleGB> gb;
  std::vector<Poly> reduced;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(g);
}

Ideal Ideal::unit(RingPtr ring) {
  std::vector<Poly> g{Poly::constant(ring, 1)};
  return Ideal(std::move(ring), std::move(g));
}

const ModuleGB& Ideal::gb_engine() const {
  std::call_once(cache_->flag, [this] {
    std::vector<PolyVec> cols;
    for (auto& g : gens_) cols.push_back(PolyVec{g});
    cache_->gb = std::make_unique<ModuleGB>(ring_, 1, std::move(cols));
    for (auto& b : cache_->gb->basis()) cache_->reduced.push_back(b[0]);
  });
  return *cache_->gb;
}

const std::vector<Poly>& Ideal::gb() const {
  gb_engine();
  return cache_->reduced;
}

bool Ideal::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  return gb_engine().contains_poly(f);
}

Poly Ideal::normal_form(const Poly& f) const {
  if (gens_.empty()) return f;
  return gb_engine().normal_form_poly(f);
}

bool Ideal::is_zero() const { return gb().empty(); }

bool Ideal::is_unit() const {
  const auto& b = gb();
  return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

bool Ideal::contains_ideal(const Ideal& other) const {
  for (auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  const auto& a = gb();
  const auto& b = other.gb();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool Ideal::is_monomial() const {
  for (auto& g : gb())
    if (!g.is_term()) return false;
  return true;
}

bool Ideal::is_monomial_prime() const {
  for (auto& g : gb()) {
    if (!g.is_term()) return false;
    if (g.leading().m.deg() != 1) return false;
  }
  return true;
}

std::vector<int> Ideal::variable_support() const {
  std::vector<int> vars;
  for (auto& g : gb()) {
    auto s = g.leading().m.support();
    vars.insert(vars.end(), s.begin(), s.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "<";
  bool first = true;
  for (auto& g : gb()) {
    if (!first) os << ", ";
    os << g.str();
    first = false;
  }
  if (first) os << "0";
  os << ">";
  return os.str();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Poly> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.ring() ? a.ring() : b.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Poly> gens;
  for (auto& f : a.gens())
    for (auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring() ? a.ring() : b.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring() ? a.ring() : b.ring();
  if (a.gens().empty() || b.gens().empty()) return Ideal::zero(ring);
  // syzygies of [gens(a) | gens(b)] as a single-row matrix: the a-part of a
  // syzygy lands in a ∩ b
  std::vector<PolyVec> cols;
  for (auto& f : a.gens()) cols.push_back(PolyVec{f});
  for (auto& g : b.gens()) cols.push_back(PolyVec{g});
  auto syz = syzygies(ring, 1, cols);
  std::vector<Poly> gens;
  size_t na = a.gens().size();
  for (auto& s : syz) {
    Poly v = Poly::zero(ring);
    for (size_t i = 0; i < na; ++i) v = v + s[i] * a.gens()[i];
    if (!v.is_zero()) gens.push_back(v);
  }
  return Ideal(ring, std::move(gens));
}

namespace {

// (a : g) for a single polynomial g: first coordinates of syzygies of
// [g | gens(a)].
Ideal ideal_quotient_single(const Ideal& a, const Poly& g) {
  const RingPtr& ring = a.ring();
  if (g.is_zero()) return Ideal::unit(ring);
  std::vector<PolyVec> cols;
  cols.push_back(PolyVec{g});
  for (auto& f : a.gens()) cols.push_back(PolyVec{f});
  auto syz = syzygies(ring, 1, cols);
  std::vector<Poly> gens;
  for (auto& s : syz)
    if (!s[0].is_zero()) gens.push_back(s[0]);
  return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring() ? a.ring() : b.ring();
  if (b.gens().empty()) return Ideal::unit(ring);
  bool first = true;
  Ideal acc;
  for (auto& g : b.gens()) {
    Ideal q = ideal_quotient_single(a, g);
    acc = first ? q : ideal_intersection(acc, q);
    first = false;
  }
  return acc;
}

Ideal ideal_saturation(const Ideal& a, const Ideal& b) {
  Ideal cur = a;
  for (int step = 0; step < 256; ++step) {
    Ideal next = ideal_quotient(cur, b);
    if (next.equals(cur)) return cur;
    cur = next;
  }
  throw Error(ErrorCode::Internal, "saturation did not stabilize");
}

Ideal ideal_power(const Ideal& a, int t) {
  assert(t >= 0);
  if (t == 0) return Ideal::unit(a.ring());
  Ideal r = a;
  for (int i = 1; i < t; ++i) r = ideal_product(r, a);
  return r;
}

Poly lift_poly(const RingPtr& target, const Poly& f) {
  std::vector<Term> ts;
  for (auto& t : f.terms()) {
    std::vector<int> e = t.m.exps();
    e.resize(target->nvars, 0);
    ts.push_back({Monomial(std::move(e)), t.c});
  }
  return Poly(target, std::move(ts));
}

bool radical_membership(const Poly& f, const Ideal& I) {
  if (f.is_zero()) return I.ring() != nullptr;  // 0 in rad(I) always
  if (I.contains(f)) return true;
  const RingPtr& ring = I.ring();
  RingPtr ext = ring->extended("@z");
  int z = ext->nvars - 1;
  std::vector<Poly> gens;
  for (auto& g : I.gens()) gens.push_back(lift_poly(ext, g));
  // 1 - z*f
  Poly zf = Poly::variable(ext, z) * lift_poly(ext, f);
  gens.push_back(Poly::constant(ext, 1) - zf);
  Ideal J(ext, std::move(gens));
  return J.is_unit();
}

bool ideal_in_radical(const Ideal& I, const Ideal& J) {
  for (auto& g : I.gens())
    if (!radical_membership(g, J)) return false;
  return true;
}

Ideal monomial_prime(const RingPtr& ring, const std::vector<int>& vars) {
  std::vector<Poly> gens;
  for (int v : vars) gens.push_back(Poly::variable(ring, v));
  return Ideal(ring, std::move(gens));
}

std::vector<Ideal> monomial_minimal_primes(const Ideal& I) {
  assert(I.is_monomial());
  const RingPtr& ring = I.ring();
  std::vector<std::vector<int>> supports;
  for (auto& g : I.gb()) supports.push_back(g.leading().m.support());
  if (supports.empty()) return {};  // zero ideal: no minimal primes over it except (0)
  int n = ring->nvars;
  std::vector<std::vector<int>> covers;
  // enumerate subsets of variables, smallest first, keep minimal covers
  std::vector<int> subsets(1 << n);
  for (int mask = 1; mask < (1 << n); ++mask) {
    bool covered = true;
    for (auto& s : supports) {
      bool hit = false;
      for (int v : s)
        if (mask & (1 << v)) {
          hit = true;
          break;
        }
      if (!hit) {
        covered = false;
        break;
      }
    }
    if (!covered) continue;
    bool minimal = true;
    for (auto& c : covers) {
      int cm = 0;
      for (int v : c) cm |= 1 << v;
      if ((cm & mask) == cm) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<int> vars;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) vars.push_back(v);
    covers.push_back(vars);
  }
  std::vector<Ideal> primes;
  for (auto& c : covers) primes.push_back(monomial_prime(ring, c));
  return primes;
}

bool validated_prime(const Ideal& p) {
  if (!p.ring()) return false;
  if (p.is_zero()) return true;
  if (p.is_unit()) return false;
  if (p.is_monomial_prime()) return true;
  // independent linear forms generate a prime (a linear change of variables)
  const auto& b = p.gb();
  for (auto& g : b)
    if (g.total_deg() > 1) return false;
  const PrimeField& F = p.ring()->field;
  Mat<PrimeField> rows(static_cast<int>(b.size()), p.ring()->nvars + 1, F);
  for (size_t i = 0; i < b.size(); ++i) {
    for (auto& t : b[i].terms()) {
      if (t.m.is_one()) {
        rows.at(static_cast<int>(i), p.ring()->nvars) = t.c;
      } else {
        rows.at(static_cast<int>(i), t.m.support()[0]) = t.c;
      }
    }
  }
  // affine-linear forms: prime iff the system is consistent as a linear
  // variety, i.e. rank of coefficient part equals rank of the full matrix
  Mat<PrimeField> coef(static_cast<int>(b.size()), p.ring()->nvars, F);
  for (int i = 0; i < coef.rows; ++i)
    for (int j = 0; j < coef.cols; ++j) coef.at(i, j) = rows.at(i, j);
  return mat_rank(F, coef) == mat_rank(F, rows);
}

}  // namespace lcwb
