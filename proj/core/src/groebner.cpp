#include "lcwb/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace lcwb {

PolyVec pv_zero(const RingPtr& ring, int m) { return PolyVec(m, Poly::zero(ring)); }

bool pv_is_zero(const PolyVec& v) {
  for (auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

PolyVec pv_add(const PolyVec& a, const PolyVec& b) {
  assert(a.size() == b.size());
  PolyVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

PolyVec pv_sub(const PolyVec& a, const PolyVec& b) {
  assert(a.size() == b.size());
  PolyVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

PolyVec pv_scale(const PolyVec& v, const Poly& a) {
  PolyVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * a;
  return r;
}

bool pv_equal(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

PolyMat pm_mul(const PolyMat& A, const PolyMat& B) {
  PolyMat C;
  C.reserve(B.size());
  for (auto& bcol : B) C.push_back(pm_apply(A, bcol));
  return C;
}

PolyVec pm_apply(const PolyMat& A, const PolyVec& x) {
  assert(A.size() == x.size());
  assert(!A.empty());
  PolyVec y = pv_zero(A[0][0].ring() ? A[0][0].ring() : x[0].ring(), static_cast<int>(A[0].size()));
  for (size_t j = 0; j < A.size(); ++j) {
    if (x[j].is_zero()) continue;
    for (size_t i = 0; i < A[j].size(); ++i) y[i] = y[i] + A[j][i] * x[j];
  }
  return y;
}

PolyMat pm_identity(const RingPtr& ring, int n) {
  PolyMat I(n, pv_zero(ring, n));
  for (int i = 0; i < n; ++i) I[i][i] = Poly::constant(ring, 1);
  return I;
}

bool pm_is_zero(const PolyMat& A) {
  for (auto& c : A)
    if (!pv_is_zero(c)) return false;
  return true;
}

std::optional<Multideg> column_multidegree(const PolyVec& col,
                                           const std::vector<Multideg>& row_degs) {
  std::optional<Multideg> deg;
  for (size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    auto d = col[i].multidegree();
    if (!d) return std::nullopt;  // entry not multihomogeneous
    Multideg total = mdeg_add(*d, row_degs[i]);
    if (!deg)
      deg = total;
    else if (*deg != total)
      return std::nullopt;
  }
  return deg;  // nullopt only possible for nonzero issues; zero column -> caller decides
}

namespace {

struct ModTerm {
  int comp;
  Monomial m;
  uint32_t c;
};

// POT order, lower component dominates; ties by the base monomial order.
struct ModOrder {
  MonomialOrder base;
  int cmp(const ModTerm& a, const ModTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return base.cmp(a.m, b.m);
  }
  bool greater(const ModTerm& a, const ModTerm& b) const { return cmp(a, b) > 0; }
};

using TVec = std::vector<ModTerm>;  // sorted descending by ModOrder

TVec to_tvec(const PolyVec& v, const ModOrder& ord) {
  TVec t;
  for (size_t i = 0; i < v.size(); ++i)
    for (auto& term : v[i].terms()) t.push_back({static_cast<int>(i), term.m, term.c});
  std::sort(t.begin(), t.end(), [&](const ModTerm& a, const ModTerm& b) { return ord.greater(a, b); });
  return t;
}

PolyVec from_tvec(const RingPtr& ring, int ncomp, const TVec& t) {
  std::vector<std::vector<Term>> per(ncomp);
  for (auto& mt : t) per[mt.comp].push_back({mt.m, mt.c});
  PolyVec v;
  v.reserve(ncomp);
  for (int i = 0; i < ncomp; ++i) v.push_back(Poly(ring, std::move(per[i])));
  return v;
}

// h -= c * x^m * g   (merge; both sorted)
TVec tvec_axpy(const PrimeField& F, const ModOrder& ord, const TVec& h, uint32_t c,
               const Monomial& m, const TVec& g) {
  TVec prod;
  prod.reserve(g.size());
  for (auto& t : g) prod.push_back({t.comp, t.m * m, F.mul(t.c, c)});
  // multiplying each term by a fixed monomial preserves relative order
  TVec r;
  r.reserve(h.size() + prod.size());
  size_t i = 0, j = 0;
  while (i < h.size() && j < prod.size()) {
    int cm = ord.cmp(h[i], prod[j]);
    if (cm > 0) {
      r.push_back(h[i++]);
    } else if (cm < 0) {
      r.push_back({prod[j].comp, prod[j].m, F.neg(prod[j].c)});
      ++j;
    } else {
      uint32_t s = F.sub(h[i].c, prod[j].c);
      if (s != 0) r.push_back({h[i].comp, h[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < h.size()) r.push_back(h[i++]);
  while (j < prod.size()) {
    r.push_back({prod[j].comp, prod[j].m, F.neg(prod[j].c)});
    ++j;
  }
  return r;
}

struct GBElem {
  TVec v;
  std::vector<Poly> rep;  // expression in the input generators (optional)
};

struct Pair {
  size_t i, j;
  Monomial lcm;
  int deg;
};

}  // namespace

struct ModuleGB::Impl {
  RingPtr ring;
  int ncomp;
  ModOrder ord;
  bool track;
  std::vector<PolyVec> input;
  std::vector<GBElem> G;
  std::vector<PolyVec> reduced;  // canonical output

  const PrimeField& F() const { return ring->field; }

  void make_monic(GBElem& g) {
    if (g.v.empty()) return;
    uint32_t lc = g.v.front().c;
    if (lc == 1) return;
    uint32_t inv = F().inv(lc);
    for (auto& t : g.v) t.c = F().mul(t.c, inv);
    if (track)
      for (auto& p : g.rep) p = p.scaled(inv);
  }

  // Full reduction of (v, rep) against G; leading-term reduction with tail
  // carried along, irreducible terms moved to the remainder.
  void reduce_full(TVec& v, std::vector<Poly>* rep) const {
    TVec rem;
    while (!v.empty()) {
      const ModTerm& lead = v.front();
      bool hit = false;
      for (auto& g : G) {
        if (g.v.empty()) continue;
        const ModTerm& gl = g.v.front();
        if (gl.comp != lead.comp || !gl.m.divides(lead.m)) continue;
        Monomial q = gl.m.quotient_into(lead.m);
        uint32_t c = lead.c;  // g monic
        v = tvec_axpy(F(), ord, v, c, q, g.v);
        if (rep && track) {
          Poly qp = Poly::monomial(ring, q, c);
          for (size_t k = 0; k < rep->size(); ++k) (*rep)[k] = (*rep)[k] + qp * g.rep[k];
        }
        hit = true;
        break;
      }
      if (!hit) {
        rem.push_back(v.front());
        v.erase(v.begin());
      }
    }
    v = std::move(rem);
  }

  void update_pairs(std::vector<Pair>& pairs, size_t new_idx) {
    const GBElem& h = G[new_idx];
    const ModTerm& lh = h.v.front();
    // discard old pairs via the chain criterion
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& pr : pairs) {
      const ModTerm& li = G[pr.i].v.front();
      if (li.comp == lh.comp && lh.m.divides(pr.lcm)) {
        Monomial lih = li.m.lcm(lh.m);
        Monomial ljh = G[pr.j].v.front().m.lcm(lh.m);
        if (lih != pr.lcm && ljh != pr.lcm) continue;
      }
      kept.push_back(pr);
    }
    pairs = std::move(kept);

    // candidate pairs with the new element, same-component leads only
    std::vector<Pair> fresh;
    for (size_t k = 0; k < new_idx; ++k) {
      if (G[k].v.empty()) continue;
      const ModTerm& lk = G[k].v.front();
      if (lk.comp != lh.comp) continue;
      Monomial l = lk.m.lcm(lh.m);
      fresh.push_back({k, new_idx, l, l.deg()});
    }
    std::sort(fresh.begin(), fresh.end(), [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
    std::vector<Pair> minimal;
    for (auto& pr : fresh) {
      bool redundant = false;
      for (auto& mp : minimal)
        if (mp.lcm.divides(pr.lcm)) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(pr);
    }
    for (auto& pr : minimal) {
      // product criterion is only valid in the ring case
      if (ncomp == 1 && G[pr.i].v.front().m.coprime(G[pr.j].v.front().m)) continue;
      pairs.push_back(pr);
    }
  }

  void buchberger() {
    std::vector<GBElem> init;
    for (size_t i = 0; i < input.size(); ++i) {
      GBElem e;
      e.v = to_tvec(input[i], ord);
      if (track) {
        e.rep.assign(input.size(), Poly::zero(ring));
        e.rep[i] = Poly::constant(ring, 1);
      }
      if (e.v.empty()) continue;
      make_monic(e);
      init.push_back(std::move(e));
    }
    std::vector<Pair> pairs;
    for (auto& e : init) {
      G.push_back(std::move(e));
      update_pairs(pairs, G.size() - 1);
    }
    while (!pairs.empty()) {
      auto it = std::min_element(pairs.begin(), pairs.end(),
                                 [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
      Pair pr = *it;
      pairs.erase(it);
      const GBElem& f = G[pr.i];
      const GBElem& g = G[pr.j];
      Monomial mf = f.v.front().m.quotient_into(pr.lcm);
      Monomial mg = g.v.front().m.quotient_into(pr.lcm);
      GBElem s;
      s.v = tvec_axpy(F(), ord, TVec{}, F().neg(1 % F().modulus()), mf, f.v);  // +mf*f
      s.v = tvec_axpy(F(), ord, s.v, 1, mg, g.v);                              // -mg*g
      if (track) {
        s.rep.assign(input.size(), Poly::zero(ring));
        Poly pf = Poly::monomial(ring, mf, 1);
        Poly pg = Poly::monomial(ring, mg, 1);
        for (size_t k = 0; k < input.size(); ++k) s.rep[k] = pf * f.rep[k] - pg * g.rep[k];
      }
      std::vector<Poly> negrep;
      if (track) negrep.assign(input.size(), Poly::zero(ring));
      reduce_full(s.v, track ? &negrep : nullptr);
      if (track)
        for (size_t k = 0; k < input.size(); ++k) s.rep[k] = s.rep[k] - negrep[k];
      if (!s.v.empty()) {
        make_monic(s);
        G.push_back(std::move(s));
        update_pairs(pairs, G.size() - 1);
      }
    }
    interreduce();
    reduced.clear();
    for (auto& g : G) reduced.push_back(from_tvec(ring, ncomp, g.v));
  }

  void interreduce() {
    // drop elements whose lead is divisible by another lead
    for (size_t i = 0; i < G.size();) {
      bool redundant = false;
      for (size_t j = 0; j < G.size(); ++j) {
        if (i == j || G[j].v.empty()) continue;
        const ModTerm& li = G[i].v.front();
        const ModTerm& lj = G[j].v.front();
        if (li.comp == lj.comp && lj.m.divides(li.m) && !(i < j && li.m == lj.m)) {
          redundant = true;
          break;
        }
      }
      if (redundant)
        G.erase(G.begin() + static_cast<long>(i));
      else
        ++i;
    }
    // full tail reduction against the others
    for (size_t i = 0; i < G.size(); ++i) {
      GBElem current = std::move(G[i]);
      G[i].v.clear();  // keep placeholder so reduce_full skips it
      std::vector<Poly> negrep;
      if (track) negrep.assign(input.size(), Poly::zero(ring));
      reduce_full(current.v, track ? &negrep : nullptr);
      if (track)
        for (size_t k = 0; k < input.size(); ++k)
          current.rep[k] = current.rep[k] - negrep[k];
      make_monic(current);
      G[i] = std::move(current);
    }
    // deterministic order: sort by leading term, descending
    std::sort(G.begin(), G.end(), [&](const GBElem& a, const GBElem& b) {
      if (a.v.empty() || b.v.empty()) return b.v.empty() && !a.v.empty();
      return ord.greater(a.v.front(), b.v.front());
    });
    while (!G.empty() && G.back().v.empty()) G.pop_back();
  }
};

ModuleGB::ModuleGB(RingPtr ring, int ncomp, std::vector<PolyVec> gens, MonomialOrder order,
                   bool track_cofactors)
    : ring_(std::move(ring)), ncomp_(ncomp), impl_(std::make_unique<Impl>()) {
  impl_->ring = ring_;
  impl_->ncomp = ncomp;
  impl_->ord = ModOrder{order};
  impl_->track = track_cofactors;
  impl_->input = std::move(gens);
  impl_->buchberger();
}

ModuleGB::~ModuleGB() = default;
ModuleGB::ModuleGB(ModuleGB&&) noexcept = default;
ModuleGB& ModuleGB::operator=(ModuleGB&&) noexcept = default;

const std::vector<PolyVec>& ModuleGB::basis() const { return impl_->reduced; }

PolyVec ModuleGB::normal_form(const PolyVec& v) const {
  TVec t = to_tvec(v, impl_->ord);
  impl_->reduce_full(t, nullptr);
  return from_tvec(ring_, ncomp_, t);
}

bool ModuleGB::contains(const PolyVec& v) const {
  TVec t = to_tvec(v, impl_->ord);
  impl_->reduce_full(t, nullptr);
  return t.empty();
}

PolyVec ModuleGB::normal_form_cofactors(const PolyVec& v, std::vector<Poly>& cof) const {
  assert(impl_->track);
  TVec t = to_tvec(v, impl_->ord);
  std::vector<Poly> acc(impl_->input.size(), Poly::zero(ring_));
  impl_->reduce_full(t, &acc);
  cof = std::move(acc);  // v = rem + sum cof_i * input_i
  return from_tvec(ring_, ncomp_, t);
}

Poly ModuleGB::normal_form_poly(const Poly& f) const {
  assert(ncomp_ == 1);
  return normal_form(PolyVec{f})[0];
}

bool ModuleGB::contains_poly(const Poly& f) const {
  assert(ncomp_ == 1);
  return contains(PolyVec{f});
}

std::vector<PolyVec> syzygies(const RingPtr& ring, int m, const std::vector<PolyVec>& cols,
                              MonomialOrder order) {
  int s = static_cast<int>(cols.size());
  std::vector<PolyVec> ext;
  ext.reserve(cols.size());
  for (int i = 0; i < s; ++i) {
    PolyVec v = pv_zero(ring, m + s);
    for (int r = 0; r < m; ++r) v[r] = cols[i][r];
    v[m + i] = Poly::constant(ring, 1);
    ext.push_back(std::move(v));
  }
  ModuleGB gb(ring, m + s, std::move(ext), order);
  std::vector<PolyVec> syz;
  for (auto& b : gb.basis()) {
    bool main_zero = true;
    for (int r = 0; r < m; ++r)
      if (!b[r].is_zero()) {
        main_zero = false;
        break;
      }
    if (!main_zero) continue;
    PolyVec tail(b.begin() + m, b.end());
    syz.push_back(std::move(tail));
  }
  return syz;
}

bool lift_through(const RingPtr& ring, int m, const std::vector<PolyVec>& cols, const PolyVec& v,
                  std::vector<Poly>& cof) {
  ModuleGB gb(ring, m, cols, MonomialOrder::degrevlex(), /*track=*/true);
  std::vector<Poly> c;
  PolyVec rem = gb.normal_form_cofactors(v, c);
  if (!pv_is_zero(rem)) return false;
  cof = std::move(c);
  return true;
}

}  // namespace lcwb
