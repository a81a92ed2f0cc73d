#include "lcwb/primes.hpp"

#include <algorithm>

#include "lcwb/error.hpp"

namespace lcwb {

bool w_membership(const Ideal& I, const Ideal& J, const Ideal& p) {
  if (!validated_prime(p))
    throw Error(ErrorCode::NotPrime, "ideal failed the primality validation: " + p.str());
  Ideal pJ = ideal_sum(p, J);
  for (auto& g : I.gens())
    if (!radical_membership(g, pJ)) return false;
  return true;
}

std::vector<Ideal> monomial_primes_on(const RingPtr& ring, const std::vector<int>& vars) {
  std::vector<Ideal> out;
  int k = static_cast<int>(vars.size());
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> sel;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) sel.push_back(vars[i]);
    out.push_back(monomial_prime(ring, sel));
  }
  return out;
}

std::vector<PolyVec> candidate_elements(const ModuleObject& M, int degree_bound) {
  const RingPtr& ring = M.ring();
  int n = ring->nvars;
  // monomials of total degree <= degree_bound, deterministic order
  std::vector<Monomial> monos;
  Monomial cur(n);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == n) {
      monos.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur.at(var) = e;
      rec(var + 1, remaining - e);
    }
    cur.at(var) = 0;
  };
  rec(0, degree_bound);
  std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a.exps() < b.exps();
  });

  std::vector<PolyVec> out;
  std::vector<PolyVec> seen;
  for (int i = 0; i < M.ngens(); ++i) {
    for (auto& m : monos) {
      PolyVec v = pv_zero(ring, M.ngens());
      v[i] = Poly::monomial(ring, m, 1);
      PolyVec nf = M.nf(v);
      if (pv_is_zero(nf)) continue;
      bool dup = false;
      for (auto& s : seen)
        if (pv_equal(s, nf)) {
          dup = true;
          break;
        }
      if (dup) continue;
      seen.push_back(nf);
      out.push_back(std::move(v));
    }
  }
  return out;
}

SubobjectHandle cyclic_subobject(ModulePtr M, const PolyVec& v) {
  PolyMat cols;
  if (M->has_algebra()) {
    for (auto& act : M->action()) {
      PolyVec img = pm_apply(act, v);
      if (!M->is_zero_in_module(img)) cols.push_back(std::move(img));
    }
    if (cols.empty()) cols.push_back(v);
  } else {
    cols.push_back(v);
  }
  return {std::move(M), std::move(cols)};
}

ElementaryWitness find_elementary_subobject(ModulePtr M, int degree_bound) {
  if (M->is_zero_module()) throw Error(ErrorCode::ZeroModule, "zero module has no elementary subobject");
  auto candidates = candidate_elements(*M, degree_bound);
  if (candidates.empty())
    throw Error(ErrorCode::SearchExhausted, "no nonzero cyclic subobjects within the degree bound");

  struct Cand {
    PolyVec v;
    SubobjectHandle sub;
    Ideal ann;
  };
  std::vector<Cand> cands;
  for (auto& v : candidates) {
    SubobjectHandle sub = cyclic_subobject(M, v);
    Ideal ann = annihilator(sub);
    if (ann.is_unit()) continue;  // zero subobject
    cands.push_back({v, std::move(sub), std::move(ann)});
  }
  if (cands.empty())
    throw Error(ErrorCode::SearchExhausted, "all candidates were zero within the degree bound");

  // inclusion-maximal annihilator among the searched candidates
  int best = 0;
  for (size_t i = 1; i < cands.size(); ++i) {
    if (cands[i].ann.contains_ideal(cands[best].ann) &&
        !cands[best].ann.contains_ideal(cands[i].ann))
      best = static_cast<int>(i);
  }
  // a second sweep so the result does not depend on the scan order
  for (size_t i = 0; i < cands.size(); ++i) {
    if (cands[i].ann.contains_ideal(cands[best].ann) &&
        !cands[best].ann.contains_ideal(cands[i].ann))
      best = static_cast<int>(i);
  }

  ElementaryWitness w;
  w.subobject = cands[best].sub;
  w.prime = cands[best].ann;
  w.degree_bound = degree_bound;

  // certification: monomial prime + all sampled cyclic subobjects of the
  // witness share the annihilator
  bool monom_prime = w.prime.is_monomial_prime();
  bool stable = true;
  int sampled = 0;
  if (monom_prime) {
    ModuleObject sub = subobject_module(w.subobject);
    auto sub_elems = candidate_elements(sub, std::min(degree_bound, 3));
    for (auto& se : sub_elems) {
      // map into ambient coordinates
      PolyVec amb = pv_zero(M->ring(), M->ngens());
      for (size_t j = 0; j < w.subobject.inclusion.size(); ++j)
        amb = pv_add(amb, pv_scale(w.subobject.inclusion[j], se[j]));
      if (M->is_zero_in_module(amb)) continue;
      SubobjectHandle c = cyclic_subobject(M, amb);
      ++sampled;
      if (!annihilator(c).equals(w.prime)) {
        stable = false;
        break;
      }
    }
  }
  w.sampled_subobjects = sampled;
  w.certified = monom_prime && stable;
  if (!w.certified && !monom_prime) {
    // keep the witness; callers treat non-monomial annihilators as heuristic
  }
  return w;
}

PrimeFiltration prime_filtration(ModulePtr M, int degree_bound) {
  PrimeFiltration filt;
  filt.certified = true;
  SubobjectHandle cur = zero_subobject(M);
  for (int step = 0; step < 128; ++step) {
    ModuleObject Q = quotient_object(*M, cur);
    if (Q.is_zero_module()) return filt;  // chain already ends at M
    ElementaryWitness w = find_elementary_subobject(Q.shared(), degree_bound);
    filt.certified = filt.certified && w.certified;
    filt.quotient_primes.push_back(w.prime);
    SubobjectHandle next{M, w.subobject.inclusion};
    for (auto& c : cur.inclusion) next.inclusion.push_back(c);
    filt.chain.push_back(next);
    cur = std::move(next);
  }
  throw Error(ErrorCode::SearchExhausted, "prime filtration did not terminate within the step cap");
}

AssResult associated_primes(ModulePtr M, int degree_bound) {
  AssResult res;
  if (M->is_zero_module()) {
    res.certified = true;
    return res;
  }
  PrimeFiltration filt = prime_filtration(M, degree_bound);
  res.certified = filt.certified;
  for (auto& p : filt.quotient_primes) {
    bool dup = false;
    for (auto& q : res.superset)
      if (q.equals(p)) {
        dup = true;
        break;
      }
    if (!dup) res.superset.push_back(p);
  }
  // verify membership: p in Ass(M) iff Ann(Hom(R/p, M)) = p
  for (auto& p : res.superset) {
    SubobjectHandle K = ideal_kernel_subobject(M, p);
    if (K.is_zero()) continue;
    Ideal annK = annihilator(K);
    if (annK.equals(p)) res.primes.push_back(p);
  }
  return res;
}

Ideal support_annihilator(const ModuleObject& M) { return annihilator(M); }

bool in_support(const ModuleObject& M, const Ideal& p) {
  Ideal ann = annihilator(M);
  for (auto& g : ann.gens())
    if (!p.contains(g)) return false;
  return true;
}

std::vector<Ideal> minimal_support_primes(const ModuleObject& M) {
  Ideal ann = annihilator(M);
  if (!ann.is_monomial())
    throw Error(ErrorCode::AssIncomplete,
                "minimal support primes computed only for monomial annihilators");
  return monomial_minimal_primes(ann);
}

GammaResult gamma_torsion(ModulePtr M, const Ideal& I, const Ideal& J, int degree_bound) {
  GammaResult out;
  out.ass = associated_primes(M, degree_bound);
  if (!out.ass.certified)
    throw Error(ErrorCode::AssIncomplete, "associated primes carry a heuristic flag");
  bool any = false;
  Ideal K;
  for (auto& p : out.ass.primes) {
    if (!w_membership(I, J, p)) continue;
    K = any ? ideal_intersection(K, p) : p;
    any = true;
  }
  if (!any) K = Ideal::unit(M->ring());
  out.K = K;
  out.torsion = ideal_power_torsion(M, K);
  return out;
}

TorsionTheoryReport torsion_theory_check(ModulePtr M, const Ideal& I, const Ideal& J,
                                         int degree_bound) {
  TorsionTheoryReport rep;
  GammaResult g = gamma_torsion(M, I, J, degree_bound);
  ModuleObject Q = quotient_object(*M, g.torsion);
  auto Qp = Q.shared();
  GammaResult gq = gamma_torsion(Qp, I, J, degree_bound);
  rep.quotient_torsion_free = gq.torsion.is_zero();

  // hereditary: Gamma of a sampled subobject equals its intersection with
  // Gamma(M)
  rep.hereditary_ok = true;
  auto elems = candidate_elements(*M, std::min(degree_bound, 3));
  int checked = 0;
  for (auto& v : elems) {
    if (checked >= 5) break;
    SubobjectHandle N = cyclic_subobject(M, v);
    ModuleObject Nmod = subobject_module(N);
    auto Nptr = Nmod.shared();
    GammaResult gn = gamma_torsion(Nptr, I, J, degree_bound);
    // map Gamma(N) into ambient coordinates
    PolyMat cols;
    for (auto& c : gn.torsion.inclusion) {
      PolyVec amb = pv_zero(M->ring(), M->ngens());
      for (size_t j = 0; j < N.inclusion.size(); ++j)
        amb = pv_add(amb, pv_scale(N.inclusion[j], c[j]));
      cols.push_back(std::move(amb));
    }
    SubobjectHandle mapped{M, std::move(cols)};
    SubobjectHandle expect = subobject_intersection(N, g.torsion);
    if (!subobject_equal(mapped, expect)) rep.hereditary_ok = false;
    ++checked;
  }
  rep.subobjects_checked = checked;
  return rep;
}

GammaPrimeReport gamma_prime_equivalence(ModulePtr M, const Ideal& I, const Ideal& J,
                                         int nsamples, int cap) {
  GammaPrimeReport rep;
  rep.cap = cap;
  auto elems = candidate_elements(*M, 3);
  int used = 0;
  for (auto& v : elems) {
    if (used >= nsamples) break;
    ++used;
    SubobjectHandle N = cyclic_subobject(M, v);
    GammaPrimeSample s;
    // radical side: I <= rad(Ann N + J)
    Ideal annN = annihilator(N);
    s.radical_side = ideal_in_radical(I, ideal_sum(annN, J));
    // power side: I^n N <= J N for some n <= cap
    SubobjectHandle JN = ideal_times_subobject(J, N);
    PolyMat target = JN.inclusion;
    target.insert(target.end(), M->relations().begin(), M->relations().end());
    ModuleGB span(M->ring(), M->ngens(), target);
    SubobjectHandle cur = N;
    s.power_side = false;
    if (I.gens().empty()) {
      s.power_side = true;  // I = 0: I^n N = 0 <= JN
      s.witness_n = 1;
    } else {
      for (int n = 1; n <= cap; ++n) {
        cur = ideal_times_subobject(I, cur);
        bool inside = true;
        for (auto& c : cur.inclusion)
          if (!span.contains(c)) {
            inside = false;
            break;
          }
        if (inside) {
          s.power_side = true;
          s.witness_n = n;
          break;
        }
      }
      if (!s.power_side && s.radical_side) s.cap_exceeded = true;
    }
    if (!s.cap_exceeded && s.power_side != s.radical_side) rep.all_agree = false;
    rep.samples.push_back(s);
  }
  return rep;
}

NzdResult nonzerodivisor_in_ideal(const Ideal& I, ModulePtr M, int degree_bound) {
  NzdResult res;
  AssResult ass = associated_primes(M, degree_bound);
  if (!ass.certified)
    throw Error(ErrorCode::AssIncomplete, "associated primes carry a heuristic flag");
  for (auto& p : ass.primes) {
    if (p.contains_ideal(I)) {
      res.found = false;
      res.covering_prime = p;
      return res;
    }
  }
  auto avoids_all = [&](const Poly& a) {
    for (auto& p : ass.primes)
      if (p.contains(a)) return false;
    return true;
  };
  Poly pick;
  bool got = false;
  for (auto& g : I.gens())
    if (avoids_all(g)) {
      pick = g;
      got = true;
      break;
    }
  if (!got) {
    // generic combinations with incrementing coefficients
    const auto& gens = I.gens();
    for (uint32_t c = 1; c <= 32 && !got; ++c) {
      for (size_t i = 0; i < gens.size() && !got; ++i)
        for (size_t j = i + 1; j < gens.size() && !got; ++j) {
          Poly cand = gens[i] + gens[j].scaled(c);
          if (avoids_all(cand)) {
            pick = cand;
            got = true;
          }
        }
    }
  }
  if (!got)
    throw Error(ErrorCode::SearchExhausted, "prime avoidance search failed to produce an element");
  res.found = true;
  res.element = pick;
  auto [ker, img] = kernel_and_image_of_scalar(M, pick);
  res.kernel_verified = ker.is_zero();
  return res;
}

}  // namespace lcwb
