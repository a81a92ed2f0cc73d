#include "lcwb/hulls.hpp"

#include <algorithm>
#include <cassert>

#include "lcwb/error.hpp"
#include "lcwb/primes.hpp"

namespace lcwb {

namespace {

std::vector<int> complement_vars(int n, const std::vector<int>& vars) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) out.push_back(v);
  return out;
}

}  // namespace

InjectiveModel InjectiveModel::hull_of_prime(const RingPtr& ring, const Ideal& p) {
  return hull_of_prime(ring, p, Multideg(ring->nvars, 0));
}

InjectiveModel InjectiveModel::hull_of_prime(const RingPtr& ring, const Ideal& p,
                                             const Multideg& shift) {
  InjectiveModel E;
  E.ring_ = ring;
  HullSummand s;
  s.shift = shift;
  if (p.is_zero()) {
    if (ring->nvars != 1)
      throw Error(ErrorCode::UnsupportedPrime,
                  "rational function field model is catalogued for n = 1 only");
    s.coef_vars = {0};
  } else {
    if (!p.is_monomial_prime())
      throw Error(ErrorCode::UnsupportedPrime, "hull models exist for monomial primes only");
    s.inv_vars = p.variable_support();
    s.coef_vars = complement_vars(ring->nvars, s.inv_vars);
    if (!s.coef_vars.empty() && ring->nvars > 2)
      throw Error(ErrorCode::UnsupportedPrime,
                  "non-maximal monomial primes are catalogued for n <= 2 only");
  }
  E.summands_.push_back(std::move(s));
  return E;
}

InjectiveModel InjectiveModel::direct_sum(const InjectiveModel& a, const InjectiveModel& b) {
  InjectiveModel E;
  E.ring_ = a.ring_ ? a.ring_ : b.ring_;
  E.summands_ = a.summands_;
  E.summands_.insert(E.summands_.end(), b.summands_.begin(), b.summands_.end());
  return E;
}

void InjectiveModel::set_action(AlgebraSpec spec, std::vector<Mat<PrimeField>> matrices) {
  spec.validate(ring_->field);
  int m = static_cast<int>(summands_.size());
  if (static_cast<int>(matrices.size()) != spec.dim)
    throw Error(ErrorCode::TypeMismatch, "action matrix count does not match algebra dimension");
  for (auto& mat : matrices) {
    if (mat.rows != m || mat.cols != m)
      throw Error(ErrorCode::TypeMismatch, "action matrix has wrong shape");
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (ring_->field.is_zero(mat.at(i, j))) continue;
        if (summands_[i].inv_vars != summands_[j].inv_vars ||
            summands_[i].shift != summands_[j].shift)
          throw Error(ErrorCode::TypeMismatch,
                      "action may only mix summands with equal prime and shift");
      }
  }
  algebra_ = std::move(spec);
  action_ = std::move(matrices);
}

bool InjectiveModel::uniform_class() const {
  for (size_t i = 1; i < summands_.size(); ++i)
    if (summands_[i].inv_vars != summands_[0].inv_vars) return false;
  return !summands_.empty();
}

Ideal InjectiveModel::class_prime() const {
  assert(uniform_class());
  return monomial_prime(ring_, summands_[0].inv_vars);
}

std::vector<int> InjectiveModel::lattice_vars() const {
  assert(uniform_class());
  return summands_[0].inv_vars;
}

int InjectiveModel::piece_dim(const Multideg& a) const {
  assert(uniform_class());
  int dim = 0;
  for (auto& s : summands_) {
    bool ok = true;
    for (int v : s.inv_vars)
      if (a[v] > s.shift[v]) {
        ok = false;
        break;
      }
    if (ok) ++dim;
  }
  return dim;
}

Ideal InjectiveModel::element_annihilator(int s, const Multideg& a) const {
  const HullSummand& h = summands_[s];
  std::vector<Poly> gens;
  for (int v : h.inv_vars) {
    int e = h.shift[v] - a[v] + 1;
    assert(e >= 1);
    gens.push_back(Poly::monomial(ring_, Monomial::var(ring_->nvars, v, e), 1));
  }
  return Ideal(ring_, std::move(gens));
}

std::vector<Multideg> InjectiveModel::test_degrees(int radius) const {
  assert(uniform_class());
  const auto& S = summands_[0].inv_vars;
  int n = ring_->nvars;
  if (S.empty()) return {Multideg(n, 0)};
  Multideg lo(n, 0), hi(n, 0);
  for (int v : S) {
    int mn = summands_[0].shift[v], mx = summands_[0].shift[v];
    for (auto& s : summands_) {
      mn = std::min(mn, s.shift[v]);
      mx = std::max(mx, s.shift[v]);
    }
    lo[v] = mn - radius;
    hi[v] = mx;
  }
  // iterate the S-coordinates only
  std::vector<Multideg> out;
  Multideg cur = lo;
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(S.size()) - 1;
    while (i >= 0) {
      int v = S[i];
      if (cur[v] < hi[v]) {
        ++cur[v];
        for (size_t j = i + 1; j < S.size(); ++j) cur[S[j]] = lo[S[j]];
        break;
      }
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

const char* hull_branch_name(HullBranch b) {
  switch (b) {
    case HullBranch::Zero: return "Zero";
    case HullBranch::Identity: return "Identity";
    case HullBranch::HomVE: return "HomVE";
  }
  return "?";
}

// ----- torsion and localization dichotomies -----

HullValueReport gamma_on_hull(const InjectiveModel& E, const Ideal& K, const Ideal& J,
                              int radius, int cap) {
  HullValueReport rep;
  rep.functor = "gamma";
  bool in_w = w_membership(K, J, E.class_prime());
  rep.predicted = in_w ? HullBranch::Identity : HullBranch::Zero;
  for (auto& d : E.test_degrees(radius)) {
    for (int s = 0; s < static_cast<int>(E.summands().size()); ++s) {
      // skip degrees outside this summand's support
      bool live = true;
      for (int v : E.summands()[s].inv_vars)
        if (d[v] > E.summands()[s].shift[v]) {
          live = false;
          break;
        }
      if (!live) continue;
      ++rep.degrees_tested;
      Ideal ann = E.element_annihilator(s, d);
      Ideal annJ = ideal_sum(ann, J);
      bool torsion = ideal_in_radical(K, annJ);
      if (torsion != in_w) rep.agreement = false;
      if (torsion) {
        // witness exponent
        bool found = false;
        Ideal Kn = K;
        for (int n = 1; n <= cap && !found; ++n) {
          if (n > 1) Kn = ideal_product(Kn, K);
          found = annJ.contains_ideal(Kn);
        }
        if (!found) {
          ++rep.cap_exceeded;
          rep.notes.push_back("cap exceeded at a torsion element");
        }
      }
    }
  }
  return rep;
}

HullValueReport localize_hull(const InjectiveModel& E, const Monomial& f, int radius) {
  HullValueReport rep;
  rep.functor = "localize";
  const std::vector<int> lattice = E.lattice_vars();
  bool kills = false;
  for (int v : f.support())
    if (std::find(lattice.begin(), lattice.end(), v) != lattice.end()) kills = true;
  rep.predicted = kills ? HullBranch::Zero : HullBranch::Identity;
  for (auto& d : E.test_degrees(radius)) {
    for (int s = 0; s < static_cast<int>(E.summands().size()); ++s) {
      const HullSummand& h = E.summands()[s];
      bool live = true;
      for (int v : h.inv_vars)
        if (d[v] > h.shift[v]) {
          live = false;
          break;
        }
      if (!live) continue;
      ++rep.degrees_tested;
      // smallest t with f^t * (element at d) = 0, through the action rules
      bool dies = false;
      for (int v : f.support()) {
        if (std::find(h.inv_vars.begin(), h.inv_vars.end(), v) != h.inv_vars.end()) {
          dies = true;  // the v-coordinate strictly climbs to the shift bound
          break;
        }
      }
      if (dies != kills) rep.agreement = false;
    }
  }
  return rep;
}

HullValueReport localize_hull_at_prime_complement(const InjectiveModel& E, const Ideal& q,
                                                  int radius) {
  if (!q.is_monomial_prime())
    throw Error(ErrorCode::UnsupportedLocalization,
                "prime-complement localization needs a monomial prime");
  auto qv = q.variable_support();
  Monomial f(E.ring()->nvars);
  for (int v = 0; v < E.ring()->nvars; ++v)
    if (std::find(qv.begin(), qv.end(), v) == qv.end()) f.at(v) = 1;
  if (f.is_one()) {
    // q is the maximal ideal: nothing inverted, the localization is E itself
    HullValueReport rep;
    rep.functor = "localize";
    rep.predicted = HullBranch::Identity;
    rep.degrees_tested = static_cast<int>(E.test_degrees(radius).size());
    return rep;
  }
  HullValueReport rep = localize_hull(E, f, radius);
  rep.functor = "localize-at-prime-complement";
  return rep;
}

DecompositionReport decomposition_check(const InjectiveModel& E, int radius) {
  DecompositionReport rep;
  // detect socle elements: degrees where the closed-form annihilator is the
  // summand's monomial prime (exactly the socle corner)
  for (int s = 0; s < static_cast<int>(E.summands().size()); ++s) {
    const HullSummand& h = E.summands()[s];
    Ideal prime = monomial_prime(E.ring(), h.inv_vars);
    // scan the summand's own window
    int n = E.ring()->nvars;
    std::vector<Multideg> degs;
    if (h.inv_vars.empty()) {
      degs = {Multideg(n, 0)};
    } else {
      Multideg cur(n, 0);
      for (int v : h.inv_vars) cur[v] = h.shift[v] - radius;
      while (true) {
        degs.push_back(cur);
        int i = static_cast<int>(h.inv_vars.size()) - 1;
        while (i >= 0) {
          int v = h.inv_vars[i];
          if (cur[v] < h.shift[v]) {
            ++cur[v];
            for (size_t j = i + 1; j < h.inv_vars.size(); ++j)
              cur[h.inv_vars[j]] = h.shift[h.inv_vars[j]] - radius;
            break;
          }
          --i;
        }
        if (i < 0) break;
      }
    }
    int socle_hits = 0;
    Multideg socle_deg(n, 0);
    for (auto& d : degs) {
      Ideal ann = E.element_annihilator(s, d);
      if (ann.equals(prime)) {
        ++socle_hits;
        socle_deg = d;
      }
    }
    if (socle_hits != 1 && !h.inv_vars.empty()) continue;  // detection failure
    DecompositionReport::Item item;
    item.prime = prime;
    item.socle_degree = h.inv_vars.empty() ? Multideg(n, 0) : socle_deg;
    item.multiplicity = 1;
    // merge with an existing detected class
    bool merged = false;
    for (auto& it : rep.detected)
      if (it.prime.equals(item.prime) && it.socle_degree == item.socle_degree) {
        ++it.multiplicity;
        merged = true;
        break;
      }
    if (!merged) rep.detected.push_back(std::move(item));
  }
  int total = 0;
  for (auto& it : rep.detected) total += it.multiplicity;
  rep.matches_construction = (total == static_cast<int>(E.summands().size()));
  return rep;
}

// ----- Hom(V, E) degreewise over the coefficient field -----

namespace {

template <class Field>
struct FieldOps;

template <>
struct FieldOps<PrimeField> {
  static PrimeField make(const RingPtr& ring) { return ring->field; }
  static typename PrimeField::Elem scalar(const PrimeField& F, uint32_t c, int tpow) {
    assert(tpow == 0);
    (void)tpow;
    return c % F.modulus();
  }
};

template <>
struct FieldOps<RatFuncField> {
  static RatFuncField make(const RingPtr& ring) { return RatFuncField(ring->field.modulus()); }
  static typename RatFuncField::Elem scalar(const RatFuncField& F, uint32_t c, int tpow) {
    return F.make(UniPoly::t_power(tpow, c % F.base().modulus()), UniPoly::constant(1));
  }
};

struct Slot {
  int gen;
  int summand;
};

// admissibility of an element of summand s in degree a
bool summand_admissible(const HullSummand& h, const Multideg& a) {
  for (int v : h.inv_vars)
    if (a[v] > h.shift[v]) return false;
  return true;
}

template <class Field>
struct HomPiece {
  Field F;
  std::vector<Slot> slots;                  // unknowns: (V-generator, summand)
  Mat<Field> basis;                         // kernel basis, rows = slots
  int dim = 0;

  HomPiece() : F(32003) {}
  explicit HomPiece(Field f) : F(std::move(f)) {}
};

template <class Field>
HomPiece<Field> hom_piece(const InjectiveModel& E, const ModuleObject& V, const Multideg& d) {
  Field F = FieldOps<Field>::make(E.ring());
  HomPiece<Field> piece(F);
  if (!V.graded())
    throw Error(ErrorCode::NonHomogeneousInput, "hull hom pieces need a graded module");
  const auto& gdegs = *V.gen_degs();
  int nsum = static_cast<int>(E.summands().size());

  std::vector<std::vector<int>> slot_of(V.ngens(), std::vector<int>(nsum, -1));
  for (int j = 0; j < V.ngens(); ++j)
    for (int s = 0; s < nsum; ++s) {
      Multideg src = mdeg_add(d, gdegs[j]);
      if (summand_admissible(E.summands()[s], src)) {
        slot_of[j][s] = static_cast<int>(piece.slots.size());
        piece.slots.push_back({j, s});
      }
    }

  // constraint rows: (relation column, summand) with admissible target
  std::vector<std::vector<typename Field::Elem>> rows;
  for (auto& rel : V.relations()) {
    auto cdeg = column_multidegree(rel, gdegs);
    if (!cdeg) throw Error(ErrorCode::NonHomogeneousInput, "relation is not multihomogeneous");
    for (int s = 0; s < nsum; ++s) {
      Multideg tgt = mdeg_add(d, *cdeg);
      if (!summand_admissible(E.summands()[s], tgt)) continue;
      std::vector<typename Field::Elem> row(piece.slots.size(), F.zero());
      bool nonzero = false;
      for (int j = 0; j < V.ngens(); ++j) {
        const Poly& entry = rel[j];
        if (entry.is_zero()) continue;
        int slot = slot_of[j][s];
        if (slot < 0) continue;  // source element is zero in the summand
        assert(entry.is_term());
        const Monomial& alpha = entry.leading().m;
        // contribution survives iff the source stays admissible after the
        // S-shift, which is exactly target admissibility (already checked)
        int tpow = 0;
        for (int v : E.summands()[s].coef_vars) tpow += alpha[v];
        auto c = FieldOps<Field>::scalar(F, entry.leading().c, tpow);
        row[slot] = F.add(row[slot], c);
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  Mat<Field> A(static_cast<int>(rows.size()), static_cast<int>(piece.slots.size()), F);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) A.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  piece.basis = mat_kernel(F, A);
  piece.dim = piece.basis.cols;
  return piece;
}

template <class Field>
HullHomMapInfo hom_map_impl(const InjectiveModel& E, const ModuleObject& V,
                            const ModuleObject& W, const PolyMat& w_to_v, const Multideg& d) {
  Field F = FieldOps<Field>::make(E.ring());
  HomPiece<Field> src = hom_piece<Field>(E, V, d);
  HomPiece<Field> tgt = hom_piece<Field>(E, W, d);
  HullHomMapInfo info;
  info.dim_src = src.dim;
  info.dim_tgt = tgt.dim;
  if (src.dim == 0 || tgt.dim == 0) {
    info.rank = 0;
    return info;
  }
  const auto& wdegs = *W.gen_degs();
  int nsum = static_cast<int>(E.summands().size());
  // slot lookup for the target piece coordinates (by (wgen, summand))
  std::vector<std::vector<int>> tgt_slot(W.ngens(), std::vector<int>(nsum, -1));
  for (size_t k = 0; k < tgt.slots.size(); ++k)
    tgt_slot[tgt.slots[k].gen][tgt.slots[k].summand] = static_cast<int>(k);
  std::vector<std::vector<int>> src_slot(V.ngens(), std::vector<int>(nsum, -1));
  for (size_t k = 0; k < src.slots.size(); ++k)
    src_slot[src.slots[k].gen][src.slots[k].summand] = static_cast<int>(k);

  Mat<Field> images(static_cast<int>(tgt.slots.size()), src.dim, F);
  for (int b = 0; b < src.dim; ++b) {
    for (int k = 0; k < W.ngens(); ++k) {
      for (int s = 0; s < nsum; ++s) {
        Multideg tdeg = mdeg_add(d, wdegs[k]);
        if (!summand_admissible(E.summands()[s], tdeg)) continue;
        int ts = tgt_slot[k][s];
        if (ts < 0) continue;
        typename Field::Elem acc = F.zero();
        for (int j = 0; j < V.ngens(); ++j) {
          const Poly& entry = w_to_v[k][j];
          if (entry.is_zero()) continue;
          int ss = src_slot[j][s];
          if (ss < 0) continue;
          assert(entry.is_term());
          int tpow = 0;
          for (int v : E.summands()[s].coef_vars) tpow += entry.leading().m[v];
          auto c = FieldOps<Field>::scalar(F, entry.leading().c, tpow);
          acc = F.add(acc, F.mul(c, src.basis.at(ss, b)));
        }
        images.at(ts, b) = acc;
      }
    }
  }
  info.rank = mat_rank(F, images);
  return info;
}

}  // namespace

int hull_hom_dim(const InjectiveModel& E, const ModuleObject& V, const Multideg& d) {
  assert(E.uniform_class());
  if (E.summands()[0].coef_vars.empty())
    return hom_piece<PrimeField>(E, V, d).dim;
  return hom_piece<RatFuncField>(E, V, d).dim;
}

HullHomMapInfo hull_hom_map(const InjectiveModel& E, const ModuleObject& V,
                            const ModuleObject& W, const PolyMat& w_to_v, const Multideg& d) {
  assert(E.uniform_class());
  if (E.summands()[0].coef_vars.empty())
    return hom_map_impl<PrimeField>(E, V, W, w_to_v, d);
  return hom_map_impl<RatFuncField>(E, V, W, w_to_v, d);
}

HomExactnessReport hom_exactness_on_hull(const InjectiveModel& E, const ModuleObject& V,
                                         const PolyMat& sub_inclusion, int radius) {
  HomExactnessReport rep;
  SubobjectHandle N{V.shared(), sub_inclusion};
  ModuleObject W = subobject_module(N);
  // symmetric box on the lattice variables
  int n = E.ring()->nvars;
  std::vector<Multideg> degs;
  const auto& S = E.lattice_vars();
  if (S.empty()) {
    degs = {Multideg(n, 0)};
  } else {
    Multideg cur(n, 0);
    for (int v : S) cur[v] = -radius;
    while (true) {
      degs.push_back(cur);
      int i = static_cast<int>(S.size()) - 1;
      while (i >= 0) {
        int v = S[i];
        if (cur[v] < radius) {
          ++cur[v];
          for (size_t j = i + 1; j < S.size(); ++j) cur[S[j]] = -radius;
          break;
        }
        --i;
      }
      if (i < 0) break;
    }
  }
  for (auto& d : degs) {
    HullHomMapInfo info = hull_hom_map(E, V, W, sub_inclusion, d);
    ++rep.degrees_tested;
    if (info.rank != info.dim_tgt) {
      rep.surjective_everywhere = false;
      rep.failures.push_back("restriction not surjective in a tested degree");
    }
  }
  return rep;
}

}  // namespace lcwb
