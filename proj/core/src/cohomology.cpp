#include "lcwb/cohomology.hpp"

#include <algorithm>
#include <cassert>

#include "lcwb/error.hpp"

namespace lcwb {

std::vector<Monomial> monomial_generators(const Ideal& I) {
  std::vector<Monomial> out;
  for (auto& g : I.gens()) {
    if (g.is_zero()) continue;
    if (!g.is_term())
      throw Error(ErrorCode::NonHomogeneousInput,
                  "Cech route needs monomial (multihomogeneous) generators");
    out.push_back(g.leading().m);
  }
  return out;
}

CechCohomology::CechCohomology(ModulePtr M, const Ideal& I)
    : M_(M), engine_(M, monomial_generators(I)) {}

LocalCohomologyTable CechCohomology::table(const DegreeBox& box, int imax) {
  LocalCohomologyTable t;
  t.route = "cech";
  int top = std::min(imax, engine_.ngens());
  for (auto& a : box.degrees()) {
    for (int i = 0; i <= top; ++i) {
      int d = engine_.cohomology(i, a).dim;
      if (d > 0) t.entries[{i, a}] = LCEntry{d, true, 0};
    }
  }
  return t;
}

// ----- ExtPieces -----

ExtPieces::ExtPieces(ModulePtr M, ModuleObject W, int imax)
    : M_(std::move(M)), PM_(GradedPresentation::from(*M_)), imax_(imax) {
  res_ = free_resolution(W, imax + 1);
  if (!res_.graded)
    throw Error(ErrorCode::NonHomogeneousInput,
                "colim-Ext route needs a graded resolution of the source");
}

const ExtPieces::Cx& ExtPieces::complex(const Multideg& a) {
  auto it = cx_cache_.find(a);
  if (it != cx_cache_.end()) return it->second;

  const PrimeField& F = M_->ring()->field;
  Cx cx;
  int levels = static_cast<int>(res_.ranks.size());
  cx.blocks.resize(levels);
  cx.dims.resize(levels, 0);
  std::vector<std::vector<int>> offsets(levels);
  for (int k = 0; k < levels; ++k) {
    for (int t = 0; t < res_.ranks[k]; ++t) {
      Multideg deg = mdeg_add(a, res_.shifts[k][t]);
      cx.blocks[k].push_back(graded_piece(PM_, deg));
      offsets[k].push_back(cx.dims[k]);
      cx.dims[k] += cx.blocks[k].back().dim();
    }
  }
  for (size_t k = 0; k < res_.matrices.size(); ++k) {
    Mat<PrimeField> d(cx.dims[k + 1], cx.dims[k], F);
    for (int u = 0; u < static_cast<int>(res_.matrices[k].size()); ++u) {
      const PolyVec& col = res_.matrices[k][u];  // column u of D_{k+1}
      for (int t = 0; t < res_.ranks[k]; ++t) {
        const Poly& entry = col[t];
        if (entry.is_zero()) continue;
        assert(entry.is_term());
        const GradedPiece& ps = cx.blocks[k][t];
        const GradedPiece& pt = cx.blocks[k + 1][u];
        if (ps.dim() == 0 || pt.dim() == 0) continue;
        Multideg src_deg = mdeg_add(a, res_.shifts[k][t]);
        Mat<PrimeField> blk =
            monomial_piece_map(PM_, pt, PM_, ps, entry.leading().m.multidegree(),
                               entry.leading().c, src_deg);
        for (int r = 0; r < blk.rows; ++r)
          for (int c = 0; c < blk.cols; ++c)
            d.at(offsets[k + 1][u] + r, offsets[k][t] + c) =
                F.add(d.at(offsets[k + 1][u] + r, offsets[k][t] + c), blk.at(r, c));
      }
    }
    cx.delta.push_back(std::move(d));
  }
  return cx_cache_.emplace(a, std::move(cx)).first->second;
}

FpCohomology ExtPieces::cohomology(int i, const Multideg& a) {
  auto key = std::make_pair(i, a);
  auto it = coh_cache_.find(key);
  if (it != coh_cache_.end()) return it->second;
  const PrimeField& F = M_->ring()->field;
  const Cx& cx = complex(a);
  int levels = static_cast<int>(cx.dims.size());
  FpCohomology H;
  if (i < 0 || i >= levels) {
    H = complex_cohomology(F, nullptr, nullptr, 0);
  } else {
    const Mat<PrimeField>* din =
        (i >= 1 && i - 1 < static_cast<int>(cx.delta.size())) ? &cx.delta[i - 1] : nullptr;
    const Mat<PrimeField>* dout =
        (i < static_cast<int>(cx.delta.size())) ? &cx.delta[i] : nullptr;
    H = complex_cohomology(F, din, dout, cx.dims[i]);
  }
  coh_cache_.emplace(key, H);
  return H;
}

std::vector<PolyMat> lift_chain_map(const RingPtr& ring, const FreeResolution& A,
                                    const FreeResolution& B, const PolyMat& f0) {
  std::vector<PolyMat> u;
  u.push_back(f0);
  size_t len = std::min(A.matrices.size(), B.matrices.size());
  for (size_t k = 0; k < len; ++k) {
    PolyMat next;
    int rankB_next = static_cast<int>(B.matrices[k].size());
    for (auto& colA : A.matrices[k]) {
      PolyVec v = pm_apply(u[k], colA);
      if (pv_is_zero(v)) {
        next.push_back(pv_zero(ring, rankB_next));
        continue;
      }
      if (B.matrices[k].empty())
        throw Error(ErrorCode::Internal, "chain map lift hit a truncated resolution");
      std::vector<Poly> cof;
      if (!lift_through(ring, static_cast<int>(v.size()), B.matrices[k], v, cof))
        throw Error(ErrorCode::Internal, "chain map lift failed (resolution not exact?)");
      PolyVec col(cof.begin(), cof.begin() + rankB_next);
      next.push_back(std::move(col));
    }
    u.push_back(std::move(next));
  }
  return u;
}

Mat<PrimeField> ext_transition(ExtPieces& B, ExtPieces& A, const std::vector<PolyMat>& u,
                               int i, const Multideg& a) {
  const PrimeField& F = B.target().ring()->field;
  FpCohomology HB = B.cohomology(i, a);
  FpCohomology HA = A.cohomology(i, a);
  Mat<PrimeField> out(HA.dim, HB.dim, F);
  if (HA.dim == 0 || HB.dim == 0) return out;

  const auto& cxB = B.complex(a);
  const auto& cxA = A.complex(a);
  const auto& resB = B.resolution();
  const auto& resA = A.resolution();
  // cochain-level map Hom(F^B_i, M)_a -> Hom(F^A_i, M)_a
  Mat<PrimeField> level(cxA.dims[i], cxB.dims[i], F);
  std::vector<int> offB(resB.ranks[i], 0), offA(resA.ranks[i], 0);
  for (int t = 1; t < resB.ranks[i]; ++t)
    offB[t] = offB[t - 1] + cxB.blocks[i][t - 1].dim();
  for (int t = 1; t < resA.ranks[i]; ++t)
    offA[t] = offA[t - 1] + cxA.blocks[i][t - 1].dim();

  const GradedPresentation PM = GradedPresentation::from(B.target());
  const PolyMat& Ui = u[i];  // columns indexed by A-generators, in R^{rankB_i}
  for (int t = 0; t < resA.ranks[i]; ++t) {
    for (int s = 0; s < resB.ranks[i]; ++s) {
      const Poly& entry = Ui[t][s];
      if (entry.is_zero()) continue;
      assert(entry.is_term());
      const GradedPiece& ps = cxB.blocks[i][s];
      const GradedPiece& pt = cxA.blocks[i][t];
      if (ps.dim() == 0 || pt.dim() == 0) continue;
      Multideg src_deg = mdeg_add(a, resB.shifts[i][s]);
      Mat<PrimeField> blk = monomial_piece_map(PM, pt, PM, ps,
                                               entry.leading().m.multidegree(),
                                               entry.leading().c, src_deg);
      for (int r = 0; r < blk.rows; ++r)
        for (int c = 0; c < blk.cols; ++c)
          level.at(offA[t] + r, offB[s] + c) =
              F.add(level.at(offA[t] + r, offB[s] + c), blk.at(r, c));
    }
  }
  for (int j = 0; j < HB.dim; ++j) {
    auto img = mat_apply(F, level, HB.reps.col(j));
    auto coords = cohomology_coords(F, HA, img);
    for (int r = 0; r < HA.dim; ++r) out.at(r, j) = coords[r];
  }
  return out;
}

// ----- ExtTower -----

namespace {

ModuleObject quotient_power_module(const ModuleObject& V, const Ideal& K, int t) {
  Ideal Kt = ideal_power(K, t);
  PolyMat rels = V.relations();
  for (auto& g : Kt.gens())
    for (int i = 0; i < V.ngens(); ++i) {
      PolyVec v = pv_zero(V.ring(), V.ngens());
      v[i] = g;
      rels.push_back(std::move(v));
    }
  return ModuleObject(V.ring(), V.ngens(), std::move(rels), V.gen_degs());
}

PolyMat power_submodule_columns(const ModuleObject& V, const Ideal& K, int t) {
  Ideal Kt = ideal_power(K, t);
  PolyMat cols;
  for (auto& g : Kt.gens())
    for (int i = 0; i < V.ngens(); ++i) {
      PolyVec v = pv_zero(V.ring(), V.ngens());
      v[i] = g;
      if (!V.is_zero_in_module(v)) cols.push_back(std::move(v));
    }
  return minimalize_columns(V.ring(), V.ngens(), cols, &V.relations());
}

}  // namespace

ExtTower::ExtTower(ModulePtr M, ModuleObject V, Ideal K, Mode mode, int imax, int tmax)
    : M_(std::move(M)), V_(std::move(V)), K_(std::move(K)), mode_(mode), imax_(imax),
      tmax_(tmax) {}

void ExtTower::ensure_level(int t) {
  while (static_cast<int>(towers_.size()) < t) {
    int next = static_cast<int>(towers_.size()) + 1;
    if (mode_ == Mode::QuotientPowers) {
      towers_.push_back(quotient_power_module(V_, K_, next));
    } else {
      PolyMat cols = power_submodule_columns(V_, K_, next);
      SubobjectHandle h{V_.shared(), cols};
      ModuleObject W = subobject_module(h);
      towers_.push_back(std::move(W));
      if (static_cast<int>(sub_cols_.size()) < next) sub_cols_.resize(next);
      sub_cols_[next - 1] = cols;
    }
    levels_.push_back(std::make_unique<ExtPieces>(M_, towers_.back(), imax_));
  }
  // chain-map lifts between consecutive levels
  while (static_cast<int>(lifts_.size()) + 1 < static_cast<int>(towers_.size())) {
    int tt = static_cast<int>(lifts_.size());  // lift from level tt+2 to tt+1 (1-based)
    PolyMat f0;
    if (mode_ == Mode::QuotientPowers) {
      f0 = pm_identity(V_.ring(), V_.ngens());
    } else {
      // express the generators of K^{t+1}V in the generators of K^tV
      const PolyMat& big = sub_cols_[tt];       // K^{t+1}... index check below
      const PolyMat& small = sub_cols_[tt + 1];
      PolyMat through = big;
      through.insert(through.end(), V_.relations().begin(), V_.relations().end());
      ModuleGB gb(V_.ring(), V_.ngens(), through, MonomialOrder::degrevlex(), true);
      for (auto& col : small) {
        std::vector<Poly> cof;
        PolyVec rem = gb.normal_form_cofactors(col, cof);
        if (!pv_is_zero(rem))
          throw Error(ErrorCode::Internal, "power submodule inclusion failed to lift");
        PolyVec expr(cof.begin(), cof.begin() + static_cast<long>(big.size()));
        f0.push_back(std::move(expr));
      }
    }
    lifts_.push_back(lift_chain_map(V_.ring(), levels_[tt + 1]->resolution(),
                                    levels_[tt]->resolution(), f0));
  }
}

const ModuleObject& ExtTower::module_at(int t) {
  ensure_level(t);
  return towers_[t - 1];
}

ExtPieces& ExtTower::level(int t) {
  ensure_level(t);
  return *levels_[t - 1];
}

Mat<PrimeField> ExtTower::step_map(int t, int i, const Multideg& a) {
  ensure_level(t + 1);
  return ext_transition(*levels_[t - 1], *levels_[t], lifts_[t - 1], i, a);
}

const PolyMat& ExtTower::inclusion_columns(int t) {
  assert(mode_ == Mode::PowerSubmodule);
  ensure_level(t);
  return sub_cols_[t - 1];
}

bool ExtTower::stable_window(int t, int i, const Multideg& a) {
  if (t + 2 > tmax_) return false;
  ensure_level(t + 2);
  int d0 = level(t).cohomology(i, a).dim;
  int d1 = level(t + 1).cohomology(i, a).dim;
  int d2 = level(t + 2).cohomology(i, a).dim;
  if (d0 != d1 || d1 != d2) return false;
  if (d0 == 0) return true;
  const PrimeField& F = M_->ring()->field;
  return mat_rank(F, step_map(t, i, a)) == d0 && mat_rank(F, step_map(t + 1, i, a)) == d1;
}

LCEntry ExtTower::colim_entry(int i, const Multideg& a) {
  ensure_level(std::min(3, tmax_));
  for (int t = 1; t + 2 <= tmax_; ++t) {
    ensure_level(t + 2);
    int d0 = level(t).cohomology(i, a).dim;
    int d1 = level(t + 1).cohomology(i, a).dim;
    int d2 = level(t + 2).cohomology(i, a).dim;
    if (d0 != d1 || d1 != d2) continue;
    if (d0 == 0) return LCEntry{0, true, t};
    Mat<PrimeField> m0 = step_map(t, i, a);
    Mat<PrimeField> m1 = step_map(t + 1, i, a);
    const PrimeField& F = M_->ring()->field;
    if (mat_rank(F, m0) == d0 && mat_rank(F, m1) == d1) return LCEntry{d0, true, t};
  }
  return LCEntry{level(tmax_).cohomology(i, a).dim, false, tmax_};
}

LocalCohomologyTable colim_ext_route(ModulePtr M, const ModuleObject& V, const Ideal& K,
                                     const DegreeBox& box, int imax, int tmax) {
  ExtTower tower(M, V, K, ExtTower::Mode::QuotientPowers, imax, tmax);
  LocalCohomologyTable t;
  t.route = "colim-ext";
  for (auto& a : box.degrees())
    for (int i = 0; i <= imax; ++i) {
      LCEntry e = tower.colim_entry(i, a);
      if (e.dim > 0 || !e.stabilized) t.entries[{i, a}] = e;
    }
  return t;
}

// ----- two-ideal route -----

TwoIdealResult two_ideal_cohomology(ModulePtr M, const Ideal& I, const Ideal& J,
                                    const DegreeBox& box, int imax, int degree_bound) {
  TwoIdealResult out;
  out.gamma = gamma_torsion(M, I, J, degree_bound);
  out.quotient = quotient_object(*M, out.gamma.torsion);
  out.table.route = "two-ideal";

  // H^0 = Gamma_{I,J}(M), degreewise through its own presentation
  ModuleObject G = subobject_module(out.gamma.torsion);
  if (G.ngens() > 0 && G.graded()) {
    GradedPresentation PG = GradedPresentation::from(G);
    for (auto& a : box.degrees()) {
      int d = graded_piece(PG, a).dim();
      if (d > 0) out.table.entries[{0, a}] = LCEntry{d, true, 0};
    }
  } else if (G.ngens() > 0 && !G.graded()) {
    throw Error(ErrorCode::NonHomogeneousInput, "torsion subobject lost the grading");
  }

  // H^i (i > 0) through the quotient, per the corollary route
  if (imax >= 1) {
    CechCohomology cech(out.quotient.shared(), I);
    LocalCohomologyTable up = cech.table(box, imax);
    for (auto& [k, e] : up.entries)
      if (k.i >= 1) out.table.entries[k] = e;
  }
  return out;
}

// ----- probes -----

TorsionProbeReport torsionness_probe(CechCohomology& cech, const DegreeBox& box, int imax,
                                     const Ideal& I, const Ideal& J, int cap) {
  TorsionProbeReport rep;
  const RingPtr& ring = cech.engine().module()->ring();
  const PrimeField& F = ring->field;
  // K = intersection of the monomial primes lying in W(I,J)
  std::vector<int> all_vars(ring->nvars);
  for (int v = 0; v < ring->nvars; ++v) all_vars[v] = v;
  bool any = false;
  Ideal K;
  for (auto& p : monomial_primes_on(ring, all_vars)) {
    if (!w_membership(I, J, p)) continue;
    K = any ? ideal_intersection(K, p) : p;
    any = true;
  }
  if (!any) K = Ideal::unit(ring);
  rep.K = K;
  std::vector<Monomial> kgens = monomial_generators(K);

  int top = std::min(imax, cech.engine().ngens());
  for (auto& a : box.degrees()) {
    for (int i = 0; i <= top; ++i) {
      FpCohomology H = cech.cohomology_at(i, a);
      for (int j = 0; j < H.dim; ++j) {
        ++rep.elements;
        // orbit chase: apply the generators of K until everything dies
        std::map<Multideg, std::vector<std::vector<uint32_t>>> frontier;
        std::vector<uint32_t> unit(H.dim, 0);
        unit[j] = 1;
        frontier[a] = {unit};
        bool died = false;
        for (int round = 0; round < cap; ++round) {
          std::map<Multideg, std::vector<std::vector<uint32_t>>> next;
          bool alive = false;
          for (auto& [deg, vecs] : frontier) {
            for (auto& g : kgens) {
              Mat<PrimeField> act = cech.engine().action(i, deg, g.multidegree());
              for (auto& v : vecs) {
                if (static_cast<int>(v.size()) != act.cols) continue;
                auto img = mat_apply(F, act, v);
                bool nz = false;
                for (auto& e : img)
                  if (e != 0) nz = true;
                if (nz) {
                  next[mdeg_add(deg, g.multidegree())].push_back(img);
                  alive = true;
                }
              }
            }
          }
          if (!alive) {
            died = true;
            break;
          }
          frontier = std::move(next);
        }
        if (died)
          ++rep.confirmed;
        else
          ++rep.cap_exceeded;
      }
    }
  }
  return rep;
}

AssFinitenessReport ass_finiteness_experiment(ModulePtr M, const Ideal& I, const Ideal& J, int i,
                                              const DegreeBox& box, int degree_bound,
                                              const std::vector<Multideg>& n_generator_degrees) {
  AssFinitenessReport rep;
  const RingPtr& ring = M->ring();
  const PrimeField& F = ring->field;

  // candidate primes: monomial primes on the variables appearing in the data
  std::vector<int> pool;
  auto add_support = [&](const Poly& g) {
    for (auto& t : g.terms())
      for (int v : t.m.support()) pool.push_back(v);
  };
  for (auto& g : I.gens()) add_support(g);
  for (auto& g : J.gens()) add_support(g);
  for (auto& col : M->relations())
    for (auto& e : col) add_support(e);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.empty())
    for (int v = 0; v < ring->nvars; ++v) pool.push_back(v);
  rep.candidates = monomial_primes_on(ring, pool);

  // i = 0: the torsion subobject is finitely generated, use the exact engine
  if (i == 0) {
    GammaResult g = gamma_torsion(M, I, J, degree_bound);
    ModuleObject G = subobject_module(g.torsion);
    if (!G.is_zero_module()) {
      AssResult ass = associated_primes(G.shared(), degree_bound);
      rep.hypothesis_ok = ass.certified;
      for (auto& p : ass.primes) rep.detected.push_back(p);
    }
    for (auto& p : rep.detected) {
      bool in = false;
      for (auto& q : rep.candidates)
        if (q.equals(p)) in = true;
      if (!in) rep.contained = false;
    }
    return rep;
  }

  // route: Cech on M (J = 0) or on M/Gamma (J != 0)
  ModulePtr base = M;
  if (!J.gens().empty()) {
    GammaResult g = gamma_torsion(M, I, J, degree_bound);
    base = quotient_object(*M, g.torsion).shared();
  }
  CechCohomology cech(base, I);
  DegreeBox big = box.expanded(1);

  // hypothesis: H^j (1 <= j < i) has box-stable support
  for (int j = 1; j < i; ++j) {
    for (auto& a : big.degrees()) {
      if (box.contains(a)) continue;
      if (cech.cohomology_at(j, a).dim > 0) {
        rep.hypothesis_ok = false;
        rep.note = "H^" + std::to_string(j) + " has support outside the box";
      }
    }
  }

  // J * H^i finite-generation surrogate (monomial J only)
  if (!J.gens().empty()) {
    bool monom = true;
    for (auto& g : J.gens())
      if (!g.is_term()) monom = false;
    if (monom) {
      for (auto& a : big.degrees()) {
        if (box.contains(a)) continue;
        // dims of sum of J-generator images landing at degree a
        int dim_here = 0;
        ColSpace<PrimeField> span(cech.cohomology_at(i, a).dim);
        span.basis = Mat<PrimeField>(span.n, 0, F);
        span.is_pivot_row.assign(span.n, 0);
        for (auto& g : J.gens()) {
          Multideg gd = g.leading().m.multidegree();
          Multideg src = mdeg_sub(a, gd);
          FpCohomology Hsrc = cech.cohomology_at(i, src);
          if (Hsrc.dim == 0) continue;
          Mat<PrimeField> act = cech.engine().action(i, src, gd);
          for (int c = 0; c < act.cols; ++c)
            if (colspace_insert(F, span, act.col(c))) ++dim_here;
        }
        if (dim_here > 0) {
          rep.j_part_ok = false;
          rep.note = "J * H^i has support outside the box";
        }
      }
    } else {
      rep.note = "J not monomial; J*H^i surrogate skipped";
    }
  }

  // spans of N per degree (module-generated by the listed full pieces)
  auto n_span_at = [&](const Multideg& a) {
    FpCohomology H = cech.cohomology_at(i, a);
    ColSpace<PrimeField> span(H.dim);
    span.basis = Mat<PrimeField>(H.dim, 0, F);
    span.is_pivot_row.assign(H.dim, 0);
    for (auto& g : n_generator_degrees) {
      Multideg e = mdeg_sub(a, g);
      bool ok = true;
      for (int v : e)
        if (v < 0) ok = false;
      if (!ok) continue;
      FpCohomology Hg = cech.cohomology_at(i, g);
      if (Hg.dim == 0) continue;
      Mat<PrimeField> act = cech.engine().action(i, g, e);
      for (int c = 0; c < act.cols; ++c) colspace_insert(F, span, act.col(c));
    }
    return span;
  };

  // socle detection on H^i / N for each candidate prime
  for (auto& p : rep.candidates) {
    bool detected = false;
    for (auto& a : box.degrees()) {
      FpCohomology H = cech.cohomology_at(i, a);
      if (H.dim == 0) continue;
      ColSpace<PrimeField> Na = n_span_at(a);
      // kernel of stacked maps (x_v mod N) over the generators of p
      std::vector<Mat<PrimeField>> stack;
      int total_rows = 0;
      for (int v : p.variable_support()) {
        Multideg e(ring->nvars, 0);
        e[v] = 1;
        Mat<PrimeField> act = cech.engine().action(i, a, e);
        Multideg b = mdeg_add(a, e);
        ColSpace<PrimeField> Nb = n_span_at(b);
        // quotient projection by Nb: non-pivot rows after reduction
        int qdim = act.rows - Nb.dim();
        Mat<PrimeField> proj(qdim, act.cols, F);
        for (int c = 0; c < act.cols; ++c) {
          auto col = act.col(c);
          colspace_reduce(F, Nb, col);
          int rr = 0;
          for (int r = 0; r < act.rows; ++r) {
            if (Nb.is_pivot_row.empty() ? true : !Nb.is_pivot_row[r]) {
              if (rr < qdim) proj.at(rr, c) = col[r];
              ++rr;
            }
          }
        }
        stack.push_back(std::move(proj));
        total_rows += qdim;
      }
      Mat<PrimeField> big_map(total_rows, H.dim, F);
      int row = 0;
      for (auto& m : stack) {
        for (int r = 0; r < m.rows; ++r)
          for (int c = 0; c < m.cols; ++c) big_map.at(row + r, c) = m.at(r, c);
        row += m.rows;
      }
      Mat<PrimeField> ker = mat_kernel(F, big_map);
      // detected iff the kernel exceeds N_a
      ColSpace<PrimeField> acc = Na;
      bool extra = false;
      for (int c = 0; c < ker.cols; ++c)
        if (colspace_insert(F, acc, ker.col(c))) extra = true;
      if (extra) {
        detected = true;
        break;
      }
    }
    if (detected) rep.detected.push_back(p);
  }
  rep.finite = true;
  rep.contained = true;
  return rep;
}

}  // namespace lcwb
