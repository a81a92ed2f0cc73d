#include "lcwb/spectral.hpp"

#include <algorithm>
#include <cassert>

#include "lcwb/error.hpp"

namespace lcwb {

void check_functorial(const PrimeField& F, const PosetOfSums& P, const PosetFunctorData& data) {
  for (auto& c : P.chains(2)) {
    int p = c[0], q = c[1], r = c[2];
    auto pq = data.maps.find({p, q});
    auto qr = data.maps.find({q, r});
    auto pr = data.maps.find({p, r});
    if (pq == data.maps.end() || qr == data.maps.end() || pr == data.maps.end())
      throw Error(ErrorCode::NonFunctorialTransitions, "missing transition on a chain");
    Mat<PrimeField> comp = mat_mul(F, qr->second, pq->second);
    if (comp.rows != pr->second.rows || comp.cols != pr->second.cols)
      throw Error(ErrorCode::NonFunctorialTransitions, "transition shape mismatch");
    for (size_t i = 0; i < comp.a.size(); ++i)
      if (comp.a[i] != pr->second.a[i])
        throw Error(ErrorCode::NonFunctorialTransitions,
                    "composite transition disagrees with the direct one");
  }
}

namespace {

// Roos boundary C_k -> C_{k-1}
Mat<PrimeField> roos_boundary(const PrimeField& F, const PosetOfSums& P,
                              const PosetFunctorData& data, int k) {
  const auto& src_chains = P.chains(k);
  const auto& tgt_chains = P.chains(k - 1);
  std::map<std::vector<int>, int> tgt_index;
  for (size_t i = 0; i < tgt_chains.size(); ++i) tgt_index[tgt_chains[i]] = static_cast<int>(i);
  std::vector<int> src_off(src_chains.size() + 1, 0), tgt_off(tgt_chains.size() + 1, 0);
  for (size_t i = 0; i < src_chains.size(); ++i)
    src_off[i + 1] = src_off[i] + data.dims[src_chains[i][0]];
  for (size_t i = 0; i < tgt_chains.size(); ++i)
    tgt_off[i + 1] = tgt_off[i] + data.dims[tgt_chains[i][0]];
  Mat<PrimeField> d(tgt_off.back(), src_off.back(), F);
  for (size_t ci = 0; ci < src_chains.size(); ++ci) {
    const auto& c = src_chains[ci];
    int srcdim = data.dims[c[0]];
    if (srcdim == 0) continue;
    for (size_t j = 0; j < c.size(); ++j) {
      std::vector<int> t;
      for (size_t u = 0; u < c.size(); ++u)
        if (u != j) t.push_back(c[u]);
      auto it = tgt_index.find(t);
      assert(it != tgt_index.end());
      int to = tgt_off[it->second];
      uint32_t sign = (j % 2 == 0) ? 1 : F.neg(1);
      if (j == 0) {
        auto mit = data.maps.find({c[0], c[1]});
        assert(mit != data.maps.end());
        const Mat<PrimeField>& T = mit->second;
        for (int r = 0; r < T.rows; ++r)
          for (int cc = 0; cc < T.cols; ++cc)
            d.at(to + r, src_off[ci] + cc) =
                F.add(d.at(to + r, src_off[ci] + cc), F.mul(sign, T.at(r, cc)));
      } else {
        for (int r = 0; r < srcdim; ++r)
          d.at(to + r, src_off[ci] + r) = F.add(d.at(to + r, src_off[ci] + r), sign);
      }
    }
  }
  return d;
}

}  // namespace

std::vector<int> roos_homology_dims(const PrimeField& F, const PosetOfSums& P,
                                    const PosetFunctorData& data, int kmax) {
  int height = P.height();
  std::vector<Mat<PrimeField>> d;  // d[k]: C_{k+1} -> C_k
  for (int k = 1; k <= height; ++k) d.push_back(roos_boundary(F, P, data, k));
  std::vector<int> dims(height + 1, 0);
  for (int k = 0; k <= height; ++k)
    for (auto& c : P.chains(k)) dims[k] += data.dims[c[0]];
  std::vector<int> out;
  for (int k = 0; k <= std::min(kmax, height); ++k) {
    int zdim;
    if (k == 0) {
      zdim = dims[0];
    } else {
      zdim = d[k - 1].cols - mat_rank(F, d[k - 1]);
    }
    int bdim = (k < height) ? mat_rank(F, d[k]) : 0;
    out.push_back(zdim - bdim);
  }
  for (int k = height + 1; k <= kmax; ++k) out.push_back(0);
  return out;
}

int poset_colimit_dim(const PrimeField& F, const PosetOfSums& P, const PosetFunctorData& data) {
  int total = 0;
  std::vector<int> off(P.size() + 1, 0);
  for (int p = 0; p < P.size(); ++p) {
    off[p + 1] = off[p] + data.dims[p];
    total += data.dims[p];
  }
  std::vector<std::vector<uint32_t>> rels;
  for (int p = 0; p < P.size(); ++p)
    for (int q = 0; q < P.size(); ++q) {
      if (!P.lt(p, q)) continue;
      auto it = data.maps.find({p, q});
      assert(it != data.maps.end());
      for (int c = 0; c < data.dims[p]; ++c) {
        std::vector<uint32_t> v(total, 0);
        v[off[p] + c] = 1;
        for (int r = 0; r < data.dims[q]; ++r)
          v[off[q] + r] = F.sub(v[off[q] + r], it->second.at(r, c));
        rels.push_back(std::move(v));
      }
    }
  Mat<PrimeField> R(total, static_cast<int>(rels.size()), F);
  for (size_t j = 0; j < rels.size(); ++j) R.set_col(static_cast<int>(j), rels[j]);
  return total - mat_rank(F, R);
}

// ----- CechRoosBicomplex -----

CechRoosBicomplex::CechRoosBicomplex(ModulePtr M, PosetOfSums P)
    : M_(std::move(M)), P_(std::move(P)) {
  for (int p = 0; p < P_.size(); ++p) {
    engines_.push_back(std::make_unique<CechEngine>(M_, P_.node(p).gens));
    tmax_ = std::max(tmax_, static_cast<int>(P_.node(p).gens.size()));
  }
  const Ideal& I = P_.intersection();
  Ideal abut_ideal(M_->ring(), I.is_monomial() ? I.gb() : I.gens());
  abutment_ = std::make_unique<CechCohomology>(M_, abut_ideal);
}

const CechRoosBicomplex::TotData& CechRoosBicomplex::tot(const Multideg& a) {
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;

  const PrimeField& F = M_->ring()->field;
  int L = P_.height();
  TotData data;

  // block layout per total degree, s descending (filtration prefixes)
  for (int n = -L; n <= tmax_; ++n) {
    std::vector<TotData::Block> blocks;
    int off = 0;
    for (int s = 0; s >= -L; --s) {
      int l = -s;
      int t = n - s;
      if (t < 0 || t > tmax_) continue;
      const auto& chains = P_.chains(l);
      for (size_t ci = 0; ci < chains.size(); ++ci) {
        const auto& eng = engines_[chains[ci][0]];
        int dim = (t <= eng->ngens()) ? eng->at(a).dims[t] : 0;
        blocks.push_back({s, t, static_cast<int>(ci), dim, off});
        off += dim;
      }
    }
    data.blocks[n] = std::move(blocks);
    data.dims[n] = off;
  }

  // differentials
  for (int n = -L; n < tmax_; ++n) {
    const auto& src_blocks = data.blocks[n];
    const auto& tgt_blocks = data.blocks[n + 1];
    Mat<PrimeField> d(data.dims[n + 1], data.dims[n], F);
    auto find_block = [&](int s, int t, int chain) -> const TotData::Block* {
      for (auto& b : tgt_blocks)
        if (b.s == s && b.t == t && b.chain == chain) return &b;
      return nullptr;
    };
    for (auto& sb : src_blocks) {
      if (sb.dim == 0) continue;
      int l = -sb.s;
      const auto& chain = P_.chains(l)[sb.chain];
      CechEngine& eng = *engines_[chain[0]];

      // vertical: Cech differential with the sign twist (-1)^s
      if (sb.t < eng.ngens()) {
        const TotData::Block* tb = find_block(sb.s, sb.t + 1, sb.chain);
        if (tb && tb->dim > 0) {
          const Mat<PrimeField>& dv = eng.at(a).d[sb.t];
          uint32_t sign = (l % 2 == 0) ? 1 : F.neg(1);
          for (int r = 0; r < dv.rows; ++r)
            for (int c = 0; c < dv.cols; ++c)
              d.at(tb->offset + r, sb.offset + c) =
                  F.add(d.at(tb->offset + r, sb.offset + c), F.mul(sign, dv.at(r, c)));
        }
      }

      // horizontal: Roos faces (s -> s+1 means chain length drops)
      if (l >= 1) {
        const auto& shorter = P_.chains(l - 1);
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < shorter.size(); ++i) index[shorter[i]] = static_cast<int>(i);
        for (size_t j = 0; j < chain.size(); ++j) {
          std::vector<int> t;
          for (size_t u = 0; u < chain.size(); ++u)
            if (u != j) t.push_back(chain[u]);
          int ti = index.at(t);
          const TotData::Block* tb = find_block(sb.s + 1, sb.t, ti);
          if (!tb || tb->dim == 0) continue;
          uint32_t sign = (j % 2 == 0) ? 1 : F.neg(1);
          if (j == 0) {
            CechEngine& tgt_eng = *engines_[chain[1]];
            if (sb.t <= tgt_eng.ngens() && sb.t <= eng.ngens()) {
              Mat<PrimeField> blk =
                  cech_drop_map(eng, tgt_eng, P_.gen_embedding(chain[0], chain[1]), sb.t, a);
              for (int r = 0; r < blk.rows; ++r)
                for (int c = 0; c < blk.cols; ++c)
                  d.at(tb->offset + r, sb.offset + c) =
                      F.add(d.at(tb->offset + r, sb.offset + c), F.mul(sign, blk.at(r, c)));
            }
          } else {
            for (int r = 0; r < sb.dim; ++r)
              d.at(tb->offset + r, sb.offset + r) =
                  F.add(d.at(tb->offset + r, sb.offset + r), sign);
          }
        }
      }
    }
    data.d[n] = std::move(d);
  }
  return cache_.emplace(a, std::move(data)).first->second;
}

bool CechRoosBicomplex::total_dd_zero(const Multideg& a) {
  const TotData& data = tot(a);
  const PrimeField& F = M_->ring()->field;
  for (auto& [n, d] : data.d) {
    auto next = data.d.find(n + 1);
    if (next == data.d.end()) continue;
    Mat<PrimeField> dd = mat_mul(F, next->second, d);
    if (!mat_is_zero(F, dd)) return false;
  }
  return true;
}

std::map<std::pair<int, int>, int> CechRoosBicomplex::block_dims(const Multideg& a) {
  const TotData& data = tot(a);
  std::map<std::pair<int, int>, int> out;
  for (auto& [n, blocks] : data.blocks)
    for (auto& b : blocks) out[{b.s, b.t}] += b.dim;
  return out;
}

PageTable CechRoosBicomplex::pages_at(const Multideg& a) {
  const TotData& data = tot(a);
  const PrimeField& F = M_->ring()->field;
  int L = P_.height();
  int rmax = L + tmax_ + 2;

  // prefix offsets of the filtration: F^s = coordinates of blocks with s' >= s
  auto filt_offset = [&](int n, int s) {
    auto it = data.blocks.find(n);
    if (it == data.blocks.end()) return 0;
    int off = 0;
    for (auto& b : it->second)
      if (b.s >= s) off = std::max(off, b.offset + b.dim);
    return off;
  };
  auto dim_at = [&](int n) {
    auto it = data.dims.find(n);
    return it == data.dims.end() ? 0 : it->second;
  };

  // Z_r^{s,n} = {x in F^s : d x in F^{s+r}} as a ColSpace in Tot^n
  auto Z = [&](int r, int s, int n) -> ColSpace<PrimeField> {
    int dim_n = dim_at(n);
    ColSpace<PrimeField> empty(dim_n);
    empty.basis = Mat<PrimeField>(dim_n, 0, F);
    empty.is_pivot_row.assign(std::max(dim_n, 0), 0);
    if (dim_n == 0) return empty;
    int off_src = filt_offset(n, s);           // F^s = coords [0, off_src)
    int off_tgt = filt_offset(n + 1, s + r);   // F^{s+r} = coords [0, off_tgt)
    auto dit = data.d.find(n);
    int dim_next = dim_at(n + 1);
    // rows: coordinates outside F^{s+r} in the target = [off_tgt, dim_next)
    int nrows = std::max(0, dim_next - off_tgt);
    Mat<PrimeField> A(nrows, off_src, F);
    if (dit != data.d.end()) {
      for (int r2 = 0; r2 < nrows; ++r2)
        for (int c = 0; c < off_src; ++c) A.at(r2, c) = dit->second.at(off_tgt + r2, c);
    }
    Mat<PrimeField> K = mat_kernel(F, A);
    Mat<PrimeField> full(dim_n, K.cols, F);
    for (int c = 0; c < K.cols; ++c)
      for (int r2 = 0; r2 < off_src; ++r2) full.at(r2, c) = K.at(r2, c);
    return colspace_from(F, full);
  };

  auto apply_d = [&](int n, const ColSpace<PrimeField>& S) -> ColSpace<PrimeField> {
    auto dit = data.d.find(n);
    int dim_next = dim_at(n + 1);
    ColSpace<PrimeField> out(dim_next);
    out.basis = Mat<PrimeField>(dim_next, 0, F);
    out.is_pivot_row.assign(std::max(dim_next, 0), 0);
    if (dit == data.d.end() || S.dim() == 0) return out;
    Mat<PrimeField> img = mat_mul(F, dit->second, S.basis);
    return colspace_from(F, img);
  };

  PageTable out;
  out.pages.resize(rmax);
  for (int r = 1; r <= rmax; ++r) {
    for (int n = -L; n <= tmax_; ++n) {
      for (int s = -L; s <= 0; ++s) {
        int t = n - s;
        if (t < 0 || t > tmax_) continue;
        ColSpace<PrimeField> Zr = Z(r, s, n);
        ColSpace<PrimeField> Zup = Z(r - 1, s + 1, n);
        ColSpace<PrimeField> Zprev = Z(r - 1, s - r + 1, n - 1);
        ColSpace<PrimeField> B = space_sum(F, Zup, apply_d(n - 1, Zprev));
        int dim = Zr.dim() - B.dim();
        // B is contained in Zr, so the difference is the page dimension
        if (dim > 0) out.pages[r - 1][{s, t}] = dim;
      }
    }
  }
  out.einf = out.pages[rmax - 1];

  // higher differentials present?
  for (int r = 2; r <= rmax && !out.any_higher_dr; ++r) {
    for (int n = -L; n <= tmax_ && !out.any_higher_dr; ++n) {
      for (int s = -L; s <= 0; ++s) {
        int t = n - s;
        if (t < 0 || t > tmax_) continue;
        auto src = out.pages[r - 1].find({s, t});
        auto tgt = out.pages[r - 1].find({s + r, t - r + 1});
        if (src == out.pages[r - 1].end() || tgt == out.pages[r - 1].end()) continue;
        ColSpace<PrimeField> Zr = Z(r, s, n);
        ColSpace<PrimeField> img = apply_d(n, Zr);
        ColSpace<PrimeField> Zup = Z(r - 1, s + r + 1, n + 1);
        ColSpace<PrimeField> Zprev = Z(r - 1, s + 1, n);
        ColSpace<PrimeField> Btgt = space_sum(F, Zup, apply_d(n, Zprev));
        int extra = space_quotient_dim(F, img, Btgt);
        if (extra > 0) {
          out.any_higher_dr = true;
          break;
        }
      }
    }
  }

  // total cohomology and the filtration on it
  for (int n = -L; n <= tmax_; ++n) {
    auto din = data.d.find(n - 1);
    auto dout = data.d.find(n);
    int dim_n = dim_at(n);
    const Mat<PrimeField>* pin = din != data.d.end() ? &din->second : nullptr;
    const Mat<PrimeField>* pout = dout != data.d.end() ? &dout->second : nullptr;
    FpCohomology H = complex_cohomology(F, pin, pout, dim_n);
    if (H.dim > 0) out.total[n] = H.dim;
    // filtration dims: image of F^s ∩ ker in H^n
    std::vector<int> filt;
    for (int s = -L; s <= 0; ++s) {
      ColSpace<PrimeField> Finf = Z(rmax + L + 2, s, n);  // F^s ∩ ker d
      ColSpace<PrimeField> sum = space_sum(F, Finf, H.image);
      filt.push_back(sum.dim() - H.image.dim());
    }
    if (H.dim > 0) out.filtration[n] = std::move(filt);
  }
  return out;
}

std::map<std::pair<int, int>, int> CechRoosBicomplex::e2_at(const Multideg& a) {
  PageTable pt = pages_at(a);
  if (pt.pages.size() >= 2) return pt.pages[1];
  return pt.pages.empty() ? std::map<std::pair<int, int>, int>{} : pt.pages[0];
}

int CechRoosBicomplex::abutment_dim(int n, const Multideg& a) {
  if (n < 0) return 0;
  return abutment_->cohomology_at(n, a).dim;
}

// ----- TransformSpectral -----

TransformSpectral::TransformSpectral(Kind kind, ModulePtr M, PosetOfSums P, Ideal J,
                                     ModuleObject V, int jmax, int tmax, int degree_bound)
    : kind_(kind), M_(std::move(M)), P_(std::move(P)), J_(std::move(J)), V_(std::move(V)),
      jmax_(jmax), tmax_(tmax), degree_bound_(degree_bound) {
  if (kind_ == Kind::GammaIJ)
    init_two_ideal();
  else
    init_transform();
}

void TransformSpectral::init_transform() {
  ExtTower::Mode mode = kind_ == Kind::GammaV ? ExtTower::Mode::QuotientPowers
                                              : ExtTower::Mode::PowerSubmodule;
  for (int p = 0; p < P_.size(); ++p)
    towers_.push_back(std::make_unique<ExtTower>(M_, V_, P_.node(p).ideal, mode, jmax_, tmax_));
  abut_tower_ = std::make_unique<ExtTower>(M_, V_, P_.intersection(), mode, jmax_, tmax_);
}

void TransformSpectral::init_two_ideal() {
  for (int p = 0; p < P_.size(); ++p) {
    GammaResult g = gamma_torsion(M_, P_.node(p).ideal, J_, degree_bound_);
    gsubs_.push_back(g.torsion);
    gammas_.push_back(subobject_module(g.torsion));
    quotients_.push_back(quotient_object(*M_, g.torsion));
    qengines_.push_back(
        std::make_unique<CechEngine>(quotients_.back().shared(), P_.node(p).gens));
  }
}

PosetFunctorData TransformSpectral::values(int j, const Multideg& a) {
  PosetFunctorData data;
  const PrimeField& F = M_->ring()->field;
  if (kind_ == Kind::GammaIJ) {
    for (int p = 0; p < P_.size(); ++p) {
      if (j == 0) {
        if (gammas_[p].ngens() == 0) {
          data.dims.push_back(0);
        } else {
          GradedPresentation PG = GradedPresentation::from(gammas_[p]);
          data.dims.push_back(graded_piece(PG, a).dim());
        }
      } else {
        data.dims.push_back(qengines_[p]->cohomology(j, a).dim);
      }
    }
  } else {
    for (int p = 0; p < P_.size(); ++p) {
      LCEntry e = towers_[p]->colim_entry(j, a);
      if (!e.stabilized) stabilized_ = false;
      common_t_ = std::max(common_t_, e.t_star);
      data.dims.push_back(e.dim);
    }
  }
  for (int p = 0; p < P_.size(); ++p)
    for (int q = 0; q < P_.size(); ++q)
      if (P_.lt(p, q)) data.maps[{p, q}] = node_map(p, q, j, a);
  (void)F;
  return data;
}

Mat<PrimeField> TransformSpectral::node_map(int p, int q, int j, const Multideg& a) {
  const PrimeField& F = M_->ring()->field;
  if (kind_ == Kind::GammaIJ) {
    if (j == 0) {
      // Gamma_p <= Gamma_q: express generators and induce on pieces
      if (gammas_[p].ngens() == 0 || gammas_[q].ngens() == 0)
        return Mat<PrimeField>(
            gammas_[q].ngens() == 0 ? 0 : graded_piece(GradedPresentation::from(gammas_[q]), a).dim(),
            gammas_[p].ngens() == 0 ? 0 : graded_piece(GradedPresentation::from(gammas_[p]), a).dim(),
            F);
      PolyMat through = gsubs_[q].inclusion;
      through.insert(through.end(), M_->relations().begin(), M_->relations().end());
      ModuleGB gb(M_->ring(), M_->ngens(), through, MonomialOrder::degrevlex(), true);
      PolyMat expr;
      for (auto& col : gsubs_[p].inclusion) {
        std::vector<Poly> cof;
        PolyVec rem = gb.normal_form_cofactors(col, cof);
        if (!pv_is_zero(rem))
          throw Error(ErrorCode::Internal, "torsion subobjects fail to be nested");
        PolyVec e(cof.begin(), cof.begin() + static_cast<long>(gsubs_[q].inclusion.size()));
        expr.push_back(std::move(e));
      }
      GradedPresentation Pp = GradedPresentation::from(gammas_[p]);
      GradedPresentation Pq = GradedPresentation::from(gammas_[q]);
      GradedPiece pp = graded_piece(Pp, a);
      GradedPiece pq = graded_piece(Pq, a);
      return term_matrix_piece_map(Pq, pq, Pp, pp, expr, Multideg(M_->ring()->nvars, 0), a);
    }
    // j >= 1: cochain map C^j(G_p; Q_p) -> C^j(G_q; Q_q), then induced
    CechEngine& ep = *qengines_[p];
    CechEngine& eq = *qengines_[q];
    const auto& pd = ep.at(a);
    const auto& qd = eq.at(a);
    std::vector<int> emb = P_.gen_embedding(p, q);
    Mat<PrimeField> level(qd.dims[j], pd.dims[j], F);
    int roff = 0;
    for (int T : qd.masks[j]) {
      int S = 0;
      for (int bj = 0; bj < static_cast<int>(emb.size()); ++bj)
        if (T & (1 << bj)) S |= 1 << emb[bj];
      int coff = 0;
      for (int Sm : pd.masks[j]) {
        if (Sm == S) break;
        coff += pd.pieces[Sm].dim();
      }
      const GradedPiece& ps = pd.pieces[S];
      const GradedPiece& pt = qd.pieces[T];
      if (ps.dim() > 0 && pt.dim() > 0) {
        // identity on generators: Q_p -> Q_q (more relations downstream)
        Mat<PrimeField> blk = monomial_piece_map(eq.loc(T), pt, ep.loc(S), ps,
                                                 Multideg(M_->ring()->nvars, 0), 1, a);
        for (int r = 0; r < blk.rows; ++r)
          for (int c = 0; c < blk.cols; ++c) level.at(roff + r, coff + c) = blk.at(r, c);
      }
      roff += pt.dim();
    }
    FpCohomology Hp = ep.cohomology(j, a);
    FpCohomology Hq = eq.cohomology(j, a);
    Mat<PrimeField> out(Hq.dim, Hp.dim, F);
    for (int c = 0; c < Hp.dim; ++c) {
      auto img = mat_apply(F, level, Hp.reps.col(c));
      auto coords = cohomology_coords(F, Hq, img);
      for (int r = 0; r < Hq.dim; ++r) out.at(r, c) = coords[r];
    }
    return out;
  }

  // transform plugins: module map W^{(q)}_T -> W^{(p)}_T, T = common step
  int T = common_t_;
  auto key = std::make_pair(p, q);
  auto lit = node_lifts_.find(key);
  if (lit == node_lifts_.end()) {
    PolyMat f0;
    if (kind_ == Kind::GammaV) {
      f0 = pm_identity(M_->ring(), V_.ngens());
    } else {
      const PolyMat& big = towers_[p]->inclusion_columns(T);
      const PolyMat& small = towers_[q]->inclusion_columns(T);
      PolyMat through = big;
      through.insert(through.end(), V_.relations().begin(), V_.relations().end());
      ModuleGB gb(V_.ring(), V_.ngens(), through, MonomialOrder::degrevlex(), true);
      for (auto& col : small) {
        std::vector<Poly> cof;
        PolyVec rem = gb.normal_form_cofactors(col, cof);
        if (!pv_is_zero(rem))
          throw Error(ErrorCode::Internal, "power submodules fail to be nested across nodes");
        PolyVec e(cof.begin(), cof.begin() + static_cast<long>(big.size()));
        f0.push_back(std::move(e));
      }
    }
    auto lifts = lift_chain_map(M_->ring(), towers_[q]->level(T).resolution(),
                                towers_[p]->level(T).resolution(), f0);
    lit = node_lifts_.emplace(key, std::move(lifts)).first;
  }
  return ext_transition(towers_[p]->level(T), towers_[q]->level(T), lit->second, j, a);
}

std::map<std::pair<int, int>, int> TransformSpectral::e2_at(const Multideg& a) {
  const PrimeField& F = M_->ring()->field;
  std::map<std::pair<int, int>, int> out;
  for (int j = 0; j <= jmax_; ++j) {
    PosetFunctorData data = values(j, a);
    bool all_zero = true;
    for (int d : data.dims)
      if (d != 0) all_zero = false;
    if (all_zero) continue;
    auto L = roos_homology_dims(F, P_, data, P_.height());
    for (int i = 0; i < static_cast<int>(L.size()); ++i)
      if (L[i] > 0) out[{-i, j}] = L[i];
  }
  return out;
}

bool TransformSpectral::degenerate_at(const Multideg& a) {
  auto e2 = e2_at(a);
  for (auto& [st, dim] : e2) {
    for (int r = 2; r <= P_.height() + jmax_ + 2; ++r) {
      auto it = e2.find({st.first + r, st.second - r + 1});
      if (it != e2.end()) return false;
      auto it2 = e2.find({st.first - r, st.second + r - 1});
      if (it2 != e2.end()) return false;
    }
  }
  return true;
}

int TransformSpectral::abutment_dim(int n, const Multideg& a) {
  if (n < 0) return 0;
  if (kind_ == Kind::GammaIJ) {
    // two-ideal route on the intersection ideal
    GammaResult g = gamma_torsion(M_, P_.intersection(), J_, degree_bound_);
    if (n == 0) {
      ModuleObject G = subobject_module(g.torsion);
      if (G.ngens() == 0) return 0;
      return graded_piece(GradedPresentation::from(G), a).dim();
    }
    ModuleObject Q = quotient_object(*M_, g.torsion);
    const Ideal& I = P_.intersection();
    Ideal abut_ideal(M_->ring(), I.is_monomial() ? I.gb() : I.gens());
    CechCohomology cc(Q.shared(), abut_ideal);
    return cc.cohomology_at(n, a).dim;
  }
  LCEntry e = abut_tower_->colim_entry(n, a);
  if (!e.stabilized) stabilized_ = false;
  return e.dim;
}

void TransformSpectral::assert_functorial(const Multideg& a) {
  const PrimeField& F = M_->ring()->field;
  for (int j = 0; j <= jmax_; ++j) {
    PosetFunctorData data = values(j, a);
    check_functorial(F, P_, data);
  }
}

std::vector<ConvergenceLine> convergence_report(CechRoosBicomplex& ss, const DegreeBox& box,
                                                int nmin, int nmax) {
  std::vector<ConvergenceLine> out;
  for (auto& a : box.degrees()) {
    PageTable pt = ss.pages_at(a);
    for (int n = nmin; n <= nmax; ++n) {
      int total = 0;
      for (auto& [st, dim] : pt.einf)
        if (st.first + st.second == n) total += dim;
      int ab = ss.abutment_dim(n, a);
      if (total == 0 && ab == 0) continue;
      ConvergenceLine line;
      line.a = a;
      line.n = n;
      line.einf_total = total;
      line.abutment = ab;
      line.match = (total == ab);
      out.push_back(std::move(line));
    }
  }
  return out;
}

}  // namespace lcwb
