#include "lcwb/cech.hpp"

#include <cassert>

#include "lcwb/error.hpp"

namespace lcwb {

FpCohomology complex_cohomology(const PrimeField& F, const Mat<PrimeField>* d_in,
                                const Mat<PrimeField>* d_out, int dim_here) {
  FpCohomology H;
  // kernel of the outgoing differential
  if (d_out && d_out->cols == dim_here && d_out->rows >= 0) {
    Mat<PrimeField> K = mat_kernel(F, *d_out);
    H.kernel = colspace_from(F, K);
  } else {
    H.kernel = colspace_from(F, Mat<PrimeField>::identity(dim_here, F));
  }
  // image of the incoming differential
  if (d_in && d_in->rows == dim_here) {
    H.image = colspace_from(F, *d_in);
  } else {
    H.image = ColSpace<PrimeField>(dim_here);
    H.image.basis = Mat<PrimeField>(dim_here, 0, F);
    H.image.is_pivot_row.assign(dim_here, 0);
  }
  // representatives: kernel vectors adding new pivots over the image
  ColSpace<PrimeField> acc = H.image;
  std::vector<std::vector<uint32_t>> reps;
  for (int j = 0; j < H.kernel.dim(); ++j) {
    auto v = H.kernel.basis.col(j);
    if (colspace_insert(F, acc, v)) reps.push_back(v);
  }
  H.dim = static_cast<int>(reps.size());
  H.reps = Mat<PrimeField>(dim_here, H.dim, F);
  for (int j = 0; j < H.dim; ++j) H.reps.set_col(j, reps[j]);
  return H;
}

std::vector<uint32_t> cohomology_coords(const PrimeField& F, const FpCohomology& H,
                                        std::vector<uint32_t> z) {
  // solve [reps | image] c = z and report the reps block
  int n = H.reps.rows;
  Mat<PrimeField> A(n, H.dim + H.image.dim(), F);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < H.dim; ++j) A.at(i, j) = H.reps.at(i, j);
    for (int j = 0; j < H.image.dim(); ++j) A.at(i, H.dim + j) = H.image.basis.at(i, j);
  }
  std::vector<uint32_t> x;
  bool ok = mat_solve(F, A, z, x);
  if (!ok) throw Error(ErrorCode::Internal, "vector is not a cocycle class in this basis");
  return std::vector<uint32_t>(x.begin(), x.begin() + H.dim);
}

namespace {
int popcount(int mask) { return __builtin_popcount(static_cast<unsigned>(mask)); }
}  // namespace

CechEngine::CechEngine(ModulePtr M, std::vector<Monomial> gens)
    : M_(std::move(M)), gens_(std::move(gens)) {
  int s = static_cast<int>(gens_.size());
  int n = M_->ring()->nvars;
  locs_.reserve(static_cast<size_t>(1) << s);
  for (int mask = 0; mask < (1 << s); ++mask) {
    std::vector<bool> inv(n, false);
    for (int i = 0; i < s; ++i)
      if (mask & (1 << i))
        for (int v : gens_[i].support()) inv[v] = true;
    locs_.push_back(GradedPresentation::from(*M_, std::move(inv)));
  }
}

const CechEngine::DegreeData& CechEngine::at(const Multideg& a) {
  auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;

  const PrimeField& F = M_->ring()->field;
  int s = ngens();
  DegreeData data;
  data.pieces.reserve(locs_.size());
  for (auto& P : locs_) data.pieces.push_back(graded_piece(P, a));
  data.masks.resize(s + 1);
  for (int mask = 0; mask < (1 << s); ++mask) data.masks[popcount(mask)].push_back(mask);
  data.dims.resize(s + 1, 0);
  std::vector<std::vector<int>> offset(s + 1);
  for (int k = 0; k <= s; ++k) {
    for (int m : data.masks[k]) {
      offset[k].push_back(data.dims[k]);
      data.dims[k] += data.pieces[m].dim();
    }
  }
  Multideg zero_e(a.size(), 0);
  for (int k = 0; k < s; ++k) {
    Mat<PrimeField> d(data.dims[k + 1], data.dims[k], F);
    for (size_t si = 0; si < data.masks[k].size(); ++si) {
      int S = data.masks[k][si];
      const GradedPiece& ps = data.pieces[S];
      if (ps.dim() == 0) continue;
      for (int v = 0; v < s; ++v) {
        if (S & (1 << v)) continue;
        int T = S | (1 << v);
        // sign: position of v among the set bits of T
        int pos = popcount(T & ((1 << v) - 1));
        uint32_t coeff = (pos % 2 == 0) ? 1 : F.neg(1);
        const GradedPiece& pt = data.pieces[T];
        if (pt.dim() == 0) continue;
        Mat<PrimeField> blk =
            monomial_piece_map(locs_[T], pt, locs_[S], ps, zero_e, coeff, a);
        // locate T in level k+1
        size_t ti = 0;
        while (data.masks[k + 1][ti] != T) ++ti;
        int roff = offset[k + 1][ti];
        int coff = offset[k][si];
        for (int r = 0; r < blk.rows; ++r)
          for (int c = 0; c < blk.cols; ++c) d.at(roff + r, coff + c) = blk.at(r, c);
      }
    }
    data.d.push_back(std::move(d));
  }
  return cache_.emplace(a, std::move(data)).first->second;
}

FpCohomology CechEngine::cohomology(int k, const Multideg& a) {
  auto key = std::make_pair(k, a);
  auto it = coh_cache_.find(key);
  if (it != coh_cache_.end()) return it->second;
  const DegreeData& data = at(a);
  const PrimeField& F = M_->ring()->field;
  const Mat<PrimeField>* din = (k >= 1 && k - 1 < static_cast<int>(data.d.size()))
                                   ? &data.d[k - 1]
                                   : nullptr;
  const Mat<PrimeField>* dout = (k >= 0 && k < static_cast<int>(data.d.size())) ? &data.d[k]
                                                                                : nullptr;
  int dim_here = (k >= 0 && k <= ngens()) ? data.dims[k] : 0;
  FpCohomology H = complex_cohomology(F, din, dout, dim_here);
  coh_cache_.emplace(key, H);
  return H;
}

Mat<PrimeField> CechEngine::cochain_mult(int k, const Multideg& a, const Multideg& e) {
  const PrimeField& F = M_->ring()->field;
  const DegreeData& src = at(a);
  Multideg b = mdeg_add(a, e);
  const DegreeData& tgt = at(b);
  Mat<PrimeField> out(tgt.dims[k], src.dims[k], F);
  int coff = 0;
  for (size_t si = 0; si < src.masks[k].size(); ++si) {
    int mask = src.masks[k][si];
    const GradedPiece& ps = src.pieces[mask];
    const GradedPiece& pt = tgt.pieces[mask];
    int roff = 0;
    for (size_t ti = 0; ti < si; ++ti) roff += tgt.pieces[tgt.masks[k][ti]].dim();
    if (ps.dim() > 0 && pt.dim() > 0) {
      Mat<PrimeField> blk = monomial_piece_map(locs_[mask], pt, locs_[mask], ps, e, 1, a);
      for (int r = 0; r < blk.rows; ++r)
        for (int c = 0; c < blk.cols; ++c) out.at(roff + r, coff + c) = blk.at(r, c);
    }
    coff += ps.dim();
  }
  return out;
}

Mat<PrimeField> CechEngine::action(int k, const Multideg& a, const Multideg& e) {
  const PrimeField& F = M_->ring()->field;
  FpCohomology Ha = cohomology(k, a);
  Multideg b = mdeg_add(a, e);
  FpCohomology Hb = cohomology(k, b);
  Mat<PrimeField> mult = cochain_mult(k, a, e);
  Mat<PrimeField> out(Hb.dim, Ha.dim, F);
  for (int j = 0; j < Ha.dim; ++j) {
    auto img = mat_apply(F, mult, Ha.reps.col(j));
    auto coords = cohomology_coords(F, Hb, img);
    for (int r = 0; r < Hb.dim; ++r) out.at(r, j) = coords[r];
  }
  return out;
}

bool CechEngine::dd_zero(const Multideg& a) {
  const DegreeData& data = at(a);
  const PrimeField& F = M_->ring()->field;
  for (size_t k = 0; k + 1 < data.d.size(); ++k) {
    Mat<PrimeField> dd = mat_mul(F, data.d[k + 1], data.d[k]);
    if (!mat_is_zero(F, dd)) return false;
  }
  return true;
}

Mat<PrimeField> cech_drop_map(CechEngine& src, CechEngine& tgt, const std::vector<int>& tgt_index,
                              int k, const Multideg& a) {
  const PrimeField& F = src.module()->ring()->field;
  const auto& sd = src.at(a);
  const auto& td = tgt.at(a);
  Mat<PrimeField> out(td.dims[k], sd.dims[k], F);
  // for each target mask, the matching source mask maps by the identity
  int roff = 0;
  for (int T : td.masks[k]) {
    int S = 0;
    for (int j = 0; j < static_cast<int>(tgt_index.size()); ++j)
      if (T & (1 << j)) S |= 1 << tgt_index[j];
    int coff = 0;
    for (int Sm : sd.masks[k]) {
      if (Sm == S) break;
      coff += sd.pieces[Sm].dim();
    }
    const GradedPiece& ps = sd.pieces[S];
    const GradedPiece& pt = td.pieces[T];
    if (ps.dim() > 0 && pt.dim() > 0) {
      // identical localizations: the subset monomials agree
      for (int c = 0; c < ps.dim(); ++c) {
        // both pieces are over the same presentation data; identity on
        // generator coordinates, then project
        std::vector<uint32_t> q0(ps.dim(), 0);
        q0[c] = 1;
        auto rep = ps.lift(F, q0);
        std::vector<uint32_t> img(pt.active.size(), 0);
        for (size_t idx = 0; idx < ps.active.size(); ++idx) {
          if (rep[idx] == 0) continue;
          // position of the generator in the target active list
          int gen = ps.active[idx];
          int p = -1;
          for (size_t t2 = 0; t2 < pt.active.size(); ++t2)
            if (pt.active[t2] == gen) {
              p = static_cast<int>(t2);
              break;
            }
          assert(p >= 0);
          img[p] = rep[idx];
        }
        auto q = pt.project(F, std::move(img));
        for (int r = 0; r < pt.dim(); ++r) out.at(roff + r, coff + c) = q[r];
      }
    }
    roff += pt.dim();
  }
  return out;
}

}  // namespace lcwb
