#include "lcwb/graded.hpp"

#include <cassert>

#include "lcwb/error.hpp"

namespace lcwb {

DegreeBox DegreeBox::cube(int nvars, int lo, int hi) {
  return {Multideg(nvars, lo), Multideg(nvars, hi)};
}

bool DegreeBox::contains(const Multideg& a) const {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < lo[i] || a[i] > hi[i]) return false;
  return true;
}

DegreeBox DegreeBox::expanded(int by) const {
  DegreeBox b = *this;
  for (auto& v : b.lo) v -= by;
  for (auto& v : b.hi) v += by;
  return b;
}

std::vector<Multideg> DegreeBox::degrees() const {
  std::vector<Multideg> out;
  Multideg cur = lo;
  if (lo.empty()) return {Multideg{}};
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(cur.size()) - 1;
    while (i >= 0) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (size_t j = i + 1; j < cur.size(); ++j) cur[j] = lo[j];
        break;
      }
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

GradedPresentation GradedPresentation::from(const ModuleObject& M) {
  return from(M, std::vector<bool>(M.ring()->nvars, false));
}

GradedPresentation GradedPresentation::from(const ModuleObject& M, std::vector<bool> inverted) {
  if (!M.graded())
    throw Error(ErrorCode::NonHomogeneousInput, "module is not multigraded");
  GradedPresentation P;
  P.ring = M.ring();
  P.gen_degs = *M.gen_degs();
  P.inverted = std::move(inverted);
  for (auto& col : M.relations()) {
    auto d = column_multidegree(col, P.gen_degs);
    if (!d)
      throw Error(ErrorCode::NonHomogeneousInput, "relation column is not multihomogeneous");
    RelCol rc;
    rc.deg = *d;
    for (size_t i = 0; i < col.size(); ++i) {
      if (col[i].is_zero()) continue;
      // multihomogeneous nonzero entry is a single term
      rc.entries.push_back({static_cast<int>(i), col[i].leading().c});
    }
    P.rels.push_back(std::move(rc));
  }
  return P;
}

std::vector<uint32_t> GradedPiece::project(const PrimeField& F, std::vector<uint32_t> v) const {
  colspace_reduce(F, relspan, v);
  std::vector<uint32_t> q(quotient_rows.size());
  for (size_t k = 0; k < quotient_rows.size(); ++k) q[k] = v[quotient_rows[k]];
  return q;
}

std::vector<uint32_t> GradedPiece::lift(const PrimeField& F, const std::vector<uint32_t>& q) const {
  std::vector<uint32_t> v(active.size(), 0);
  for (size_t k = 0; k < quotient_rows.size(); ++k) v[quotient_rows[k]] = q[k];
  (void)F;
  return v;
}

GradedPiece graded_piece(const GradedPresentation& P, const Multideg& a) {
  GradedPiece piece;
  const PrimeField& F = P.ring->field;
  std::vector<int> active_pos(P.gen_degs.size(), -1);
  for (size_t i = 0; i < P.gen_degs.size(); ++i) {
    if (P.admissible(mdeg_sub(a, P.gen_degs[i]))) {
      active_pos[i] = static_cast<int>(piece.active.size());
      piece.active.push_back(static_cast<int>(i));
    }
  }
  int n = static_cast<int>(piece.active.size());
  piece.relspan = ColSpace<PrimeField>(n);
  piece.relspan.basis = Mat<PrimeField>(n, 0, F);
  piece.relspan.is_pivot_row.assign(n, 0);
  for (auto& rc : P.rels) {
    if (!P.admissible(mdeg_sub(a, rc.deg))) continue;
    std::vector<uint32_t> v(n, 0);
    for (auto& [row, c] : rc.entries) {
      assert(active_pos[row] >= 0);
      v[active_pos[row]] = F.add(v[active_pos[row]], c);
    }
    colspace_insert(F, piece.relspan, std::move(v));
  }
  for (int i = 0; i < n; ++i)
    if (!piece.relspan.is_pivot_row[i]) piece.quotient_rows.push_back(i);
  return piece;
}

Mat<PrimeField> term_matrix_piece_map(const GradedPresentation& tgt, const GradedPiece& pt,
                                      const GradedPresentation& src, const GradedPiece& ps,
                                      const PolyMat& mat, const Multideg& matdeg,
                                      const Multideg& a) {
  const PrimeField& F = src.ring->field;
  std::vector<int> tgt_pos(tgt.gen_degs.size(), -1);
  for (size_t k = 0; k < pt.active.size(); ++k) tgt_pos[pt.active[k]] = static_cast<int>(k);

  Mat<PrimeField> out(pt.dim(), ps.dim(), F);
  Multideg b = mdeg_add(a, matdeg);
  (void)b;
  for (int col = 0; col < ps.dim(); ++col) {
    std::vector<uint32_t> rep = ps.lift(F, [&] {
      std::vector<uint32_t> q(ps.dim(), 0);
      q[col] = 1;
      return q;
    }());
    std::vector<uint32_t> img(pt.active.size(), 0);
    for (size_t k = 0; k < ps.active.size(); ++k) {
      if (rep[k] == 0) continue;
      int j = ps.active[k];  // source generator index
      const PolyVec& column = mat[j];
      for (size_t i = 0; i < column.size(); ++i) {
        if (column[i].is_zero()) continue;
        assert(column[i].is_term());
        int p = tgt_pos[static_cast<int>(i)];
        assert(p >= 0 && "target generator inactive under a polynomial map");
        img[p] = F.add(img[p], F.mul(rep[k], column[i].leading().c));
      }
    }
    auto q = pt.project(F, std::move(img));
    for (int r = 0; r < pt.dim(); ++r) out.at(r, col) = q[r];
  }
  return out;
}

Mat<PrimeField> monomial_piece_map(const GradedPresentation& tgt, const GradedPiece& pt,
                                   const GradedPresentation& src, const GradedPiece& ps,
                                   const Multideg& e, uint32_t coeff, const Multideg& a) {
  const PrimeField& F = src.ring->field;
  std::vector<int> tgt_pos(tgt.gen_degs.size(), -1);
  for (size_t k = 0; k < pt.active.size(); ++k) tgt_pos[pt.active[k]] = static_cast<int>(k);

  Mat<PrimeField> out(pt.dim(), ps.dim(), F);
  for (int col = 0; col < ps.dim(); ++col) {
    std::vector<uint32_t> q0(ps.dim(), 0);
    q0[col] = 1;
    std::vector<uint32_t> rep = ps.lift(F, q0);
    std::vector<uint32_t> img(pt.active.size(), 0);
    for (size_t k = 0; k < ps.active.size(); ++k) {
      if (rep[k] == 0) continue;
      int gen = ps.active[k];
      int p = tgt_pos[gen];
      assert(p >= 0 && "multiplication map hit an inactive target generator");
      img[p] = F.add(img[p], F.mul(rep[k], coeff));
    }
    auto q = pt.project(F, std::move(img));
    for (int r = 0; r < pt.dim(); ++r) out.at(r, col) = q[r];
  }
  (void)e;
  (void)a;
  return out;
}

}  // namespace lcwb
