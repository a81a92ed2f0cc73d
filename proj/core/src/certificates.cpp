#include <functional>

#include "lcwb/error.hpp"
#include "lcwb/primes.hpp"

namespace lcwb {

namespace {

// polynomial in X with coefficients in R, index = X-power
using XPoly = std::vector<Poly>;

XPoly xp_zero() { return {}; }

void xp_trim(XPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

XPoly xp_add(const RingPtr& ring, const XPoly& a, const XPoly& b) {
  XPoly r(std::max(a.size(), b.size()), Poly::zero(ring));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = r[i] + a[i];
    if (i < b.size()) r[i] = r[i] + b[i];
  }
  xp_trim(r);
  return r;
}

XPoly xp_mul(const RingPtr& ring, const XPoly& a, const XPoly& b) {
  if (a.empty() || b.empty()) return {};
  XPoly r(a.size() + b.size() - 1, Poly::zero(ring));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  xp_trim(r);
  return r;
}

XPoly xp_neg(const XPoly& a) {
  XPoly r = a;
  for (auto& p : r) p = -p;
  return r;
}

// determinant of a k x k matrix over R[X] by Laplace expansion along the
// first remaining column (k stays small: the generator count)
XPoly xp_det(const RingPtr& ring, const std::vector<std::vector<XPoly>>& m,
             std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return XPoly{Poly::constant(ring, 1)};
  int c = cols[0];
  std::vector<int> rest_cols(cols.begin() + 1, cols.end());
  XPoly acc = xp_zero();
  for (size_t k = 0; k < rows.size(); ++k) {
    const XPoly& entry = m[rows[k]][c];
    if (entry.empty()) continue;
    std::vector<int> rest_rows;
    for (size_t t = 0; t < rows.size(); ++t)
      if (t != k) rest_rows.push_back(rows[t]);
    XPoly minor = xp_det(ring, m, rest_rows, rest_cols);
    XPoly term = xp_mul(ring, entry, minor);
    if (k % 2 == 1) term = xp_neg(term);
    acc = xp_add(ring, acc, term);
  }
  return acc;
}

}  // namespace

IntegralityCertificate integrality_certificate(const ModuleObject& M, const PolyMat& phi,
                                               const Ideal& Iprime) {
  const RingPtr& ring = M.ring();
  int n = M.ngens();
  if (static_cast<int>(phi.size()) != n)
    throw Error(ErrorCode::TypeMismatch, "endomorphism matrix has wrong shape");

  // columns g * e_i for generators g of I', then relations; lifting through
  // these expresses phi(e_j) with coefficients in I'
  PolyMat lift_cols;
  struct ColInfo {
    Poly gen;
    int row;
  };
  std::vector<ColInfo> info;
  for (auto& g : Iprime.gens())
    for (int i = 0; i < n; ++i) {
      PolyVec v = pv_zero(ring, n);
      v[i] = g;
      lift_cols.push_back(std::move(v));
      info.push_back({g, i});
    }
  size_t nlift = lift_cols.size();
  for (auto& c : M.relations()) lift_cols.push_back(c);

  ModuleGB gb(ring, n, lift_cols, MonomialOrder::degrevlex(), /*track=*/true);

  // C[j][i] in I' with phi(e_j) = sum_i C[j][i] e_i modulo relations
  std::vector<std::vector<Poly>> C(n, std::vector<Poly>(n, Poly::zero(ring)));
  for (int j = 0; j < n; ++j) {
    std::vector<Poly> cof;
    PolyVec rem = gb.normal_form_cofactors(phi[j], cof);
    if (!pv_is_zero(rem))
      throw Error(ErrorCode::NotIntoIdealTimesModule,
                  "phi does not map the module into I' * M");
    for (size_t k = 0; k < nlift; ++k) {
      if (cof[k].is_zero()) continue;
      C[j][info[k].row] = C[j][info[k].row] + cof[k] * info[k].gen;
    }
  }

  // characteristic polynomial det(X I - C) = X^n + p(X)
  std::vector<std::vector<XPoly>> m(n, std::vector<XPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      XPoly e;
      // entry (i,j) of X*I - C^T acting on column vectors: the matrix of the
      // endomorphism has (i,j) entry C[j][i]
      Poly cij = C[j][i];
      if (!cij.is_zero()) e = XPoly{-cij};
      if (i == j) {
        if (e.empty()) e = XPoly{Poly::zero(ring)};
        e.resize(2, Poly::zero(ring));
        e[1] = Poly::constant(ring, 1);
      }
      xp_trim(e);
      m[i][j] = std::move(e);
    }
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  XPoly chi = xp_det(ring, m, idx, idx);
  chi.resize(n + 1, Poly::zero(ring));

  IntegralityCertificate cert;
  cert.n = n;
  cert.lower.assign(chi.begin(), chi.begin() + n);

  // verification: phi^n + sum lower[k] phi^k annihilates every generator
  std::vector<PolyMat> powers;
  powers.push_back(pm_identity(ring, n));
  for (int k = 1; k <= n; ++k) powers.push_back(pm_mul(phi, powers.back()));
  cert.verified = true;
  for (int j = 0; j < n; ++j) {
    PolyVec total = powers[n][j];
    for (int k = 0; k < n; ++k)
      if (!cert.lower[k].is_zero()) total = pv_add(total, pv_scale(powers[k][j], cert.lower[k]));
    if (!M.is_zero_in_module(total)) {
      cert.verified = false;
      break;
    }
  }
  if (!cert.verified)
    throw Error(ErrorCode::Internal, "integrality certificate failed verification");
  // coefficients must land in I'
  for (auto& c : cert.lower)
    if (!c.is_zero() && !Iprime.contains(c))
      throw Error(ErrorCode::Internal, "certificate coefficient escaped I'");
  return cert;
}

Poly nakayama_witness(const ModuleObject& M, const Ideal& Iprime) {
  const RingPtr& ring = M.ring();
  if (M.is_zero_module()) return Poly::constant(ring, 1);
  // precondition M = I'M
  PolyMat cols;
  for (auto& g : Iprime.gens())
    for (int i = 0; i < M.ngens(); ++i) {
      PolyVec v = pv_zero(ring, M.ngens());
      v[i] = g;
      cols.push_back(std::move(v));
    }
  for (int i = 0; i < M.ngens(); ++i) {
    PolyVec e = pv_zero(ring, M.ngens());
    e[i] = Poly::constant(ring, 1);
    if (!M.in_span(cols, e))
      throw Error(ErrorCode::PreconditionFailed, "M != I'M");
  }
  IntegralityCertificate cert = integrality_certificate(M, pm_identity(ring, M.ngens()), Iprime);
  Poly p1 = Poly::zero(ring);
  for (auto& c : cert.lower) p1 = p1 + c;
  Poly t = Poly::constant(ring, 1) + p1;
  // verify t kills every generator
  for (int i = 0; i < M.ngens(); ++i) {
    PolyVec v = pv_zero(ring, M.ngens());
    v[i] = t;
    if (!M.is_zero_in_module(v))
      throw Error(ErrorCode::Internal, "nakayama witness does not annihilate the module");
  }
  return t;
}

RadicalIdentityReport radical_annihilator_identity(const ModuleObject& M, const Ideal& Iprime) {
  RadicalIdentityReport rep;
  SubobjectHandle IM = ideal_times_subobject(Iprime, whole_subobject(M.shared()));
  ModuleObject Q = quotient_object(M, IM);
  rep.ann_quotient = annihilator(Q);
  rep.ann_plus = ideal_sum(annihilator(M), Iprime);
  rep.radicals_equal = ideal_in_radical(rep.ann_quotient, rep.ann_plus) &&
                       ideal_in_radical(rep.ann_plus, rep.ann_quotient);
  return rep;
}

}  // namespace lcwb
