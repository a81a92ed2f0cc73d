#ifndef LCWB_LINALG_HPP
#define LCWB_LINALG_HPP

#include <cassert>
#include <cstdint>
#include <vector>

namespace lcwb {

// Dense matrices over an exact field. Field is a context type exposing
// Elem, zero/one, is_zero, add/sub/mul/neg/inv. Sizes here are small (graded
// pieces, Cech cochains per degree), so dense Gaussian elimination is the
// right tool.
template <class Field>
struct Mat {
  using E = typename Field::Elem;
  int rows = 0, cols = 0;
  std::vector<E> a;

  Mat() = default;
  Mat(int r, int c, const Field& F) : rows(r), cols(c), a(static_cast<size_t>(r) * c, F.zero()) {}

  E& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const E& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n, const Field& F) {
    Mat m(n, n, F);
    for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
  }

  std::vector<E> col(int j) const {
    std::vector<E> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  void set_col(int j, const std::vector<E>& v) {
    assert(static_cast<int>(v.size()) == rows);
    for (int i = 0; i < rows; ++i) at(i, j) = v[i];
  }
};

template <class Field>
Mat<Field> mat_mul(const Field& F, const Mat<Field>& A, const Mat<Field>& B) {
  assert(A.cols == B.rows);
  Mat<Field> C(A.rows, B.cols, F);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (F.is_zero(A.at(i, k))) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(A.at(i, k), B.at(k, j)));
    }
  return C;
}

template <class Field>
Mat<Field> mat_add(const Field& F, const Mat<Field>& A, const Mat<Field>& B) {
  assert(A.rows == B.rows && A.cols == B.cols);
  Mat<Field> C(A.rows, A.cols, F);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
  return C;
}

template <class Field>
std::vector<typename Field::Elem> mat_apply(const Field& F, const Mat<Field>& A,
                                            const std::vector<typename Field::Elem>& x) {
  assert(static_cast<int>(x.size()) == A.cols);
  std::vector<typename Field::Elem> y(A.rows, F.zero());
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (!F.is_zero(A.at(i, j))) y[i] = F.add(y[i], F.mul(A.at(i, j), x[j]));
  return y;
}

template <class Field>
bool mat_is_zero(const Field& F, const Mat<Field>& A) {
  for (auto& e : A.a)
    if (!F.is_zero(e)) return false;
  return true;
}

// Column-echelon basis of a subspace of F^n. Columns are reduced so that each
// has a pivot row holding 1 with zeros in that row across all other columns.
template <class Field>
struct ColSpace {
  using E = typename Field::Elem;
  int n = 0;                 // ambient dimension
  Mat<Field> basis;          // n x dim
  std::vector<int> pivots;   // pivot row per column, strictly increasing? no: per insertion
  std::vector<char> is_pivot_row;

  explicit ColSpace(int ambient = 0) : n(ambient) {}

  int dim() const { return basis.cols; }
};

// Reduce v against the echelon basis in place; returns the coefficients used.
template <class Field>
std::vector<typename Field::Elem> colspace_reduce(const Field& F, const ColSpace<Field>& S,
                                                  std::vector<typename Field::Elem>& v) {
  std::vector<typename Field::Elem> coeff(S.dim(), F.zero());
  for (int j = 0; j < S.dim(); ++j) {
    int pr = S.pivots[j];
    if (F.is_zero(v[pr])) continue;
    typename Field::Elem c = v[pr];
    coeff[j] = c;
    for (int i = 0; i < S.n; ++i)
      if (!F.is_zero(S.basis.at(i, j))) v[i] = F.sub(v[i], F.mul(c, S.basis.at(i, j)));
  }
  return coeff;
}

// Insert v into the space; returns false if v was already in the span.
template <class Field>
bool colspace_insert(const Field& F, ColSpace<Field>& S, std::vector<typename Field::Elem> v) {
  if (S.is_pivot_row.empty()) S.is_pivot_row.assign(S.n, 0);
  colspace_reduce(F, S, v);
  int pivot = -1;
  for (int i = 0; i < S.n; ++i)
    if (!F.is_zero(v[i])) {
      pivot = i;
      break;
    }
  if (pivot < 0) return false;
  typename Field::Elem inv = F.inv(v[pivot]);
  for (int i = 0; i < S.n; ++i) v[i] = F.mul(v[i], inv);
  // back-substitute into existing columns to keep the pivot row clean
  for (int j = 0; j < S.dim(); ++j) {
    typename Field::Elem c = S.basis.at(pivot, j);
    if (F.is_zero(c)) continue;
    for (int i = 0; i < S.n; ++i)
      S.basis.at(i, j) = F.sub(S.basis.at(i, j), F.mul(c, v[i]));
  }
  Mat<Field> nb(S.n, S.dim() + 1, F);
  for (int i = 0; i < S.n; ++i) {
    for (int j = 0; j < S.dim(); ++j) nb.at(i, j) = S.basis.at(i, j);
    nb.at(i, S.dim()) = v[i];
  }
  S.basis = std::move(nb);
  S.pivots.push_back(pivot);
  S.is_pivot_row[pivot] = 1;
  return true;
}

template <class Field>
ColSpace<Field> colspace_from(const Field& F, const Mat<Field>& A) {
  ColSpace<Field> S(A.rows);
  S.basis = Mat<Field>(A.rows, 0, F);
  S.is_pivot_row.assign(A.rows, 0);
  for (int j = 0; j < A.cols; ++j) colspace_insert(F, S, A.col(j));
  return S;
}

template <class Field>
bool colspace_contains(const Field& F, const ColSpace<Field>& S,
                       std::vector<typename Field::Elem> v) {
  colspace_reduce(F, S, v);
  for (auto& e : v)
    if (!F.is_zero(e)) return false;
  return true;
}

template <class Field>
int mat_rank(const Field& F, const Mat<Field>& A) {
  return colspace_from(F, A).dim();
}

// Kernel of A as a matrix whose columns form a basis of {x : A x = 0}.
template <class Field>
Mat<Field> mat_kernel(const Field& F, const Mat<Field>& A) {
  int m = A.rows, n = A.cols;
  // row-reduce a working copy
  Mat<Field> R = A;
  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(n, -1);
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i)
      if (!F.is_zero(R.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < n; ++j) std::swap(R.at(pr, j), R.at(r, j));
    typename Field::Elem inv = F.inv(R.at(r, c));
    for (int j = 0; j < n; ++j) R.at(r, j) = F.mul(R.at(r, j), inv);
    for (int i = 0; i < m; ++i) {
      if (i == r || F.is_zero(R.at(i, c))) continue;
      typename Field::Elem f = R.at(i, c);
      for (int j = 0; j < n; ++j) R.at(i, j) = F.sub(R.at(i, j), F.mul(f, R.at(r, j)));
    }
    pivot_col_of_row.push_back(c);
    pivot_row_of_col[c] = r;
    ++r;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (pivot_row_of_col[c] < 0) free_cols.push_back(c);
  Mat<Field> K(n, static_cast<int>(free_cols.size()), F);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    K.at(fc, static_cast<int>(k)) = F.one();
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
      int pc = pivot_col_of_row[i];
      K.at(pc, static_cast<int>(k)) = F.neg(R.at(static_cast<int>(i), fc));
    }
  }
  return K;
}

// One solution of A x = b, if consistent.
template <class Field>
bool mat_solve(const Field& F, const Mat<Field>& A, std::vector<typename Field::Elem> b,
               std::vector<typename Field::Elem>& x) {
  ColSpace<Field> S(A.rows);
  S.basis = Mat<Field>(A.rows, 0, F);
  S.is_pivot_row.assign(A.rows, 0);
  // track expressions of basis columns in terms of original columns
  std::vector<std::vector<typename Field::Elem>> expr;
  for (int j = 0; j < A.cols; ++j) {
    auto v = A.col(j);
    auto coeff = colspace_reduce(F, S, v);
    int pivot = -1;
    for (int i = 0; i < S.n; ++i)
      if (!F.is_zero(v[i])) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::vector<typename Field::Elem> e(A.cols, F.zero());
    e[j] = F.one();
    for (int k = 0; k < static_cast<int>(coeff.size()); ++k) {
      if (F.is_zero(coeff[k])) continue;
      for (int t = 0; t < A.cols; ++t)
        e[t] = F.sub(e[t], F.mul(coeff[k], expr[k][t]));
    }
    typename Field::Elem inv = F.inv(v[pivot]);
    for (int i = 0; i < S.n; ++i) v[i] = F.mul(v[i], inv);
    for (auto& c : e) c = F.mul(c, inv);
    for (int k = 0; k < S.dim(); ++k) {
      typename Field::Elem c = S.basis.at(pivot, k);
      if (F.is_zero(c)) continue;
      for (int i = 0; i < S.n; ++i)
        S.basis.at(i, k) = F.sub(S.basis.at(i, k), F.mul(c, v[i]));
      for (int t = 0; t < A.cols; ++t)
        expr[k][t] = F.sub(expr[k][t], F.mul(c, e[t]));
    }
    Mat<Field> nb(S.n, S.dim() + 1, F);
    for (int i = 0; i < S.n; ++i) {
      for (int k = 0; k < S.dim(); ++k) nb.at(i, k) = S.basis.at(i, k);
      nb.at(i, S.dim()) = v[i];
    }
    S.basis = std::move(nb);
    S.pivots.push_back(pivot);
    S.is_pivot_row[pivot] = 1;
    expr.push_back(std::move(e));
  }
  auto coeff = colspace_reduce(F, S, b);
  for (auto& e : b)
    if (!F.is_zero(e)) return false;
  x.assign(A.cols, F.zero());
  for (int k = 0; k < static_cast<int>(coeff.size()); ++k) {
    if (F.is_zero(coeff[k])) continue;
    for (int t = 0; t < A.cols; ++t)
      x[t] = F.add(x[t], F.mul(coeff[k], expr[k][t]));
  }
  return true;
}

// -------- subspace lattice helpers (used by the page computations) --------

// span(U) + span(V)
template <class Field>
ColSpace<Field> space_sum(const Field& F, const ColSpace<Field>& U, const ColSpace<Field>& V) {
  ColSpace<Field> S = U;
  for (int j = 0; j < V.dim(); ++j) colspace_insert(F, S, V.basis.col(j));
  return S;
}

// span(U) ∩ span(V) via kernel of [U | V]
template <class Field>
ColSpace<Field> space_intersect(const Field& F, const ColSpace<Field>& U,
                                const ColSpace<Field>& V) {
  assert(U.n == V.n);
  Mat<Field> J(U.n, U.dim() + V.dim(), F);
  for (int i = 0; i < U.n; ++i) {
    for (int j = 0; j < U.dim(); ++j) J.at(i, j) = U.basis.at(i, j);
    for (int j = 0; j < V.dim(); ++j) J.at(i, U.dim() + j) = F.neg(V.basis.at(i, j));
  }
  Mat<Field> K = mat_kernel(F, J);
  Mat<Field> W(U.n, K.cols, F);
  for (int k = 0; k < K.cols; ++k) {
    std::vector<typename Field::Elem> w(U.n, F.zero());
    for (int j = 0; j < U.dim(); ++j) {
      if (F.is_zero(K.at(j, k))) continue;
      for (int i = 0; i < U.n; ++i)
        w[i] = F.add(w[i], F.mul(K.at(j, k), U.basis.at(i, j)));
    }
    W.set_col(k, w);
  }
  return colspace_from(F, W);
}

// {x : A x ∈ span(W)}; A maps F^n -> F^m, W ⊆ F^m
template <class Field>
ColSpace<Field> space_preimage(const Field& F, const Mat<Field>& A, const ColSpace<Field>& W) {
  assert(A.rows == W.n);
  Mat<Field> J(A.rows, A.cols + W.dim(), F);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) J.at(i, j) = A.at(i, j);
    for (int j = 0; j < W.dim(); ++j) J.at(i, A.cols + j) = F.neg(W.basis.at(i, j));
  }
  Mat<Field> K = mat_kernel(F, J);
  Mat<Field> X(A.cols, K.cols, F);
  for (int k = 0; k < K.cols; ++k)
    for (int j = 0; j < A.cols; ++j) X.at(j, k) = K.at(j, k);
  return colspace_from(F, X);
}

// image of span(U) under A
template <class Field>
ColSpace<Field> space_image(const Field& F, const Mat<Field>& A, const ColSpace<Field>& U) {
  assert(A.cols == U.n);
  Mat<Field> AU = mat_mul(F, A, U.basis);
  return colspace_from(F, AU);
}

// dim(span(U)/span(V) ∩ span(U)); V need not be inside U
template <class Field>
int space_quotient_dim(const Field& F, const ColSpace<Field>& U, const ColSpace<Field>& V) {
  ColSpace<Field> S = V;
  int extra = 0;
  for (int j = 0; j < U.dim(); ++j)
    if (colspace_insert(F, S, U.basis.col(j))) ++extra;
  return extra;
}

}  // namespace lcwb

#endif
