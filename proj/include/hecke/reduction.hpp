#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/field.hpp"
#include "hecke/laurent.hpp"
#include "hecke/vertex.hpp"

namespace hecke {

/// Certificate for G(R-) M G(R+) = G(R-) diag(t^d) G(R+):
/// left * M * right == diag(t^{d_1}, ..., t^{d_n}).
struct ReductionWitness {
  LaurentMat left;   // over F_q[1/t], constant determinant
  LaurentMat right;  // over F_q[t], constant determinant
  Vertex d;

  /// Empty string when the witness certifies m, otherwise the reason.
  [[nodiscard]] std::string check(const LaurentMat& m) const {
    if (!is_glr_unit(left, Subring::RMinus)) return "left factor is not in GL_n(F_q[1/t])";
    if (!is_glr_unit(right, Subring::RPlus)) return "right factor is not in GL_n(F_q[t])";
    if (left * m * right != LaurentMat::diag_t(m.field(), d.coords())) return "left * M * right != diag(t^d)";
    return {};
  }
  [[nodiscard]] bool verify(const LaurentMat& m) const { return check(m).empty(); }
};

namespace detail {

/// Right kernel vector of a square F_q matrix (row-major codes), if singular.
inline std::optional<std::vector<FieldElem>> kernel_vector(const FieldCtx& f, std::vector<FieldElem> h, int n) {
  std::vector<int> pivot_col_of_row;
  std::vector<int> pivot_row_of_col(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int i = row; i < n; ++i)
      if (h[i * n + col].code != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(h[row * n + j], h[sel * n + j]);
    const FieldElem inv = f.inv_unchecked(h[row * n + col]);
    for (int j = 0; j < n; ++j) h[row * n + j] = f.mul_unchecked(h[row * n + j], inv);
    for (int i = 0; i < n; ++i) {
      if (i == row || h[i * n + col].code == 0) continue;
      const FieldElem c = h[i * n + col];
      for (int j = 0; j < n; ++j) h[i * n + j] = f.sub_unchecked(h[i * n + j], f.mul_unchecked(c, h[row * n + j]));
    }
    pivot_row_of_col[col] = row++;
  }
  if (row == n) return std::nullopt;
  int free_col = 0;
  while (pivot_row_of_col[free_col] >= 0) ++free_col;
  std::vector<FieldElem> v(n, f.zero());
  v[free_col] = f.one();
  for (int col = 0; col < n; ++col)
    if (pivot_row_of_col[col] >= 0) v[col] = f.neg_unchecked(h[pivot_row_of_col[col] * n + free_col]);
  return v;
}

inline void require_glr_pm(const LaurentMat& m) {
  const LaurentPoly det = mat_det(m);
  if (!det.is_monomial())
    throw ReductionError("matrix is not invertible over F_q[t, 1/t]: det = " + det.to_string());
}

}  // namespace detail

/// Standard representative of M in G(R-) \ GL_n(F_q[t,1/t]) / G(R+), with a
/// witness.
///
/// Column-reduces t^s M over F_q[t] (s clears negative powers) until the
/// leading-coefficient matrix H is invertible. Then P = t^s M R equals
/// U diag(t^delta) where U = P diag(t^-delta) has constant term H, so U lies
/// in GL_n(F_q[1/t]) and U^{-1} t^s M R = diag(t^delta).
inline ReductionWitness birkhoff_reduce(const LaurentMat& m) {
  detail::require_glr_pm(m);
  const Field& field = m.field();
  const FieldCtx& f = *field;
  const int n = m.size();
  const int shift = -m.min_valuation();
  LaurentMat p = m.shifted(shift);
  LaurentMat right = LaurentMat::identity(field, n);
  std::vector<int> delta(n);
  while (true) {
    for (int j = 0; j < n; ++j) {
      int dj = -1;
      for (int i = 0; i < n; ++i)
        if (!p(i, j).is_zero()) dj = std::max(dj, p(i, j).degree());
      delta[j] = dj;  // dj >= 0: det != 0 rules out zero columns
    }
    std::vector<FieldElem> h(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h[i * n + j] = p(i, j).coeff(delta[j]);
    auto alpha = detail::kernel_vector(f, std::move(h), n);
    if (!alpha) break;
    int j0 = -1;
    for (int j = 0; j < n; ++j)
      if ((*alpha)[j].code != 0 && (j0 < 0 || delta[j] > delta[j0])) j0 = j;
    const FieldElem a0_inv = f.inv_unchecked((*alpha)[j0]);
    for (int j = 0; j < n; ++j) {
      if (j == j0 || (*alpha)[j].code == 0) continue;
      const LaurentPoly factor = LaurentPoly::monomial(field, f.mul_unchecked((*alpha)[j], a0_inv), delta[j0] - delta[j]);
      for (int i = 0; i < n; ++i) {
        if (!p(i, j).is_zero()) p(i, j0) += p(i, j) * factor;
        if (!right(i, j).is_zero()) right(i, j0) += right(i, j) * factor;
      }
    }
  }
  LaurentMat u = p;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u(i, j) = u(i, j).shifted(-delta[j]);
  const LaurentMat u_inv = inverse(u);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return delta[a] > delta[b]; });
  LaurentMat left(field, n), right_sorted(field, n);
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = delta[order[i]] - shift;
    for (int j = 0; j < n; ++j) {
      left(i, j) = u_inv(order[i], j);
      right_sorted(j, i) = right(j, order[i]);
    }
  }
  return {std::move(left), std::move(right_sorted), Vertex(std::move(d))};
}

/// Splitting type of M computed from dimensions alone, with no polynomial
/// elimination.
///
/// With M = L^{-1} diag(t^d) R^{-1}, the F_q-space
///   V(m) = { u in F_q[t]^n : every entry of M u has t-degree <= m }
/// has dimension h(m) = sum_i max(0, m - d_i + 1), so
/// h(m) - h(m-1) = #{ i : d_i <= m }. Every d_i lies in
/// [-maxdeg(M^{-1}), maxdeg(M)], and any u in V(m) for m <= maxdeg(M) has
/// degree <= maxdeg(M) + maxdeg(M^{-1}), so truncating u there is exact.
inline Vertex splitting_type_cohomology(const LaurentMat& m) {
  detail::require_glr_pm(m);
  const FieldCtx& f = *m.field();
  const int n = m.size();
  const int top = m.max_degree();
  const int inv_top = inverse(m).max_degree();
  const int udeg = top + inv_top;  // >= 0 since M M^{-1} = I
  const int lo = m.min_valuation();
  const int m_lo = -inv_top - 1;
  const int cols = n * (udeg + 1);

  // Row (i, e): coefficient of t^e in (M u)_i as a linear form in u.
  auto make_row = [&](int i, int e) {
    std::vector<FieldElem> row(cols, f.zero());
    for (int j = 0; j < n; ++j)
      for (int l = 0; l <= udeg; ++l) row[j * (udeg + 1) + l] = m(i, j).coeff(e - l);
    return row;
  };

  std::vector<std::vector<FieldElem>> basis;
  std::vector<int> pivots;
  auto insert = [&](std::vector<FieldElem> v) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const FieldElem c = v[pivots[b]];
      if (c.code == 0) continue;
      for (int k = 0; k < cols; ++k)
        if (basis[b][k].code != 0) v[k] = f.sub_unchecked(v[k], f.mul_unchecked(c, basis[b][k]));
    }
    int piv = 0;
    while (piv < cols && v[piv].code == 0) ++piv;
    if (piv == cols) return;
    const FieldElem inv = f.inv_unchecked(v[piv]);
    for (FieldElem& x : v) x = f.mul_unchecked(x, inv);
    basis.push_back(std::move(v));
    pivots.push_back(piv);
  };

  // h[m - m_lo] for m in [m_lo, top].
  std::vector<int> h(top - m_lo + 1);
  const int e_max = top + udeg;
  int e = e_max;
  for (int mm = top; mm >= m_lo; --mm) {
    for (; e > mm; --e)
      if (e >= lo)
        for (int i = 0; i < n; ++i) insert(make_row(i, e));
    h[mm - m_lo] = cols - static_cast<int>(basis.size());
  }
  if (h[0] != 0) throw InvariantViolation("splitting_type_cohomology: nonzero sections below the degree window");

  std::vector<int> d;
  int prev_jump = 0;
  for (int mm = m_lo + 1; mm <= top; ++mm) {
    const int jump = h[mm - m_lo] - h[mm - 1 - m_lo];
    if (jump < prev_jump || jump > n) throw InvariantViolation("splitting_type_cohomology: inconsistent jump sequence");
    for (int c = 0; c < jump - prev_jump; ++c) d.push_back(mm);
    prev_jump = jump;
  }
  if (prev_jump != n) throw InvariantViolation("splitting_type_cohomology: degree window did not capture every summand");
  return Vertex::sorted(std::move(d));
}

}  // namespace hecke
