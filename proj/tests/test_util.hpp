#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "hecke/laurent.hpp"

namespace hecke::testutil {

/// sum_i c[i] t^{offset + i} with prime-field integer coefficients.
inline LaurentPoly lp(const Field& f, std::initializer_list<int> c, int offset = 0) {
  std::vector<FieldElem> v;
  for (int x : c) v.push_back(f->from_int(x));
  return LaurentPoly(f, offset, v);
}

inline LaurentMat mat(const Field& f, std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
  std::vector<std::vector<LaurentPoly>> r;
  for (const auto& row : rows) r.emplace_back(row);
  return LaurentMat::from_rows(f, r);
}

inline LaurentPoly random_poly(const Field& f, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<std::uint32_t> coef(0, f->q() - 1);
  std::vector<FieldElem> c;
  for (int k = lo; k <= hi; ++k) c.push_back({coef(rng)});
  return LaurentPoly(f, lo, c);
}

inline LaurentMat random_mat(const Field& f, int n, std::mt19937_64& rng, int lo, int hi) {
  LaurentMat m(f, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_poly(f, rng, lo, hi);
  return m;
}

/// Random element of GL_n(F_q[t]) as a product of elementary matrices.
inline LaurentMat random_unimodular_plus(const Field& f, int n, std::mt19937_64& rng, int steps, int maxdeg) {
  LaurentMat m = LaurentMat::identity(f, n);
  std::uniform_int_distribution<int> idx(0, n - 1);
  for (int s = 0; s < steps && n > 1; ++s) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    LaurentMat e = LaurentMat::identity(f, n);
    e(i, j) = random_poly(f, rng, 0, maxdeg);
    m = m * e;
  }
  return m;
}

/// Same over F_q[1/t].
inline LaurentMat random_unimodular_minus(const Field& f, int n, std::mt19937_64& rng, int steps, int maxdeg) {
  LaurentMat m = LaurentMat::identity(f, n);
  std::uniform_int_distribution<int> idx(0, n - 1);
  for (int s = 0; s < steps && n > 1; ++s) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    LaurentMat e = LaurentMat::identity(f, n);
    e(i, j) = random_poly(f, rng, -maxdeg, 0);
    m = m * e;
  }
  return m;
}

}  // namespace hecke::testutil
