#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/field.hpp"
#include "hecke/laurent.hpp"

namespace hecke {

/// Strictly increasing 1-based positions (j_1 < ... < j_k) in [1, n].
class SchubertIndex {
 public:
  SchubertIndex() = default;
  SchubertIndex(std::vector<int> positions, int n) : positions_(std::move(positions)) {
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      if (positions_[i] < 1 || positions_[i] > n) throw RangeError("SchubertIndex: position out of [1, n]");
      if (i > 0 && positions_[i - 1] >= positions_[i]) throw RangeError("SchubertIndex: positions must increase strictly");
    }
  }

  [[nodiscard]] const std::vector<int>& positions() const noexcept { return positions_; }
  [[nodiscard]] std::size_t size() const noexcept { return positions_.size(); }
  [[nodiscard]] bool contains(int position) const noexcept {
    for (int p : positions_)
      if (p == position) return true;
    return false;
  }

  friend auto operator<=>(const SchubertIndex&, const SchubertIndex&) = default;

 private:
  std::vector<int> positions_;
};

/// All C(n, k) index tuples, lexicographic.
inline std::vector<SchubertIndex> schubert_indices(int k, int n) {
  if (n < 0 || k < 0 || k > n) throw RangeError("schubert_indices: need 0 <= k <= n");
  std::vector<SchubertIndex> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(cur, n);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw RangeError("gaussian_binomial: result overflows 64 bits");
  return r;
}
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw RangeError("gaussian_binomial: result overflows 64 bits");
  return r;
}

}  // namespace detail

/// #Gr(k, n)(F_Q), via the q-Pascal rule [n,k] = [n-1,k-1] + Q^k [n-1,k].
inline std::uint64_t gaussian_binomial(int k, int n, std::uint64_t Q) {
  if (n < 0 || k < 0 || k > n) throw RangeError("gaussian_binomial: need 0 <= k <= n");
  if (Q < 2) throw RangeError("gaussian_binomial: Q must be >= 2");
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (int i = 0; i < j; ++i) qj = detail::checked_mul(qj, Q);
      row[j] = detail::checked_add(row[j - 1], j <= m - 1 ? detail::checked_mul(qj, row[j]) : 0);
    }
  }
  return row[k];
}

/// Upper-triangular coset representative for a degree-dx place.
///
/// Diagonal entry i is 1 for i in lambda and t^dx otherwise; entry (i, j),
/// i < j, is a polynomial of degree < dx exactly when diagonal i is t^dx and
/// diagonal j is 1. free_coeffs lists those coefficients position by position
/// (row-major), constant term first.
struct DeltaMatrix {
  LaurentMat mat;
  SchubertIndex lambda;
  std::vector<FieldElem> free_coeffs;
};

/// Free (row, col) slots of the representative for lambda, 0-based, row-major.
inline std::vector<std::pair<int, int>> delta_free_slots(const SchubertIndex& lambda, int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!lambda.contains(i) && lambda.contains(j)) slots.emplace_back(i - 1, j - 1);
  return slots;
}

/// The gaussian_binomial(n - r, n, q^dx) representatives for Phi_{x,r}, in
/// (lambda, coefficient vector) lexicographic order.
inline std::vector<DeltaMatrix> enumerate_delta_matrices(const Field& field, int n, int r, int dx) {
  if (n < 1) throw RangeError("enumerate_delta_matrices: n must be >= 1");
  if (r < 1 || r > n) throw RangeError("enumerate_delta_matrices: need 1 <= r <= n");
  if (dx < 1) throw RangeError("enumerate_delta_matrices: dx must be >= 1");
  const std::uint32_t q = field->q();
  std::vector<DeltaMatrix> out;
  for (const SchubertIndex& lambda : schubert_indices(n - r, n)) {
    LaurentMat base(field, n);
    for (int i = 1; i <= n; ++i) base(i - 1, i - 1) = LaurentPoly::t_pow(field, lambda.contains(i) ? 0 : dx);
    const auto slots = delta_free_slots(lambda, n);
    const std::size_t nfree = slots.size() * static_cast<std::size_t>(dx);
    std::vector<FieldElem> coeffs(nfree, field->zero());
    while (true) {
      DeltaMatrix dm{base, lambda, coeffs};
      for (std::size_t s = 0; s < slots.size(); ++s) {
        std::vector<FieldElem> poly(coeffs.begin() + static_cast<std::ptrdiff_t>(s * dx),
                                    coeffs.begin() + static_cast<std::ptrdiff_t>((s + 1) * dx));
        dm.mat(slots[s].first, slots[s].second) = LaurentPoly(field, 0, std::move(poly));
      }
      out.push_back(std::move(dm));
      // Odometer with the last coordinate fastest.
      std::size_t i = nfree;
      while (i > 0 && coeffs[i - 1].code == q - 1) coeffs[--i] = field->zero();
      if (i == 0) break;
      ++coeffs[i - 1].code;
    }
  }
  return out;
}

}  // namespace hecke
