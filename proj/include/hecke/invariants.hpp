#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "hecke/hecke.hpp"

namespace hecke {

/// Splitting degrees e_1 >= ... >= e_n of the bundle attached to a vertex.
///
/// Exponent coordinates grow by r * dx along an edge while sheaf degrees
/// drop by r * dx, so e = sort_desc(-d).
class SheafType {
 public:
  explicit SheafType(std::vector<int> e) : e_(std::move(e)) {
    if (!std::is_sorted(e_.begin(), e_.end(), std::greater<>{})) throw RangeError("SheafType: degrees must be non-increasing");
  }
  [[nodiscard]] const std::vector<int>& degrees() const noexcept { return e_; }
  [[nodiscard]] int rank() const noexcept { return static_cast<int>(e_.size()); }
  [[nodiscard]] long long degree() const noexcept {
    long long s = 0;
    for (int x : e_) s += x;
    return s;
  }
  friend bool operator==(const SheafType&, const SheafType&) = default;

 private:
  std::vector<int> e_;
};

inline SheafType sheaf_degrees(const Vertex& v) {
  std::vector<int> e;
  e.reserve(v.size());
  for (int x : v.coords()) e.push_back(-x);
  std::sort(e.begin(), e.end(), std::greater<>{});
  return SheafType(std::move(e));
}

/// delta_k(E) = n * (e_1 + ... + e_k) - k * deg(E), the value of
/// rk(E) deg(F) - rk(F) deg(E) at the sum F of the k largest summands.
inline long long delta_k(const SheafType& e, int k) {
  const int n = e.rank();
  if (k < 1 || k > n - 1) throw RangeError("delta_k: need 1 <= k <= n - 1");
  long long top = 0;
  for (int i = 0; i < k; ++i) top += e.degrees()[i];
  return n * top - k * e.degree();
}

/// Necessary condition for an edge: delta_k(dst) must be delta_k(src) - k*dx*(n-r) + j*n for
/// some j >= 0 and at most delta_k(src) + k*dx*r.
inline bool check_delta_constraint(const HeckeParams& p, const Edge& edge, int k) {
  p.validate();
  if (k < 1 || k > p.n - 1) throw RangeError("check_delta_constraint: need 1 <= k <= n - 1");
  const long long src = delta_k(sheaf_degrees(edge.src), k);
  const long long dst = delta_k(sheaf_degrees(edge.dst), k);
  const long long low = src - static_cast<long long>(k) * p.dx * (p.n - p.r);
  const long long high = src + static_cast<long long>(k) * p.dx * p.r;
  return dst >= low && dst <= high && (dst - low) % p.n == 0;
}

/// Every r-subset S gives the target sort(v + dx * 1_S) with positive weight.
inline bool subset_twist_support(const HeckeParams& p, const Vertex& v, const EdgeSet& nbrs) {
  p.validate();
  std::vector<int> pick(p.n, 0);
  std::fill(pick.end() - p.r, pick.end(), 1);
  do {
    std::vector<int> d = v.coords();
    for (int i = 0; i < p.n; ++i) d[i] += p.dx * pick[i];
    if (nbrs.mult(Vertex::sorted(std::move(d))) <= Rational(0)) return false;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return true;
}

inline bool subset_twist_support(const HeckeParams& p, const Vertex& v) { return subset_twist_support(p, v, neighbors(p, v)); }

}  // namespace hecke
