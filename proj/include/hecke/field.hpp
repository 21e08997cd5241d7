#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

/// Default cap on q = p^e accepted by make_field.
inline constexpr std::uint64_t kDefaultFieldBound = 1u << 16;

/// An element of F_q, stored as its code in the owning FieldCtx.
///
/// Codes are the positions of the coefficient vectors (c_0, ..., c_{e-1}) in
/// lexicographic order, so code 0 is zero and enumeration order is code order.
struct FieldElem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Finite field F_{p^e} realized as F_p[x]/(modulus).
///
/// Immutable after construction. Small fields (q <= 256) use full addition
/// and multiplication tables; larger ones use log/antilog tables for
/// multiplication and digit-wise addition.
class FieldCtx {
 public:
  FieldCtx(int p, int e, std::uint64_t bound = kDefaultFieldBound) : p_(p), e_(e) {
    if (p < 2 || !is_prime(p)) throw FieldError("make_field: p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw FieldError("make_field: extension degree must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) {
      q *= static_cast<std::uint64_t>(p);
      if (q > bound) throw FieldError("make_field: p^e exceeds the cardinality bound " + std::to_string(bound));
    }
    q_ = static_cast<std::uint32_t>(q);
    pow_p_.assign(e_ + 1, 1);
    for (int i = 1; i <= e_; ++i) pow_p_[i] = pow_p_[i - 1] * static_cast<std::uint32_t>(p_);
    modulus_ = find_modulus();
    build_tables();
  }

  [[nodiscard]] int p() const noexcept { return p_; }
  [[nodiscard]] int e() const noexcept { return e_; }
  [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
  /// Monic irreducible of degree e, coefficients low-to-high (size e + 1).
  [[nodiscard]] const std::vector<int>& modulus() const noexcept { return modulus_; }

  [[nodiscard]] bool contains(FieldElem a) const noexcept { return a.code < q_; }
  [[nodiscard]] FieldElem zero() const noexcept { return {0}; }
  [[nodiscard]] FieldElem one() const noexcept { return {pow_p_[e_ - 1]}; }

  /// Image of an integer in the prime subfield.
  [[nodiscard]] FieldElem from_int(long long v) const noexcept {
    long long r = v % p_;
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r) * pow_p_[e_ - 1]};
  }

  [[nodiscard]] FieldElem from_coeffs(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != e_) throw FieldError("from_coeffs: expected " + std::to_string(e_) + " coefficients");
    std::uint32_t code = 0;
    for (int i = 0; i < e_; ++i) {
      if (c[i] < 0 || c[i] >= p_) throw FieldError("from_coeffs: coefficient out of range");
      code = code * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(c[i]);
    }
    return {code};
  }

  [[nodiscard]] std::vector<int> coeffs(FieldElem a) const {
    check(a);
    std::vector<int> c(e_);
    std::uint32_t code = a.code;
    for (int i = e_ - 1; i >= 0; --i) {
      c[i] = static_cast<int>(code % p_);
      code /= p_;
    }
    return c;
  }

  [[nodiscard]] FieldElem add(FieldElem a, FieldElem b) const {
    check(a), check(b);
    return add_unchecked(a, b);
  }
  [[nodiscard]] FieldElem sub(FieldElem a, FieldElem b) const {
    check(a), check(b);
    return add_unchecked(a, neg_unchecked(b));
  }
  [[nodiscard]] FieldElem neg(FieldElem a) const {
    check(a);
    return neg_unchecked(a);
  }
  [[nodiscard]] FieldElem mul(FieldElem a, FieldElem b) const {
    check(a), check(b);
    return mul_unchecked(a, b);
  }
  [[nodiscard]] FieldElem inv(FieldElem a) const {
    check(a);
    if (a.code == 0) throw FieldError("inv: zero has no inverse");
    return {inv_[a.code]};
  }
  [[nodiscard]] FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

  [[nodiscard]] FieldElem pow(FieldElem a, std::uint64_t k) const {
    check(a);
    FieldElem result = one(), base = a;
    while (k > 0) {
      if (k & 1u) result = mul_unchecked(result, base);
      base = mul_unchecked(base, base);
      k >>= 1u;
    }
    return result;
  }

  /// Multiplicative order of a nonzero element.
  [[nodiscard]] std::uint32_t order(FieldElem a) const {
    check(a);
    if (a.code == 0) throw FieldError("order: zero has no multiplicative order");
    std::uint32_t k = 1;
    for (FieldElem x = a; x != one(); x = mul_unchecked(x, a)) ++k;
    return k;
  }

  /// All q elements, zero first, lexicographic on coefficient vectors.
  [[nodiscard]] std::vector<FieldElem> elements() const {
    std::vector<FieldElem> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
    return out;
  }

  /// Canonical integer for prime fields, "[c0,c1,...]" for extensions.
  [[nodiscard]] std::string to_string(FieldElem a) const {
    if (e_ == 1) return std::to_string(a.code);
    std::string s = "[";
    auto c = coeffs(a);
    for (int i = 0; i < e_; ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
  }

  // Hot-path primitives: callers guarantee operands belong to this field.
  [[nodiscard]] FieldElem add_unchecked(FieldElem a, FieldElem b) const noexcept {
    if (!add_table_.empty()) return {add_table_[a.code * q_ + b.code]};
    std::uint32_t r = 0, x = a.code, y = b.code;
    for (int i = 0; i < e_; ++i) {
      std::uint32_t d = x % p_ + y % p_;
      if (d >= static_cast<std::uint32_t>(p_)) d -= p_;
      r += d * pow_p_[i];
      x /= p_, y /= p_;
    }
    return {r};
  }
  [[nodiscard]] FieldElem neg_unchecked(FieldElem a) const noexcept { return {neg_[a.code]}; }
  [[nodiscard]] FieldElem sub_unchecked(FieldElem a, FieldElem b) const noexcept {
    return add_unchecked(a, neg_unchecked(b));
  }
  [[nodiscard]] FieldElem mul_unchecked(FieldElem a, FieldElem b) const noexcept {
    if (!mul_table_.empty()) return {mul_table_[a.code * q_ + b.code]};
    if (a.code == 0 || b.code == 0) return {0};
    std::uint32_t l = log_[a.code] + log_[b.code];
    if (l >= q_ - 1) l -= q_ - 1;
    return {exp_[l]};
  }
  [[nodiscard]] FieldElem inv_unchecked(FieldElem a) const noexcept { return {inv_[a.code]}; }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept { return a.p_ == b.p_ && a.e_ == b.e_; }

  static bool is_prime(int p) noexcept {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  using Poly = std::vector<int>;  // coefficients low-to-high over F_p

  void check(FieldElem a) const {
    if (a.code >= q_) throw FieldError("field element does not belong to F_" + std::to_string(q_));
  }

  void trim(Poly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }

  [[nodiscard]] int inv_mod_p(int a) const {
    for (int b = 1; b < p_; ++b)
      if (a * b % p_ == 1) return b;
    return 0;
  }

  [[nodiscard]] Poly poly_mod(Poly f, const Poly& g) const {
    trim(f);
    const int dg = static_cast<int>(g.size()) - 1;
    const int lead_inv = inv_mod_p(g.back());
    while (static_cast<int>(f.size()) - 1 >= dg) {
      const int shift = static_cast<int>(f.size()) - 1 - dg;
      const int c = f.back() * lead_inv % p_;
      for (int i = 0; i <= dg; ++i) f[shift + i] = ((f[shift + i] - c * g[i]) % p_ + p_) % p_;
      trim(f);
    }
    return f;
  }

  [[nodiscard]] bool irreducible(const Poly& f) const {
    const int deg = static_cast<int>(f.size()) - 1;
    // Any factorization has a monic factor of degree <= deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
      const std::uint32_t count = pow_p_[d];
      for (std::uint32_t idx = 0; idx < count; ++idx) {
        Poly g(d + 1, 0);
        std::uint32_t c = idx;
        for (int i = 0; i < d; ++i) g[i] = static_cast<int>(c % p_), c /= p_;
        g[d] = 1;
        if (poly_mod(f, g).empty()) return false;
      }
    }
    return true;
  }

  [[nodiscard]] Poly find_modulus() const {
    // Scan monic polynomials with (c_0, ..., c_{e-1}) in lexicographic order.
    for (std::uint32_t code = 0; code < q_; ++code) {
      Poly f(e_ + 1, 0);
      std::uint32_t c = code;
      for (int i = e_ - 1; i >= 0; --i) f[i] = static_cast<int>(c % p_), c /= p_;
      f[e_] = 1;
      if (irreducible(f)) return f;
    }
    throw FieldError("make_field: no irreducible polynomial found");
  }

  [[nodiscard]] Poly to_poly(std::uint32_t code) const {
    Poly f(e_, 0);
    for (int i = e_ - 1; i >= 0; --i) f[i] = static_cast<int>(code % p_), code /= p_;
    return f;
  }

  [[nodiscard]] std::uint32_t to_code(const Poly& f) const {
    std::uint32_t code = 0;
    for (int i = 0; i < e_; ++i) code = code * p_ + static_cast<std::uint32_t>(i < static_cast<int>(f.size()) ? f[i] : 0);
    return code;
  }

  [[nodiscard]] std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    Poly fa = to_poly(a), fb = to_poly(b), prod(2 * e_, 0);
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
    return to_code(poly_mod(prod, modulus_));
  }

  void build_tables() {
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      Poly f = to_poly(a);
      for (int& c : f) c = (p_ - c) % p_;
      neg_[a] = to_code(f);
    }
    inv_.assign(q_, 0);
    if (q_ <= 256) {
      add_table_.resize(static_cast<std::size_t>(q_) * q_);
      mul_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (std::uint32_t a = 0; a < q_; ++a) {
        Poly fa = to_poly(a);
        for (std::uint32_t b = 0; b < q_; ++b) {
          Poly fb = to_poly(b);
          for (int i = 0; i < e_; ++i) fb[i] = (fb[i] + fa[i]) % p_;
          add_table_[a * q_ + b] = static_cast<std::uint16_t>(to_code(fb));
          mul_table_[a * q_ + b] = static_cast<std::uint16_t>(slow_mul(a, b));
        }
      }
      for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
          if (mul_table_[a * q_ + b] == one().code) inv_[a] = b;
      return;
    }
    // Log tables from the smallest primitive element.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (std::uint32_t g = 1; g < q_; ++g) {
      std::uint32_t x = one().code, k = 0;
      bool primitive = true;
      std::vector<bool> seen(q_, false);
      for (; k < q_ - 1; ++k) {
        if (seen[x]) {
          primitive = false;
          break;
        }
        seen[x] = true;
        exp_[k] = x;
        log_[x] = k;
        x = slow_mul(x, g);
      }
      if (primitive) break;
    }
    for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  int p_;
  int e_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> pow_p_;
  Poly modulus_;
  std::vector<std::uint32_t> neg_, inv_, exp_, log_;
  std::vector<std::uint16_t> add_table_, mul_table_;
};

using Field = std::shared_ptr<const FieldCtx>;

/// Builds F_{p^e}; same (p, e) always yields the same modulus and tables.
inline Field make_field(int p, int e = 1, std::uint64_t bound = kDefaultFieldBound) {
  return std::make_shared<const FieldCtx>(p, e, bound);
}

/// Splits a prime power q into (p, e); nullopt-like {0, 0} when q is not one.
inline std::pair<int, int> prime_power_decompose(long long q) noexcept {
  if (q < 2) return {0, 0};
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    int e = 0;
    while (q % p == 0) q /= p, ++e;
    return q == 1 ? std::pair<int, int>{static_cast<int>(p), e} : std::pair<int, int>{0, 0};
  }
  return {static_cast<int>(q), 1};
}

inline bool same_field(const Field& a, const Field& b) noexcept { return a == b || (a && b && *a == *b); }

}  // namespace hecke
