#pragma once

#include <algorithm>
#include <cstdlib>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/field.hpp"

namespace hecke {

/// Element of F_q[t, 1/t], dense from the lowest nonzero exponent upward.
///
/// Normal form: the first and last stored coefficients are nonzero; zero has
/// no coefficients (its offset is 0 and carries no meaning).
class LaurentPoly {
 public:
  explicit LaurentPoly(Field field) : field_(std::move(field)) {}

  LaurentPoly(Field field, int offset, std::vector<FieldElem> coeffs)
      : field_(std::move(field)), offset_(offset), coeffs_(std::move(coeffs)) {
    for (FieldElem c : coeffs_)
      if (!field_->contains(c)) throw ArithmeticError("LaurentPoly: coefficient outside the field");
    normalize();
  }

  static LaurentPoly monomial(const Field& field, FieldElem c, int exponent) {
    return LaurentPoly(field, exponent, {c});
  }
  static LaurentPoly constant(const Field& field, FieldElem c) { return monomial(field, c, 0); }
  static LaurentPoly t_pow(const Field& field, int k) { return monomial(field, field->one(), k); }
  static LaurentPoly one(const Field& field) { return t_pow(field, 0); }

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] int offset() const noexcept { return offset_; }
  [[nodiscard]] const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] int valuation() const {
    if (is_zero()) throw ArithmeticError("valuation of the zero polynomial");
    return offset_;
  }
  [[nodiscard]] int degree() const {
    if (is_zero()) throw ArithmeticError("degree of the zero polynomial");
    return offset_ + static_cast<int>(coeffs_.size()) - 1;
  }

  [[nodiscard]] FieldElem coeff(int exponent) const noexcept {
    const int i = exponent - offset_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
    return coeffs_[i];
  }
  [[nodiscard]] FieldElem leading() const { return coeff(degree()); }
  [[nodiscard]] FieldElem trailing() const { return coeff(valuation()); }

  [[nodiscard]] bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  [[nodiscard]] bool is_constant() const noexcept { return is_monomial() && offset_ == 0; }
  /// Membership in F_q[t].
  [[nodiscard]] bool in_r_plus() const noexcept { return is_zero() || offset_ >= 0; }
  /// Membership in F_q[1/t].
  [[nodiscard]] bool in_r_minus() const noexcept {
    return is_zero() || offset_ + static_cast<int>(coeffs_.size()) - 1 <= 0;
  }

  [[nodiscard]] LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.offset_ += k;
    return r;
  }

  [[nodiscard]] LaurentPoly scaled(FieldElem c) const {
    if (!field_->contains(c)) throw ArithmeticError("scaled: coefficient outside the field");
    LaurentPoly r = *this;
    for (FieldElem& x : r.coeffs_) x = field_->mul_unchecked(x, c);
    r.normalize();
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& b) {
    check_same(b);
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    const int lo = std::min(offset_, b.offset_);
    const int hi = std::max(degree(), b.degree());
    std::vector<FieldElem> out(hi - lo + 1, field_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[offset_ - lo + i] = coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      FieldElem& x = out[b.offset_ - lo + i];
      x = field_->add_unchecked(x, b.coeffs_[i]);
    }
    offset_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (FieldElem& x : r.coeffs_) x = field_->neg_unchecked(x);
    return r;
  }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this += -b; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(a.field_);
    const FieldCtx& f = *a.field_;
    std::vector<FieldElem> out(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].code == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] = f.add_unchecked(out[i + j], f.mul_unchecked(a.coeffs_[i], b.coeffs_[j]));
    }
    return LaurentPoly(a.field_, a.offset_ + b.offset_, std::move(out), Normalize{});
  }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  /// Quotient a / b when b divides a in F_q[t, 1/t]; throws otherwise.
  [[nodiscard]] LaurentPoly divide_exact(const LaurentPoly& b) const {
    check_same(b);
    if (b.is_zero()) throw ArithmeticError("divide_exact: division by zero");
    if (is_zero()) return *this;
    // Both sides have nonzero constant term after removing t-powers, so
    // polynomial long division decides divisibility.
    const FieldCtx& f = *field_;
    std::vector<FieldElem> rem = coeffs_;
    const std::vector<FieldElem>& div = b.coeffs_;
    if (rem.size() < div.size()) throw ArithmeticError("divide_exact: not divisible");
    const std::size_t qlen = rem.size() - div.size() + 1;
    std::vector<FieldElem> quot(qlen, f.zero());
    const FieldElem lead_inv = f.inv_unchecked(div.back());
    for (std::size_t k = qlen; k-- > 0;) {
      const FieldElem c = f.mul_unchecked(rem[k + div.size() - 1], lead_inv);
      quot[k] = c;
      if (c.code == 0) continue;
      for (std::size_t j = 0; j < div.size(); ++j)
        rem[k + j] = f.sub_unchecked(rem[k + j], f.mul_unchecked(c, div[j]));
    }
    for (FieldElem x : rem)
      if (x.code != 0) throw ArithmeticError("divide_exact: not divisible");
    return LaurentPoly(field_, offset_ - b.offset_, std::move(quot));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
    if (!same_field(a.field_, b.field_)) return false;
    if (a.coeffs_ != b.coeffs_) return false;
    return a.is_zero() || a.offset_ == b.offset_;
  }

  /// "t^-1 + 2 + t^3"; ascending exponents.
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const FieldElem c = coeffs_[i];
      if (c.code == 0) continue;
      const int k = offset_ + static_cast<int>(i);
      std::string term;
      if (k == 0) {
        term = field_->to_string(c);
      } else {
        if (c != field_->one()) term = field_->to_string(c) + "*";
        term += k == 1 ? "t" : "t^" + std::to_string(k);
      }
      out += (out.empty() ? "" : " + ") + term;
    }
    return out;
  }

 private:
  struct Normalize {};
  LaurentPoly(Field field, int offset, std::vector<FieldElem> coeffs, Normalize)
      : field_(std::move(field)), offset_(offset), coeffs_(std::move(coeffs)) {
    normalize();
  }

  void check_same(const LaurentPoly& b) const {
    if (!same_field(field_, b.field_)) throw ArithmeticError("Laurent polynomials over different fields");
  }

  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].code == 0) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      offset_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) offset_ = 0;
  }

  Field field_;
  int offset_ = 0;
  std::vector<FieldElem> coeffs_;
};

/// Subrings of F_q[t, 1/t] whose matrix groups appear in the double coset.
enum class Subring { RPlus, RMinus, RPlusMinus };

/// Square matrix over F_q[t, 1/t], row-major.
class LaurentMat {
 public:
  LaurentMat(Field field, int n) : field_(std::move(field)), n_(n), a_(static_cast<std::size_t>(n) * n, LaurentPoly(field_)) {
    if (n < 1) throw RangeError("LaurentMat: size must be >= 1");
  }

  static LaurentMat identity(const Field& field, int n) {
    LaurentMat m(field, n);
    for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly::one(field);
    return m;
  }

  /// diag(t^{e_1}, ..., t^{e_n}).
  static LaurentMat diag_t(const Field& field, std::span<const int> exponents) {
    LaurentMat m(field, static_cast<int>(exponents.size()));
    for (int i = 0; i < m.n_; ++i) m(i, i) = LaurentPoly::t_pow(field, exponents[i]);
    return m;
  }

  /// Row i carries a 1 in column perm[i].
  static LaurentMat permutation(const Field& field, std::span<const int> perm) {
    LaurentMat m(field, static_cast<int>(perm.size()));
    for (int i = 0; i < m.n_; ++i) m(i, perm[i]) = LaurentPoly::one(field);
    return m;
  }

  static LaurentMat from_rows(const Field& field, const std::vector<std::vector<LaurentPoly>>& rows) {
    LaurentMat m(field, static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.n_) throw ArithmeticError("from_rows: matrix is not square");
      for (int j = 0; j < m.n_; ++j) {
        if (!same_field(rows[i][j].field(), field)) throw ArithmeticError("from_rows: entry over a different field");
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] const Field& field() const noexcept { return field_; }

  LaurentPoly& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const LaurentPoly& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  friend LaurentMat operator*(const LaurentMat& a, const LaurentMat& b) {
    if (a.n_ != b.n_) throw ArithmeticError("mat_mul: size mismatch");
    if (!same_field(a.field_, b.field_)) throw ArithmeticError("mat_mul: matrices over different fields");
    LaurentMat c(a.field_, a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const LaurentPoly& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < a.n_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const LaurentMat& a, const LaurentMat& b) noexcept {
    return a.n_ == b.n_ && same_field(a.field_, b.field_) && a.a_ == b.a_;
  }

  [[nodiscard]] bool is_zero() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](const LaurentPoly& x) { return x.is_zero(); });
  }

  /// Smallest exponent among nonzero entries (0 for the zero matrix).
  [[nodiscard]] int min_valuation() const noexcept {
    bool any = false;
    int v = 0;
    for (const auto& x : a_)
      if (!x.is_zero()) v = any ? std::min(v, x.offset()) : x.offset(), any = true;
    return v;
  }
  /// Largest exponent among nonzero entries (0 for the zero matrix).
  [[nodiscard]] int max_degree() const noexcept {
    bool any = false;
    int d = 0;
    for (const auto& x : a_)
      if (!x.is_zero()) {
        const int dx = x.offset() + static_cast<int>(x.coeffs().size()) - 1;
        d = any ? std::max(d, dx) : dx, any = true;
      }
    return d;
  }

  /// Every entry multiplied by t^k.
  [[nodiscard]] LaurentMat shifted(int k) const {
    LaurentMat m = *this;
    for (auto& x : m.a_) x = x.shifted(k);
    return m;
  }

  [[nodiscard]] LaurentMat minor_matrix(int row, int col) const {
    LaurentMat m(field_, n_ - 1);
    for (int i = 0, mi = 0; i < n_; ++i) {
      if (i == row) continue;
      for (int j = 0, mj = 0; j < n_; ++j) {
        if (j == col) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      s += i ? ", [" : "[";
      for (int j = 0; j < n_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  Field field_;
  int n_;
  std::vector<LaurentPoly> a_;
};

/// Determinant by fraction-free (Bareiss) elimination; every division is exact
/// in the integral domain F_q[t, 1/t].
inline LaurentPoly mat_det(const LaurentMat& m) {
  const int n = m.size();
  const Field& f = m.field();
  if (n == 1) return m(0, 0);
  LaurentMat a = m;
  LaurentPoly prev = LaurentPoly::one(f);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return LaurentPoly(f);
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)).divide_exact(prev);
      a(i, k) = LaurentPoly(f);
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

/// Determinant by Laplace expansion along the first row. Exponential cost;
/// kept as an independent route for cross-checking small sizes.
inline LaurentPoly det_cofactor(const LaurentMat& m) {
  const int n = m.size();
  if (n > 8) throw RangeError("det_cofactor: size too large for Laplace expansion");
  if (n == 1) return m(0, 0);
  LaurentPoly sum(m.field());
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    LaurentPoly term = m(0, j) * det_cofactor(m.minor_matrix(0, j));
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

inline LaurentMat adjugate(const LaurentMat& m) {
  const int n = m.size();
  LaurentMat adj(m.field(), n);
  if (n == 1) {
    adj(0, 0) = LaurentPoly::one(m.field());
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentPoly c = mat_det(m.minor_matrix(i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  return adj;
}

/// Inverse over F_q[t, 1/t]; requires det = c * t^k with c != 0.
inline LaurentMat inverse(const LaurentMat& m) {
  const LaurentPoly det = mat_det(m);
  if (!det.is_monomial()) throw ArithmeticError("inverse: determinant " + det.to_string() + " is not a unit of F_q[t, 1/t]");
  const Field& f = m.field();
  const LaurentPoly det_inv = LaurentPoly::monomial(f, f->inv(det.trailing()), -det.valuation());
  LaurentMat adj = adjugate(m);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) adj(i, j) = adj(i, j) * det_inv;
  return adj;
}

/// Membership in GL_n of the chosen subring: entries in the subring and a
/// unit determinant (F_q^* for R+ and R-, c * t^k for R+-).
inline bool is_glr_unit(const LaurentMat& m, Subring which) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const LaurentPoly& x = m(i, j);
      if (which == Subring::RPlus && !x.in_r_plus()) return false;
      if (which == Subring::RMinus && !x.in_r_minus()) return false;
    }
  const LaurentPoly det = mat_det(m);
  if (which == Subring::RPlusMinus) return det.is_monomial();
  return det.is_constant();
}

}  // namespace hecke
