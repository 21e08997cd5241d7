#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hecke/hecke.hpp"

namespace hecke {

/// Integer polynomial in q, coefficients low-to-high, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> c) : c_(std::move(c)) { trim(); }

  [[nodiscard]] const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

  [[nodiscard]] boost::multiprecision::cpp_int operator()(std::int64_t q) const {
    boost::multiprecision::cpp_int v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * q + c_[i];
    return v;
  }

  /// Descending powers, e.g. "q^3-2q^2+2q-1".
  [[nodiscard]] std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const std::int64_t c = c_[i];
      if (c == 0) continue;
      const std::int64_t a = c < 0 ? -c : c;
      if (!s.empty()) s += c < 0 ? "-" : "+";
      else if (c < 0) s += "-";
      if (i == 0 || a != 1) s += std::to_string(a);
      if (i >= 1) s += "q";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

/// Exact interpolating polynomial through (x_k, y_k) with rational
/// coefficients, low-to-high.
inline std::vector<boost::multiprecision::cpp_rational> lagrange_coefficients(const std::vector<std::int64_t>& xs,
                                                                           const std::vector<boost::multiprecision::cpp_int>& ys) {
  using boost::multiprecision::cpp_rational;
  const std::size_t m = xs.size();
  std::vector<cpp_rational> result(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    // basis_k(X) = prod_{j != k} (X - x_j) / (x_k - x_j)
    std::vector<cpp_rational> basis{1};
    cpp_rational denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      std::vector<cpp_rational> next(basis.size() + 1, 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[k] - xs[j];
    }
    for (std::size_t i = 0; i < basis.size(); ++i) result[i] += basis[i] * cpp_rational(ys[k]) / denom;
  }
  return result;
}

/// Relations between consecutive coordinates: '>' or '='.
using GapPattern = std::vector<char>;

/// Parses "d1>d2=d3" for rank n; "" is the only pattern for n = 1.
inline GapPattern parse_shape(const std::string& shape, int n) {
  GapPattern rel;
  std::size_t pos = 0;
  for (int i = 1; i <= n; ++i) {
    const std::string token = "d" + std::to_string(i);
    if (n == 1 && shape.empty()) break;
    if (shape.compare(pos, token.size(), token) != 0) throw RangeError("shape: expected '" + token + "' in \"" + shape + "\"");
    pos += token.size();
    if (i < n) {
      if (pos >= shape.size() || (shape[pos] != '>' && shape[pos] != '=')) throw RangeError("shape: expected '>' or '=' after " + token);
      rel.push_back(shape[pos++]);
    }
  }
  if (pos != shape.size()) throw RangeError("shape: trailing characters in \"" + shape + "\"");
  return rel;
}

/// Vertex realizing the pattern, last coordinate 0, strict gaps equal to gap.
inline Vertex representative_vertex(const GapPattern& rel, int gap) {
  std::vector<int> d(rel.size() + 1, 0);
  for (std::size_t i = rel.size(); i-- > 0;) d[i] = d[i + 1] + (rel[i] == '>' ? gap : 0);
  return Vertex(std::move(d));
}

inline std::string offset_to_string(const std::vector<int>& off) {
  std::string s = "(";
  for (std::size_t i = 0; i < off.size(); ++i) s += (i ? ",+" : "+") + std::to_string(off[i]);
  return s + ")";
}

struct InterpolationResult {
  Vertex representative;
  int degree_bound = 0;
  /// Target offset (sorted target minus source) -> multiplicity polynomial.
  std::map<std::vector<int>, IntPoly> rows;
  std::uint64_t held_out = 0;
  bool verified = false;
  /// Human-readable reasons when verified is false.
  std::vector<std::string> problems;
};

/// Smallest prime power above every sample that is not itself a sample.
inline std::uint64_t default_held_out(const std::vector<std::uint64_t>& qs) {
  std::uint64_t c = 2;
  for (std::uint64_t q : qs) c = std::max(c, q + 1);
  while (prime_power_decompose(static_cast<long long>(c)).first == 0) ++c;
  return c;
}

/// Fits every edge weight out of a generic vertex of the given gap pattern
/// as a polynomial in q, then checks the fit at a held-out field size.
inline InterpolationResult interpolate_multiplicities(int n, int r, int dx, const GapPattern& shape,
                                                      const std::vector<std::uint64_t>& qs, std::uint64_t held_out = 0) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  if (static_cast<int>(shape.size()) != n - 1) throw RangeError("interpolate: shape has the wrong length for rank n");
  InterpolationResult res;
  res.degree_bound = (n - r) * r * dx;
  if (static_cast<int>(qs.size()) < res.degree_bound + 1)
    throw RangeError("interpolate: need at least " + std::to_string(res.degree_bound + 1) + " field sizes, got " + std::to_string(qs.size()));
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (qs[i] == qs[j]) throw RangeError("interpolate: field sizes must be distinct");
  res.held_out = held_out ? held_out : default_held_out(qs);
  res.representative = representative_vertex(shape, r * dx + 1);

  auto sample = [&](std::uint64_t q) {
    const auto [p, e] = prime_power_decompose(static_cast<long long>(q));
    if (p == 0) throw RangeError("interpolate: " + std::to_string(q) + " is not a prime power");
    const EdgeSet nb = neighbors({make_field(p, e), n, r, dx}, res.representative);
    std::map<std::vector<int>, cpp_int> out;
    for (const auto& [dst, m] : nb.targets()) {
      std::vector<int> off(n);
      for (int i = 0; i < n; ++i) off[i] = dst[i] - res.representative[i];
      out[off] = m.numerator();
    }
    return out;
  };

  std::vector<std::int64_t> xs;
  std::vector<std::map<std::vector<int>, cpp_int>> samples;
  std::map<std::vector<int>, bool> keys;
  for (std::uint64_t q : qs) {
    xs.push_back(static_cast<std::int64_t>(q));
    samples.push_back(sample(q));
    for (const auto& [k, _] : samples.back()) keys[k] = true;
  }
  for (const auto& [key, _] : keys) {
    std::vector<cpp_int> ys;
    for (const auto& s : samples) {
      auto it = s.find(key);
      ys.push_back(it == s.end() ? cpp_int(0) : it->second);
    }
    const auto coeffs = lagrange_coefficients(xs, ys);
    std::vector<std::int64_t> ints;
    bool integral = true;
    for (const cpp_rational& c : coeffs) {
      if (denominator(c) != 1) integral = false;
      ints.push_back(integral ? static_cast<std::int64_t>(numerator(c)) : 0);
    }
    IntPoly poly(ints);
    if (!integral) res.problems.push_back(offset_to_string(key) + ": fit has non-integer coefficients");
    else if (poly.degree() > res.degree_bound)
      res.problems.push_back(offset_to_string(key) + ": fit has degree " + std::to_string(poly.degree()) + " > " + std::to_string(res.degree_bound));
    res.rows[key] = poly;
  }

  const auto check = sample(res.held_out);
  for (const auto& [key, poly] : res.rows) {
    auto it = check.find(key);
    const cpp_int actual = it == check.end() ? cpp_int(0) : it->second;
    if (poly(static_cast<std::int64_t>(res.held_out)) != actual)
      res.problems.push_back(offset_to_string(key) + ": predicts " + poly(static_cast<std::int64_t>(res.held_out)).str() + " at q=" +
                             std::to_string(res.held_out) + ", computed " + actual.str());
  }
  for (const auto& [key, m] : check)
    if (!res.rows.contains(key)) res.problems.push_back(offset_to_string(key) + ": target appears only at the held-out q");
  res.verified = res.problems.empty();
  return res;
}

}  // namespace hecke
