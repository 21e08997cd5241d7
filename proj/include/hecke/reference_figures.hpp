#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke/interpolate.hpp"

namespace hecke {

/// A reference neighborhood picture: for a generic vertex of the given gap
/// pattern, each target offset carries a polynomial label in q.
struct FigureCase {
  std::string name;
  int n, r, dx;
  std::string shape;
  std::vector<std::pair<std::vector<int>, IntPoly>> labels;

  /// Labels evaluated at q, keyed by absolute target from v.
  [[nodiscard]] std::map<Vertex, Rational> expected_at(const Vertex& v, std::int64_t q) const {
    std::map<Vertex, Rational> out;
    for (const auto& [off, poly] : labels) {
      std::vector<int> d = v.coords();
      for (int i = 0; i < n; ++i) d[i] += off[i];
      out[Vertex(d)] = Rational(static_cast<std::int64_t>(poly(q)));
    }
    return out;
  }
};

/// Coefficients are low-to-high: IntPoly({a0, a1, a2}) = a0 + a1 q + a2 q^2.
inline std::vector<FigureCase> reference_figures() {
  using P = IntPoly;
  return {
      {"rank 1, deg 1", 1, 1, 1, "d1", {{{1}, P({1})}}},
      {"rank 1, deg 3", 1, 1, 3, "d1", {{{3}, P({1})}}},
      {"rank 2, r=1, deg 1, d1=d2", 2, 1, 1, "d1=d2", {{{1, 0}, P({1, 1})}}},
      {"rank 2, r=1, deg 1, d1>d2", 2, 1, 1, "d1>d2", {{{0, 1}, P({0, 1})}, {{1, 0}, P({1})}}},
      {"rank 3, r=2, deg 1, d1=d2=d3", 3, 2, 1, "d1=d2=d3", {{{1, 1, 0}, P({1, 1, 1})}}},
      {"rank 3, r=2, deg 1, d1=d2>d3", 3, 2, 1, "d1=d2>d3", {{{1, 0, 1}, P({0, 1, 1})}, {{1, 1, 0}, P({1})}}},
      {"rank 3, r=2, deg 1, d1>d2=d3", 3, 2, 1, "d1>d2=d3", {{{0, 1, 1}, P({0, 0, 1})}, {{1, 1, 0}, P({1, 1})}}},
      {"rank 3, r=2, deg 1, d1>d2>d3", 3, 2, 1, "d1>d2>d3", {{{0, 1, 1}, P({0, 0, 1})}, {{1, 0, 1}, P({0, 1})}, {{1, 1, 0}, P({1})}}},
      {"rank 2, r=1, deg 2, d1=d2", 2, 1, 2, "d1=d2", {{{1, 1}, P({-1, 1})}, {{2, 0}, P({2, -1, 1})}}},
      {"rank 2, r=1, deg 2, d1>d2", 2, 1, 2, "d1>d2", {{{0, 2}, P({1, -1, 1})}, {{1, 1}, P({-1, 1})}, {{2, 0}, P({1})}}},
      {"rank 3, r=2, deg 2, d1>d2>d3",
       3,
       2,
       2,
       "d1>d2>d3",
       {{{0, 2, 2}, P({1, -1, 1, -1, 1})},
        {{1, 1, 2}, P({-1, 2, -2, 1})},
        {{2, 0, 2}, P({1, -1, 1})},
        {{2, 2, 0}, P({1})},
        {{1, 2, 1}, P({0, -1, 1})},
        {{2, 1, 1}, P({-1, 1})}}},
  };
}

}  // namespace hecke
