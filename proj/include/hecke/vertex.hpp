#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

/// Descending integer tuple d_1 >= ... >= d_n: the standard double-coset
/// representative diag(t^{d_1}, ..., t^{d_n}), i.e. a rank-n bundle on P^1.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<int> d) : d_(std::move(d)) {
    if (!std::is_sorted(d_.begin(), d_.end(), std::greater<>{}))
      throw RangeError("Vertex: coordinates must be non-increasing");
  }

  /// Sorts arbitrary exponents into canonical order.
  static Vertex sorted(std::vector<int> d) {
    std::sort(d.begin(), d.end(), std::greater<>{});
    return Vertex(std::move(d));
  }

  [[nodiscard]] const std::vector<int>& coords() const noexcept { return d_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(d_.size()); }
  [[nodiscard]] int operator[](int i) const { return d_.at(i); }
  [[nodiscard]] long long sum() const noexcept {
    long long s = 0;
    for (int x : d_) s += x;
    return s;
  }

  /// Adds c to every coordinate (tensoring with a line bundle).
  [[nodiscard]] Vertex shifted(int c) const {
    Vertex v = *this;
    for (int& x : v.d_) x += c;
    return v;
  }

  /// "(d1,d2,...)"
  [[nodiscard]] std::string to_string(char sep = ',') const {
    std::string s = "(";
    for (std::size_t i = 0; i < d_.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(d_[i]);
    return s + ")";
  }

  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  std::vector<int> d_;
};

}  // namespace hecke
