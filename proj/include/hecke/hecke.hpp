#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/field.hpp"
#include "hecke/grassmann.hpp"
#include "hecke/laurent.hpp"
#include "hecke/parallel.hpp"
#include "hecke/reduction.hpp"
#include "hecke/vertex.hpp"

namespace hecke {

/// Exact edge weight. Generator graphs only produce positive integers.
using Rational = boost::rational<std::int64_t>;

inline std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Phi_{x,r} on rank-n bundles over P^1(F_q) for a place x of degree dx.
struct HeckeParams {
  Field field;
  int n = 1;
  int r = 1;
  int dx = 1;

  void validate() const {
    if (!field) throw RangeError("HeckeParams: missing field");
    if (n < 1) throw RangeError("HeckeParams: n must be >= 1");
    if (r < 1 || r > n) throw RangeError("HeckeParams: need 1 <= r <= n");
    if (dx < 1) throw RangeError("HeckeParams: deg(x) must be >= 1");
  }
  [[nodiscard]] std::uint64_t q() const { return field->q(); }
  /// q^dx = #kappa(x).
  [[nodiscard]] std::uint64_t residue_size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < dx; ++i) s = detail::checked_mul(s, field->q());
    return s;
  }
  /// Expected total edge mass out of every vertex.
  [[nodiscard]] std::uint64_t mass() const { return gaussian_binomial(n - r, n, residue_size()); }
};

struct Edge {
  Vertex src;
  Vertex dst;
  Rational mult;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Neighborhood of one source: distinct targets with nonzero weights, kept
/// sorted by target.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(Vertex src) : src_(std::move(src)) {}

  /// Accumulates weight on dst; a total of exactly zero removes the edge.
  void add(const Vertex& dst, const Rational& m) {
    if (dst.size() != src_.size()) throw RangeError("EdgeSet: target rank differs from source rank");
    auto [it, inserted] = mult_.try_emplace(dst, m);
    if (!inserted) it->second += m;
    if (it->second == Rational(0)) mult_.erase(it);
  }

  [[nodiscard]] const Vertex& source() const noexcept { return src_; }
  [[nodiscard]] std::size_t size() const noexcept { return mult_.size(); }
  [[nodiscard]] bool empty() const noexcept { return mult_.empty(); }
  [[nodiscard]] const std::map<Vertex, Rational>& targets() const noexcept { return mult_; }

  [[nodiscard]] Rational mult(const Vertex& dst) const {
    auto it = mult_.find(dst);
    return it == mult_.end() ? Rational(0) : it->second;
  }

  [[nodiscard]] Rational total() const {
    Rational s = 0;
    for (const auto& [_, m] : mult_) s += m;
    return s;
  }

  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(mult_.size());
    for (const auto& [dst, m] : mult_) out.push_back({src_, dst, m});
    return out;
  }

  /// One "src -> dst : mult" line per edge.
  [[nodiscard]] std::string to_string() const {
    std::string s;
    for (const auto& [dst, m] : mult_) s += src_.to_string() + " -> " + dst.to_string() + " : " + rational_to_string(m) + "\n";
    return s;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  Vertex src_;
  std::map<Vertex, Rational> mult_;
};

struct NeighborOptions {
  /// Check every reduction witness; a failure throws InvariantViolation.
  bool verify_witness = true;
  /// Also compare every reduction with splitting_type_cohomology.
  bool cross_check_oracle = false;
};

/// Row i of diag(t^v) * delta is row i of delta times t^{v_i}.
inline LaurentMat twist_rows(const LaurentMat& delta, const Vertex& v) {
  LaurentMat m = delta;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) m(i, j) = m(i, j).shifted(v[i]);
  return m;
}

/// The generator Phi_{x,r} with its coset representatives enumerated once.
class HeckeGenerator {
 public:
  explicit HeckeGenerator(HeckeParams params, NeighborOptions options = {})
      : params_(std::move(params)), options_(options) {
    params_.validate();
    deltas_ = enumerate_delta_matrices(params_.field, params_.n, params_.r, params_.dx);
  }

  [[nodiscard]] const HeckeParams& params() const noexcept { return params_; }
  [[nodiscard]] const std::vector<DeltaMatrix>& deltas() const noexcept { return deltas_; }

  /// Reduces diag(t^v) * delta for every representative and aggregates
  /// equal targets.
  [[nodiscard]] EdgeSet neighbors(const Vertex& v) const {
    if (v.size() != params_.n) throw RangeError("neighbors: vertex has rank " + std::to_string(v.size()) + ", expected " + std::to_string(params_.n));
    const std::size_t chunks = chunk_count(deltas_.size());
    std::vector<std::map<Vertex, std::int64_t>> partial(chunks);
    parallel_chunks(deltas_.size(), [&](std::size_t c, std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) ++partial[c][reduce_one(v, deltas_[k])];
    });
    EdgeSet out(v);
    for (const auto& part : partial)
      for (const auto& [dst, count] : part) out.add(dst, Rational(count));
    return out;
  }

 private:
  [[nodiscard]] Vertex reduce_one(const Vertex& v, const DeltaMatrix& delta) const {
    const LaurentMat m = twist_rows(delta.mat, v);
    ReductionWitness w = birkhoff_reduce(m);
    if (options_.verify_witness) {
      if (std::string why = w.check(m); !why.empty())
        throw InvariantViolation("reduction witness failed for " + m.to_string() + ": " + why);
    }
    if (options_.cross_check_oracle) {
      const Vertex oracle = splitting_type_cohomology(m);
      if (oracle != w.d)
        throw InvariantViolation("elimination gives " + w.d.to_string() + " but cohomology gives " + oracle.to_string() + " for " + m.to_string());
    }
    return std::move(w.d);
  }

  HeckeParams params_;
  NeighborOptions options_;
  std::vector<DeltaMatrix> deltas_;
};

/// Phi_{x,r}-neighborhood of v.
inline EdgeSet neighbors(const HeckeParams& params, const Vertex& v, NeighborOptions options = {}) {
  return HeckeGenerator(params, options).neighbors(v);
}

/// Neighborhood of v under Phi_{x,n}^{-1}: one edge to v - dx, weight 1.
inline EdgeSet phi_n_inverse_neighbors(const HeckeParams& params, const Vertex& v) {
  params.validate();
  if (params.r != params.n) throw RangeError("phi_n_inverse_neighbors: requires r = n");
  if (v.size() != params.n) throw RangeError("phi_n_inverse_neighbors: vertex rank mismatch");
  EdgeSet out(v);
  out.add(v.shifted(-params.dx), Rational(1));
  return out;
}

}  // namespace hecke
