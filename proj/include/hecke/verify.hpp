#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/invariants.hpp"
#include "hecke/reference_figures.hpp"

namespace hecke {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample when !ok
};

/// Size limits for the verification suites.
struct VerifyCaps {
  std::vector<std::uint64_t> qs{2, 3};
  int max_n = 3;
  int max_dx = 2;
  int samples = 5;
  int range = 3;  // sampled coordinates lie in [-range, range]
  std::uint64_t seed = 1;
};

inline Field field_for(std::uint64_t q) {
  const auto [p, e] = prime_power_decompose(static_cast<long long>(q));
  if (p == 0) throw RangeError(std::to_string(q) + " is not a prime power");
  return make_field(p, e);
}

inline std::vector<Vertex> sample_vertices(int n, int count, int range, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-range, range);
  std::vector<Vertex> out;
  for (int k = 0; k < count; ++k) {
    std::vector<int> d(n);
    for (int& x : d) x = dist(rng);
    out.push_back(Vertex::sorted(std::move(d)));
  }
  return out;
}

/// Compares a computed neighborhood against expected weights; "" when equal.
inline std::string diff_edges(const EdgeSet& got, const std::map<Vertex, Rational>& want) {
  if (got.targets() == want) return "";
  std::string s = "at " + got.source().to_string() + " got {";
  for (const auto& [d, m] : got.targets()) s += " " + d.to_string() + ":" + rational_to_string(m);
  s += " } expected {";
  for (const auto& [d, m] : want) s += " " + d.to_string() + ":" + rational_to_string(m);
  return s + " }";
}

/// Replays every reference figure at each q on two generic vertices.
inline std::vector<CheckResult> paper_examples_suite(const VerifyCaps& caps) {
  std::vector<CheckResult> out;
  for (const FigureCase& fig : reference_figures()) {
    for (std::uint64_t q : caps.qs) {
      CheckResult c{fig.name + ", q=" + std::to_string(q), true, {}};
      const GapPattern shape = parse_shape(fig.shape, fig.n);
      const HeckeParams p{field_for(q), fig.n, fig.r, fig.dx};
      const HeckeGenerator gen(p);
      for (const Vertex& v : {representative_vertex(shape, fig.r * fig.dx + 1), representative_vertex(shape, 2 * fig.r * fig.dx + 3).shifted(-4)}) {
        c.detail = diff_edges(gen.neighbors(v), fig.expected_at(v, static_cast<std::int64_t>(q)));
        if (!c.detail.empty()) {
          c.ok = false;
          break;
        }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

namespace detail {

/// Runs body over every (q, n, r, dx) within caps with sampled vertices.
template <typename Body>
void for_each_grid_point(const VerifyCaps& caps, Body&& body) {
  std::mt19937_64 rng(caps.seed);
  for (std::uint64_t q : caps.qs)
    for (int n = 1; n <= caps.max_n; ++n)
      for (int r = 1; r <= n; ++r)
        for (int dx = 1; dx <= caps.max_dx; ++dx) body(HeckeParams{field_for(q), n, r, dx}, sample_vertices(n, caps.samples, caps.range, rng));
}

inline std::string describe(const HeckeParams& p) {
  return "q=" + std::to_string(p.q()) + " n=" + std::to_string(p.n) + " r=" + std::to_string(p.r) + " deg=" + std::to_string(p.dx);
}

}  // namespace detail

/// First failure message of a property over one neighborhood, or "".
inline std::string edge_properties(const HeckeParams& p, const HeckeGenerator& gen, const Vertex& v, const EdgeSet& nb) {
  const std::string where = detail::describe(p) + " v=" + v.to_string();
  if (nb.total() != Rational(static_cast<std::int64_t>(p.mass())))
    return "mass: " + where + " total " + rational_to_string(nb.total()) + " != " + std::to_string(p.mass());
  for (const auto& [dst, m] : nb.targets()) {
    if (dst.sum() != v.sum() + static_cast<long long>(p.r) * p.dx) return "degree additivity: " + where + " -> " + dst.to_string();
    if (m.denominator() != 1 || m <= Rational(0)) return "positive integer weight: " + where + " -> " + dst.to_string();
    for (int k = 1; k < p.n; ++k)
      if (!check_delta_constraint(p, {v, dst, m}, k)) return "delta window k=" + std::to_string(k) + ": " + where + " -> " + dst.to_string();
  }
  if (!subset_twist_support(p, v, nb)) return "subset twist support: " + where;
  const EdgeSet moved = gen.neighbors(v.shifted(5));
  EdgeSet expect(v.shifted(5));
  for (const auto& [dst, m] : nb.targets()) expect.add(dst.shifted(5), m);
  if (!(moved == expect)) return "translation equivariance: " + where;
  if (p.r == p.n && (nb.size() != 1 || nb.mult(v.shifted(p.dx)) != Rational(1))) return "r = n shift: " + where;
  return "";
}

inline std::vector<CheckResult> invariants_suite(const VerifyCaps& caps) {
  CheckResult props{"mass, degree additivity, delta window, support, equivariance", true, {}};
  CheckResult comm{"commutativity of generator convolutions (n <= 3)", true, {}};
  CheckResult inverse{"Phi(r=n) * Phi(r=n)^-1 = identity", true, {}};
  detail::for_each_grid_point(caps, [&](const HeckeParams& p, const std::vector<Vertex>& vs) {
    const HeckeGenerator gen(p);
    for (const Vertex& v : vs) {
      if (!props.ok) break;
      props.detail = edge_properties(p, gen, v, gen.neighbors(v));
      props.ok = props.detail.empty();
    }
    if (p.r == p.n && inverse.ok) {
      const auto id = NeighborFn::convolve(NeighborFn::generator(p), NeighborFn::inverse_shift(p));
      for (const Vertex& v : vs)
        if (std::string why = diff_edges(id(v), {{v, Rational(1)}}); !why.empty()) {
          inverse = {inverse.name, false, detail::describe(p) + " " + why};
          break;
        }
    }
    if (p.n > 3 || !comm.ok) return;
    for (int s = 1; s < p.r && comm.ok; ++s) {
      const auto a = NeighborFn::generator(p), b = NeighborFn::generator({p.field, p.n, s, p.dx});
      const auto ab = NeighborFn::convolve(a, b), ba = NeighborFn::convolve(b, a);
      for (const Vertex& v : vs) {
        const EdgeSet x = ab(v), y = ba(v);
        if (!(x == y)) {
          comm.ok = false;
          comm.detail = detail::describe(p) + " s=" + std::to_string(s) + ": " + diff_edges(x, y.targets());
          break;
        }
      }
    }
  });
  return {props, comm, inverse};
}

/// Elimination against the cohomology oracle, plus witness checks, on
/// every representative over the grid.
inline std::vector<CheckResult> oracle_suite(const VerifyCaps& caps) {
  CheckResult c{"reduction agrees with cohomology oracle; witnesses verify", true, {}};
  std::size_t matrices = 0;
  detail::for_each_grid_point(caps, [&](const HeckeParams& p, const std::vector<Vertex>& vs) {
    if (!c.ok) return;
    const HeckeGenerator gen(p, {true, true});
    try {
      for (const Vertex& v : vs) {
        (void)gen.neighbors(v);
        matrices += gen.deltas().size();
      }
    } catch (const InvariantViolation& e) {
      c.ok = false;
      c.detail = detail::describe(p) + ": " + e.what();
    }
  });
  if (c.ok) c.detail = std::to_string(matrices) + " matrices";
  return {c};
}

}  // namespace hecke
