// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hecke/verify.hpp"

using namespace hecke;

namespace {

// Pinned limits.
constexpr double kExample55Seconds = 1.0;
constexpr double kExample56Seconds = 1.0;
constexpr double kDegreeTwoSeconds = 2.0;
constexpr double kExample57SecondsQ2 = 10.0;
constexpr double kExample57SecondsQ3 = 300.0;
constexpr int kGridSamples = 20;
constexpr int kGridRange = 3;
constexpr std::uint64_t kGridSeed = 20240501;
constexpr int kAlgebraSamples = 10;
constexpr std::uint64_t kAlgebraSeed = 7;
const std::vector<std::uint64_t> kInterpolationQs{2, 3, 5, 7, 11};
constexpr std::uint64_t kHeldOut = 13;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(std::string why) {
    if (ok) detail = std::move(why);
    ok = false;
  }
};

struct Produced {
  HeckeParams params;
  EdgeSet nbrs;
};

// Every neighborhood computed by criteria 1-5, replayed by criterion 7.
std::vector<Produced> g_produced;

EdgeSet record(const HeckeGenerator& gen, const Vertex& v) {
  EdgeSet nb = gen.neighbors(v);
  g_produced.push_back({gen.params(), nb});
  return nb;
}

Rational R(std::int64_t x) { return Rational(x); }

void check_edges(Outcome& out, const EdgeSet& got, const std::map<Vertex, Rational>& want, const std::string& where) {
  if (std::string d = diff_edges(got, want); !d.empty()) out.fail(where + ": " + d);
}

void time_limit(Outcome& out, double elapsed, double limit, const std::string& what) {
  if (elapsed >= limit) out.fail(what + " took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit) + " s");
}

Outcome criterion1() {
  Outcome out;
  const auto t0 = Clock::now();
  const std::vector<Vertex> vs{Vertex({1, 0}), Vertex({5, -3}), Vertex({0, -1}), Vertex({10, 2}), Vertex({0, 0}), Vertex({-4, -4}), Vertex({7, 7})};
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const HeckeGenerator gen({field_for(q), 2, 1, 1});
    const auto Q = static_cast<std::int64_t>(q);
    for (const Vertex& v : vs) {
      std::map<Vertex, Rational> want;
      if (v[0] > v[1]) want = {{Vertex({v[0], v[1] + 1}), R(Q)}, {Vertex({v[0] + 1, v[1]}), R(1)}};
      else want = {{Vertex({v[0] + 1, v[1]}), R(Q + 1)}};
      check_edges(out, record(gen, v), want, "q=" + std::to_string(q));
    }
  }
  time_limit(out, seconds_since(t0), kExample55Seconds, "run");
  return out;
}

Outcome criterion2() {
  Outcome out;
  const auto t0 = Clock::now();
  for (std::uint64_t q : {2, 3}) {
    const HeckeGenerator gen({field_for(q), 3, 2, 1});
    const auto Q = static_cast<std::int64_t>(q);
    for (int d : {-2, 0, 3}) {
      const Vertex eq({d, d, d}), top({d + 1, d + 1, d}), bottom({d + 2, d, d}), gen3({d + 4, d + 2, d});
      check_edges(out, record(gen, eq), {{Vertex({d + 1, d + 1, d}), R(Q * Q + Q + 1)}}, "d1=d2=d3");
      check_edges(out, record(gen, top), {{Vertex({d + 2, d + 1, d + 1}), R(Q * Q + Q)}, {Vertex({d + 2, d + 2, d}), R(1)}}, "d1=d2>d3");
      check_edges(out, record(gen, bottom), {{Vertex({d + 2, d + 1, d + 1}), R(Q * Q)}, {Vertex({d + 3, d + 1, d}), R(Q + 1)}}, "d1>d2=d3");
      check_edges(out, record(gen, gen3),
                  {{Vertex({d + 4, d + 3, d + 1}), R(Q * Q)}, {Vertex({d + 5, d + 2, d + 1}), R(Q)}, {Vertex({d + 5, d + 3, d}), R(1)}},
                  "d1>d2>d3");
    }
  }
  time_limit(out, seconds_since(t0), kExample56Seconds, "run");
  return out;
}

// Reference degree-2 labels for n=2, r=1.
Outcome criterion3() {
  Outcome out;
  const auto t0 = Clock::now();
  for (std::uint64_t q : {2, 3, 5}) {
    const HeckeGenerator gen({field_for(q), 2, 1, 2});
    const auto Q = static_cast<std::int64_t>(q);
    const std::string at = "q=" + std::to_string(q);
    for (int d : {-3, 0, 4}) {
      const EdgeSet nb = record(gen, Vertex({d, d}));
      if (nb.total() != R(Q * Q + 1)) out.fail(at + ": total " + rational_to_string(nb.total()) + " at " + nb.source().to_string());
      check_edges(out, nb, {{Vertex({d + 1, d + 1}), R(Q - 1)}, {Vertex({d + 2, d}), R(Q * Q - Q + 2)}}, at + " d1=d2");
    }
    for (const Vertex& v : {Vertex({2, 0}), Vertex({5, -1}), Vertex({6, 3}), Vertex({9, 0})}) {
      const EdgeSet nb = record(gen, v);
      if (nb.total() != R(Q * Q + 1)) out.fail(at + ": total " + rational_to_string(nb.total()) + " at " + v.to_string());
      check_edges(out, nb,
                  {{Vertex({v[0], v[1] + 2}), R(Q * Q - Q + 1)}, {Vertex({v[0] + 1, v[1] + 1}), R(Q - 1)}, {Vertex({v[0] + 2, v[1]}), R(1)}},
                  at + " d1>d2");
    }
  }
  time_limit(out, seconds_since(t0), kDegreeTwoSeconds, "run");
  return out;
}

Outcome criterion4() {
  Outcome out;
  for (std::uint64_t q : {2, 3}) {
    const auto t0 = Clock::now();
    const HeckeGenerator gen({field_for(q), 3, 2, 2});
    const auto Q = static_cast<std::int64_t>(q);
    const std::int64_t Q2 = Q * Q, Q3 = Q2 * Q, Q4 = Q3 * Q;
    for (const Vertex& v : {Vertex({10, 5, 0}), Vertex({9, 3, -3})}) {
      const int a = v[0], b = v[1], c = v[2];
      const EdgeSet nb = record(gen, v);
      check_edges(out, nb,
                  {{Vertex({a, b + 2, c + 2}), R(Q4 - Q3 + Q2 - Q + 1)},
                   {Vertex({a + 1, b + 1, c + 2}), R(Q3 - 2 * Q2 + 2 * Q - 1)},
                   {Vertex({a + 2, b, c + 2}), R(Q2 - Q + 1)},
                   {Vertex({a + 2, b + 2, c}), R(1)},
                   {Vertex({a + 1, b + 2, c + 1}), R(Q2 - Q)},
                   {Vertex({a + 2, b + 1, c + 1}), R(Q - 1)}},
                  "q=" + std::to_string(q));
      if (nb.total() != R(Q4 + Q2 + 1)) out.fail("total " + rational_to_string(nb.total()));
    }
    time_limit(out, seconds_since(t0), q == 2 ? kExample57SecondsQ2 : kExample57SecondsQ3, "q=" + std::to_string(q));
  }
  return out;
}

// Criterion-5 grid: (params, sampled vertices) in a fixed order.
struct GridPoint {
  HeckeParams params;
  std::vector<Vertex> vertices;
};

std::vector<GridPoint> grid() {
  std::vector<GridPoint> out;
  std::mt19937_64 rng(kGridSeed);
  for (std::uint64_t q : {2, 3})
    for (int n = 1; n <= 4; ++n)
      for (int r = 1; r <= n; ++r)
        for (int dx = 1; dx <= 2; ++dx) out.push_back({{field_for(q), n, r, dx}, sample_vertices(n, kGridSamples, kGridRange, rng)});
  return out;
}

Outcome criterion5(const std::vector<GridPoint>& g) {
  Outcome out;
  for (const GridPoint& gp : g) {
    const HeckeGenerator gen(gp.params);
    const Rational want = R(static_cast<std::int64_t>(gp.params.mass()));
    for (const Vertex& v : gp.vertices) {
      const EdgeSet nb = record(gen, v);
      if (nb.total() != want)
        out.fail(detail::describe(gp.params) + " v=" + v.to_string() + ": total " + rational_to_string(nb.total()) + " != " + rational_to_string(want));
    }
  }
  return out;
}

Outcome criterion6(const std::vector<GridPoint>& g) {
  Outcome out;
  std::size_t count = 0;
  for (const GridPoint& gp : g) {
    const auto deltas = enumerate_delta_matrices(gp.params.field, gp.params.n, gp.params.r, gp.params.dx);
    for (const Vertex& v : gp.vertices)
      for (const DeltaMatrix& delta : deltas) {
        const LaurentMat m = twist_rows(delta.mat, v);
        const ReductionWitness w = birkhoff_reduce(m);
        const Vertex oracle = splitting_type_cohomology(m);
        ++count;
        if (w.d != oracle) out.fail("elimination " + w.d.to_string() + " vs cohomology " + oracle.to_string() + " for " + m.to_string());
        if (std::string why = w.check(m); !why.empty()) out.fail("witness for " + m.to_string() + ": " + why);
      }
  }
  if (out.ok) out.detail = std::to_string(count) + " matrices";
  return out;
}

Outcome criterion7() {
  Outcome out;
  std::size_t edges = 0;
  for (const Produced& pr : g_produced)
    for (const Edge& e : pr.nbrs.edges()) {
      ++edges;
      for (int k = 1; k < pr.params.n; ++k)
        if (!check_delta_constraint(pr.params, e, k))
          out.fail(detail::describe(pr.params) + " k=" + std::to_string(k) + ": " + e.src.to_string() + " -> " + e.dst.to_string());
    }
  if (out.ok) out.detail = std::to_string(edges) + " edges";
  return out;
}

Outcome criterion8() {
  Outcome out;
  std::mt19937_64 rng(kAlgebraSeed);
  const Field f = field_for(2);
  for (int n = 1; n <= 3; ++n) {
    const std::vector<Vertex> vs = sample_vertices(n, kAlgebraSamples, kGridRange, rng);
    for (int dx = 1; dx <= 2; ++dx) {
      std::vector<NeighborFn> phi;
      for (int r = 1; r <= n; ++r) phi.push_back(NeighborFn::generator({f, n, r, dx}));
      const NeighborFn one = NeighborFn::identity(f, n), zero = NeighborFn::zero(f, n);
      const std::string where = "n=" + std::to_string(n) + " deg=" + std::to_string(dx);
      auto same = [&](const NeighborFn& a, const NeighborFn& b, const Vertex& v, const std::string& law) {
        const EdgeSet x = a(v), y = b(v);
        if (!(x == y)) out.fail(where + " " + law + ": " + diff_edges(x, y.targets()));
      };
      for (const Vertex& v : vs) {
        for (int r = 1; r <= n; ++r)
          for (int s = 1; s < r; ++s)
            same(NeighborFn::convolve(phi[r - 1], phi[s - 1]), NeighborFn::convolve(phi[s - 1], phi[r - 1]), v,
                 "r=" + std::to_string(r) + " s=" + std::to_string(s) + " commute");
        const NeighborFn& a = phi[0];
        const NeighborFn& b = phi[n - 1];
        same(NeighborFn::convolve(one, a), a, v, "1*a");
        same(NeighborFn::convolve(a, one), a, v, "a*1");
        same(a + zero, a, v, "a+0");
        same(NeighborFn::convolve(a, zero), zero, v, "a*0");
        same(NeighborFn::convolve(zero, a), zero, v, "0*a");
        same(a + b, b + a, v, "a+b");
        same((a + b) + one, a + (b + one), v, "(a+b)+1");
        same(NeighborFn::convolve(a, b + one), NeighborFn::convolve(a, b) + a, v, "a*(b+1)");
        same(NeighborFn::convolve(a + b, a), NeighborFn::convolve(a, a) + NeighborFn::convolve(b, a), v, "(a+b)*a");
        same(NeighborFn::scale(Rational(3, 2), NeighborFn::scale(Rational(2, 3), a)), a, v, "scale");
        same(NeighborFn::scale(Rational(2), a), a + a, v, "2a");
        same(NeighborFn::convolve(NeighborFn::scale(Rational(-1, 5), a), b), NeighborFn::scale(Rational(-1, 5), NeighborFn::convolve(a, b)), v,
             "scale*b");
        same(NeighborFn::convolve(b, NeighborFn::inverse_shift({f, n, n, dx})), one, v, "Phi(r=n)*Phi(r=n)^-1");
        same(NeighborFn::convolve(NeighborFn::inverse_shift({f, n, n, dx}), b), one, v, "Phi(r=n)^-1*Phi(r=n)");
      }
    }
  }
  return out;
}

Outcome criterion9() {
  Outcome out;
  for (const FigureCase& fig : reference_figures()) {
    const InterpolationResult res = interpolate_multiplicities(fig.n, fig.r, fig.dx, parse_shape(fig.shape, fig.n), kInterpolationQs, kHeldOut);
    if (!res.verified) out.fail(fig.name + ": held-out q=" + std::to_string(kHeldOut) + " check failed");
    std::map<std::vector<int>, IntPoly> want(fig.labels.begin(), fig.labels.end());
    if (res.rows != want) {
      std::string got;
      for (const auto& [off, p] : res.rows) got += " " + offset_to_string(off) + ":" + p.to_string();
      out.fail(fig.name + ": recovered" + got);
    }
  }
  return out;
}

Outcome criterion10(const std::vector<GridPoint>& g) {
  Outcome out;
  for (const GridPoint& gp : g) {
    const HeckeGenerator gen(gp.params);
    for (const Vertex& v : gp.vertices) {
      const EdgeSet nb = gen.neighbors(v);
      const std::string where = detail::describe(gp.params) + " v=" + v.to_string();
      if (!subset_twist_support(gp.params, v, nb)) out.fail("support: " + where);
      for (int c : {-7, 1, 5}) {
        EdgeSet expect(v.shifted(c));
        for (const auto& [dst, m] : nb.targets()) expect.add(dst.shifted(c), m);
        if (!(gen.neighbors(v.shifted(c)) == expect)) out.fail("translation by " + std::to_string(c) + ": " + where);
      }
    }
  }
  return out;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& run) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    std::printf("%s %d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), seconds_since(t0), o.detail.empty() ? "" : " | ",
                o.detail.c_str());
    std::fflush(stdout);
  };
  const std::vector<GridPoint> g = grid();
  report(1, "rank 2, deg 1 neighborhoods", criterion1);
  report(2, "rank 3, r=2, deg 1 neighborhoods", criterion2);
  report(3, "rank 2, deg 2 reference labels", criterion3);
  report(4, "rank 3, r=2, deg 2 neighborhood", criterion4);
  report(5, "mass conservation on the grid", [&] { return criterion5(g); });
  report(6, "reduction vs cohomology oracle and witnesses", [&] { return criterion6(g); });
  report(7, "delta window on all produced edges", criterion7);
  report(8, "algebra laws", criterion8);
  report(9, "interpolation of figure labels", criterion9);
  report(10, "support and translation equivariance", [&] { return criterion10(g); });
  return all ? 0 : 1;
}
