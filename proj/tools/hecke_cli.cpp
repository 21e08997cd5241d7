// hecke: neighborhoods, graph slices, verification suites and multiplicity
// interpolation for Hecke operators on vector bundles over P^1(F_q).

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hecke/graph_io.hpp"
#include "hecke/interpolate.hpp"
#include "hecke/verify.hpp"

namespace {

using namespace hecke;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Reported as a usage error (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeneratorFlags {
  std::uint64_t q = 0;
  int ext = 1;
  int n = 0, r = 0, dx = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "Field size (a prime power), or the prime p when --ext > 1")->required();
    cmd->add_option("--ext", ext, "Extension degree e, for q = p^e")->check(CLI::PositiveNumber);
    cmd->add_option("--n", n, "Bundle rank")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--r", r, "Hecke index, 1 <= r <= n")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--deg-x", dx, "Degree of the place x")->check(CLI::PositiveNumber);
  }

  [[nodiscard]] HeckeParams params() const {
    int p = 0, e = ext;
    if (ext > 1) {
      if (q > 1u << 16 || !FieldCtx::is_prime(static_cast<int>(q)))
        throw UsageError("--q must be prime when --ext is given");
      p = static_cast<int>(q);
    } else {
      std::tie(p, e) = prime_power_decompose(static_cast<long long>(q));
      if (p == 0) throw UsageError("--q " + std::to_string(q) + " is not a prime power");
    }
    if (r > n) throw UsageError("--r must not exceed --n");
    HeckeParams hp{make_field(p, e), n, r, dx};
    hp.validate();
    return hp;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw UsageError("bad integer \"" + s + "\" in " + what);
  return v;
}

template <typename T>
std::vector<T> parse_list(const std::string& s, const std::string& what) {
  std::vector<T> out;
  for (const std::string& item : split(s, ',')) out.push_back(static_cast<T>(parse_int(item, what)));
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

int cmd_neighbors(const GeneratorFlags& g, const std::string& vertex, bool oracle) {
  const HeckeParams p = g.params();
  std::vector<int> d = parse_list<int>(vertex, "--vertex");
  if (static_cast<int>(d.size()) != p.n) throw UsageError("--vertex needs " + std::to_string(p.n) + " coordinates");
  if (!std::is_sorted(d.begin(), d.end(), std::greater<>{})) std::cerr << "warning: --vertex sorted into non-increasing order\n";
  std::cout << neighbors(p, Vertex::sorted(std::move(d)), {true, oracle}).to_string();
  return kExitOk;
}

int cmd_graph(const GeneratorFlags& g, const std::string& window, const std::string& format, const std::string& output) {
  const HeckeParams p = g.params();
  const auto dots = window.find("..");
  if (dots == std::string::npos) throw UsageError("--window must look like lo..hi");
  const int lo = static_cast<int>(parse_int(window.substr(0, dots), "--window"));
  const int hi = static_cast<int>(parse_int(window.substr(dots + 2), "--window"));
  if (lo > hi) throw UsageError("--window needs lo <= hi");
  const GraphDocument doc = build_graph(p, lo, hi);
  const std::string text = format == "dot" ? to_dot(doc) : format == "json" ? to_json_string(doc) : to_csv(doc);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!(out << text)) throw UsageError("cannot write " + output);
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const VerifyCaps& caps) {
  std::vector<CheckResult> results;
  if (suite == "paper-examples") results = paper_examples_suite(caps);
  else if (suite == "invariants") results = invariants_suite(caps);
  else results = oracle_suite(caps);
  bool all = true;
  for (const CheckResult& c : results) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << (c.ok ? " (" + c.detail + ")" : ": " + c.detail);
    std::cout << "\n";
    all = all && c.ok;
  }
  std::cout << (all ? "all checks passed\n" : "some checks failed\n");
  return all ? kExitOk : kExitFailure;
}

int cmd_interpolate(int n, int r, int dx, const std::string& shape, const std::string& qs, std::uint64_t held_out) {
  if (r > n) throw UsageError("--r must not exceed --n");
  const auto res = interpolate_multiplicities(n, r, dx, parse_shape(shape, n), parse_list<std::uint64_t>(qs, "--qs"), held_out);
  std::cout << "vertex " << res.representative.to_string() << "\n";
  for (const auto& [off, poly] : res.rows) std::cout << offset_to_string(off) << " : " << poly.to_string() << "\n";
  std::cout << "held-out q=" << res.held_out << ": " << (res.verified ? "verified" : "MISMATCH") << "\n";
  for (const std::string& why : res.problems) std::cout << "  " << why << "\n";
  return res.verified ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke operator graphs for vector bundles on P^1 over finite fields"};
  app.require_subcommand(1);

  GeneratorFlags gen;
  std::string vertex;
  bool oracle = false;
  auto* nb = app.add_subcommand("neighbors", "Print the neighborhood of one vertex");
  gen.attach(nb);
  nb->add_option("--vertex", vertex, "Exponents d1,d2,... (non-increasing)")->required();
  nb->add_flag("--oracle", oracle, "Cross-check each reduction with the cohomology oracle");

  GeneratorFlags ggen;
  std::string window, format = "dot", output;
  auto* gr = app.add_subcommand("graph", "Emit all edges leaving a window of vertices");
  ggen.attach(gr);
  gr->add_option("--window", window, "Coordinate range lo..hi for source vertices")->required();
  gr->add_option("--format", format, "dot, json or csv")->check(CLI::IsMember({"dot", "json", "csv"}));
  gr->add_option("-o,--output", output, "Output file (default stdout)");

  std::string suite, vqs = "2,3";
  VerifyCaps caps;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite, "paper-examples, invariants or oracle")->required()->check(CLI::IsMember({"paper-examples", "invariants", "oracle"}));
  ver->add_option("--qs", vqs, "Field sizes to test");
  ver->add_option("--max-n", caps.max_n, "Largest rank")->check(CLI::Range(1, 6));
  ver->add_option("--max-deg", caps.max_dx, "Largest place degree")->check(CLI::Range(1, 4));
  ver->add_option("--samples", caps.samples, "Random vertices per parameter set")->check(CLI::PositiveNumber);
  ver->add_option("--seed", caps.seed, "Sampling seed");

  int in = 0, ir = 0, idx = 1;
  std::string shape, iqs = "2,3,5,7,11";
  std::uint64_t held_out = 0;
  auto* ip = app.add_subcommand("interpolate", "Fit edge weights as polynomials in q");
  ip->add_option("--n", in, "Bundle rank")->required()->check(CLI::PositiveNumber);
  ip->add_option("--r", ir, "Hecke index")->required()->check(CLI::PositiveNumber);
  ip->add_option("--deg-x", idx, "Degree of the place x")->check(CLI::PositiveNumber);
  ip->add_option("--shape", shape, "Gap pattern such as d1>d2=d3");
  ip->add_option("--qs", iqs, "Sample field sizes");
  ip->add_option("--held-out", held_out, "Validation field size (default: next prime power)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*nb) return cmd_neighbors(gen, vertex, oracle);
    if (*gr) return cmd_graph(ggen, window, format, output);
    if (*ver) {
      caps.qs = parse_list<std::uint64_t>(vqs, "--qs");
      return cmd_verify(suite, caps);
    }
    if (shape.empty() && in == 1) shape = "d1";
    if (shape.empty()) throw UsageError("--shape is required for n > 1");
    return cmd_interpolate(in, ir, idx, shape, iqs, held_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitFailure;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}
