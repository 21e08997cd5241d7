#pragma once

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/hecke.hpp"

namespace hecke {

inline constexpr const char* kToolVersion = "1.0.0";

/// A bounded slice of a generator graph.
struct GraphDocument {
  HeckeParams params;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::string version = kToolVersion;
};

/// Non-increasing tuples with every coordinate in [lo, hi], lexicographic.
inline std::vector<Vertex> window_vertices(int n, int lo, int hi) {
  if (n < 1) throw RangeError("window: rank must be >= 1");
  if (lo > hi) throw RangeError("window: need lo <= hi");
  std::vector<Vertex> out;
  std::vector<int> d(n, lo);
  while (true) {
    out.emplace_back(d);
    // Next non-increasing tuple in lexicographic order.
    int i = n - 1;
    while (i >= 0 && d[i] == (i == 0 ? hi : d[i - 1])) --i;
    if (i < 0) break;
    ++d[i];
    for (int j = i + 1; j < n; ++j) d[j] = lo;
  }
  return out;
}

/// Edges out of every window vertex; targets may leave the window.
inline GraphDocument build_graph(const HeckeParams& params, int lo, int hi, NeighborOptions options = {}) {
  params.validate();
  GraphDocument doc{params, window_vertices(params.n, lo, hi), {}};
  const HeckeGenerator gen(params, options);
  for (const Vertex& v : doc.vertices)
    for (Edge& e : gen.neighbors(v).edges()) doc.edges.push_back(std::move(e));
  return doc;
}

inline nlohmann::ordered_json to_json(const GraphDocument& doc) {
  using nlohmann::ordered_json;
  const FieldCtx& f = *doc.params.field;
  ordered_json j;
  j["params"] = {{"q", f.q()}, {"p", f.p()}, {"e", f.e()}, {"n", doc.params.n}, {"r", doc.params.r}, {"deg_x", doc.params.dx}};
  j["vertices"] = ordered_json::array();
  for (const Vertex& v : doc.vertices) j["vertices"].push_back(v.coords());
  j["edges"] = ordered_json::array();
  for (const Edge& e : doc.edges) {
    ordered_json m = e.mult.denominator() == 1 ? ordered_json(e.mult.numerator()) : ordered_json(rational_to_string(e.mult));
    j["edges"].push_back({{"src", e.src.coords()}, {"dst", e.dst.coords()}, {"mult", std::move(m)}});
  }
  j["meta"] = {{"version", doc.version}};
  return j;
}

inline std::string to_json_string(const GraphDocument& doc) { return to_json(doc).dump(2) + "\n"; }

namespace detail {

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw RangeError("json: bad multiplicity \"" + s + "\"");
  }
}

}  // namespace detail

inline GraphDocument from_json(const nlohmann::json& j) {
  try {
    const auto& p = j.at("params");
    const Field field = make_field(p.at("p").get<int>(), p.at("e").get<int>());
    if (field->q() != p.at("q").get<std::uint64_t>()) throw RangeError("json: q does not equal p^e");
    GraphDocument doc{{field, p.at("n").get<int>(), p.at("r").get<int>(), p.at("deg_x").get<int>()}, {}, {}};
    doc.params.validate();
    for (const auto& v : j.at("vertices")) doc.vertices.emplace_back(v.get<std::vector<int>>());
    for (const auto& e : j.at("edges")) {
      const auto& m = e.at("mult");
      const Rational mult = m.is_string() ? detail::parse_rational(m.get<std::string>()) : Rational(m.get<std::int64_t>());
      doc.edges.push_back({Vertex(e.at("src").get<std::vector<int>>()), Vertex(e.at("dst").get<std::vector<int>>()), mult});
    }
    doc.version = j.at("meta").at("version").get<std::string>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw RangeError(std::string("json: ") + e.what());
  }
}

inline GraphDocument from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw RangeError(std::string("json: ") + e.what());
  }
  return from_json(j);
}

inline bool operator==(const GraphDocument& a, const GraphDocument& b) {
  return same_field(a.params.field, b.params.field) && a.params.n == b.params.n && a.params.r == b.params.r &&
         a.params.dx == b.params.dx && a.vertices == b.vertices && a.edges == b.edges && a.version == b.version;
}

inline std::string to_dot(const GraphDocument& doc) {
  std::ostringstream os;
  const auto& p = doc.params;
  os << "digraph hecke {\n";
  os << "  // q=" << p.q() << " n=" << p.n << " r=" << p.r << " deg_x=" << p.dx << "\n";
  for (const Vertex& v : doc.vertices) os << "  \"" << v.to_string() << "\";\n";
  for (const Edge& e : doc.edges)
    os << "  \"" << e.src.to_string() << "\" -> \"" << e.dst.to_string() << "\" [label=\"" << rational_to_string(e.mult) << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_csv(const GraphDocument& doc) {
  auto cell = [](const Vertex& v) {
    std::string s;
    for (int i = 0; i < v.size(); ++i) s += (i ? "|" : "") + std::to_string(v[i]);
    return s;
  };
  std::string s = "src,dst,mult\n";
  for (const Edge& e : doc.edges) s += cell(e.src) + "," + cell(e.dst) + "," + rational_to_string(e.mult) + "\n";
  return s;
}

}  // namespace hecke
