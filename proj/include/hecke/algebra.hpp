#pragma once

#include <memory>
#include <string>
#include <utility>

#include "hecke/hecke.hpp"

namespace hecke {

/// A Hecke-algebra element represented by its graph: Vertex -> EdgeSet.
///
/// Built from generators with zero, identity, sum, scalar multiple and
/// convolution; evaluation expands lazily from the queried vertex, so no
/// global graph is ever materialized.
class NeighborFn {
 public:
  enum class Kind { Zero, Identity, Generator, InverseShift, Sum, Scale, Convolve };

  static NeighborFn zero(Field field, int n) { return NeighborFn(make_leaf(Kind::Zero, std::move(field), n)); }
  static NeighborFn identity(Field field, int n) { return NeighborFn(make_leaf(Kind::Identity, std::move(field), n)); }

  static NeighborFn generator(const HeckeParams& params, NeighborOptions options = {}) {
    auto node = make_leaf(Kind::Generator, params.field, params.n);
    node->generator = std::make_shared<const HeckeGenerator>(params, options);
    return NeighborFn(std::move(node));
  }

  /// Phi_{x,n}^{-1}.
  static NeighborFn inverse_shift(const HeckeParams& params) {
    params.validate();
    if (params.r != params.n) throw RangeError("inverse_shift: requires r = n");
    auto node = make_leaf(Kind::InverseShift, params.field, params.n);
    node->params = params;
    return NeighborFn(std::move(node));
  }

  friend NeighborFn operator+(const NeighborFn& a, const NeighborFn& b) { return combine(Kind::Sum, a, b); }

  static NeighborFn scale(const Rational& c, const NeighborFn& a) {
    if (c == Rational(0)) throw RangeError("scale: factor must be nonzero");
    auto node = make_leaf(Kind::Scale, a.node_->field, a.node_->n);
    node->scalar = c;
    node->lhs = a.node_;
    return NeighborFn(std::move(node));
  }

  /// Two-step composition: first a, then b.
  static NeighborFn convolve(const NeighborFn& a, const NeighborFn& b) { return combine(Kind::Convolve, a, b); }

  [[nodiscard]] Kind kind() const noexcept { return node_->kind; }
  [[nodiscard]] int rank() const noexcept { return node_->n; }
  [[nodiscard]] const Field& field() const noexcept { return node_->field; }

  [[nodiscard]] EdgeSet operator()(const Vertex& v) const { return evaluate(*node_, v); }

  [[nodiscard]] std::string describe() const { return describe(*node_); }

 private:
  struct Node {
    Kind kind;
    Field field;
    int n;
    std::shared_ptr<const HeckeGenerator> generator;
    HeckeParams params;
    Rational scalar = 1;
    std::shared_ptr<const Node> lhs, rhs;
  };

  explicit NeighborFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::shared_ptr<Node> make_leaf(Kind kind, Field field, int n) {
    if (!field) throw RangeError("NeighborFn: missing field");
    if (n < 1) throw RangeError("NeighborFn: rank must be >= 1");
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->field = std::move(field);
    node->n = n;
    return node;
  }

  static NeighborFn combine(Kind kind, const NeighborFn& a, const NeighborFn& b) {
    if (a.rank() != b.rank() || !same_field(a.field(), b.field()))
      throw RangeError("NeighborFn: operands act on different (q, n)");
    auto node = make_leaf(kind, a.field(), a.rank());
    node->lhs = a.node_;
    node->rhs = b.node_;
    return NeighborFn(std::move(node));
  }

  static EdgeSet evaluate(const Node& node, const Vertex& v) {
    if (v.size() != node.n) throw RangeError("NeighborFn: vertex rank mismatch");
    EdgeSet out(v);
    switch (node.kind) {
      case Kind::Zero:
        break;
      case Kind::Identity:
        out.add(v, Rational(1));
        break;
      case Kind::Generator:
        return node.generator->neighbors(v);
      case Kind::InverseShift:
        return phi_n_inverse_neighbors(node.params, v);
      case Kind::Sum:
        for (const EdgeSet& part : {evaluate(*node.lhs, v), evaluate(*node.rhs, v)})
          for (const auto& [dst, m] : part.targets()) out.add(dst, m);
        break;
      case Kind::Scale: {
        const EdgeSet inner = evaluate(*node.lhs, v);
        for (const auto& [dst, m] : inner.targets()) out.add(dst, node.scalar * m);
        break;
      }
      case Kind::Convolve: {
        const EdgeSet first = evaluate(*node.lhs, v);
        for (const auto& [mid, m1] : first.targets()) {
          const EdgeSet second = evaluate(*node.rhs, mid);
          for (const auto& [dst, m2] : second.targets()) out.add(dst, m1 * m2);
        }
        break;
      }
    }
    return out;
  }

  static std::string describe(const Node& node) {
    switch (node.kind) {
      case Kind::Zero:
        return "0";
      case Kind::Identity:
        return "1";
      case Kind::Generator: {
        const auto& p = node.generator->params();
        return "Phi(r=" + std::to_string(p.r) + ",deg=" + std::to_string(p.dx) + ")";
      }
      case Kind::InverseShift:
        return "Phi(r=" + std::to_string(node.params.r) + ",deg=" + std::to_string(node.params.dx) + ")^-1";
      case Kind::Sum:
        return "(" + describe(*node.lhs) + " + " + describe(*node.rhs) + ")";
      case Kind::Scale:
        return rational_to_string(node.scalar) + "*" + describe(*node.lhs);
      case Kind::Convolve:
        return "(" + describe(*node.lhs) + " * " + describe(*node.rhs) + ")";
    }
    return "?";
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace hecke
