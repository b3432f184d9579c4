#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "otfgraph/bit_source.hpp"
#include "otfgraph/types.hpp"

namespace otfgraph {

using Rational = boost::multiprecision::cpp_rational;

enum class Model { ba, z, rrt };

Model parse_model(const std::string& name);
const char* to_string(Model model);

/// A fully materialized graph: parent[j-1] is the head of node j's edge, with
/// parent(1) = 1 for the self-loop.
struct GraphSample {
  Node n = 0;
  std::vector<Node> parent;

  Node parent_of(Node j) const { return parent.at(j - 1); }
  /// Throws std::invalid_argument unless parent(1) = 1 and parent(j) < j.
  void validate() const;

  friend bool operator==(const GraphSample&, const GraphSample&) = default;
};

/// Sequential BA process: e_1 is the self-loop, the head of e_j is node i
/// with probability deg(i) / (2(j-1)).
GraphSample batch_ba(Node n, BitSource& source);
/// Copying model with copy factor 1/2: pick u uniform on [1, j-1], then take
/// u itself on a heads bit, else the head of u's own edge.
GraphSample batch_z(Node n, BitSource& source);
/// Random recursive tree: parent(j) uniform on [1, j-1].
GraphSample batch_rrt(Node n, BitSource& source);
GraphSample batch_sample(Model model, Node n, BitSource& source);

/// Exact law over parent vectors, keyed by the vector (parent(1) included).
using ExactDistribution = std::map<std::vector<Node>, Rational>;

constexpr Node kMaxExactNodes = 8;

/// Unrolls the sequential process for n <= 8 in rational arithmetic.
ExactDistribution enumerate_exact(Model model, Node n);

}  // namespace otfgraph
