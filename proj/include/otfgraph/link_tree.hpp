#pragma once

#include <cstdint>
#include <optional>

#include "otfgraph/bit_source.hpp"
#include "otfgraph/rank_structures.hpp"
#include "otfgraph/sparse_state.hpp"
#include "otfgraph/toss.hpp"
#include "otfgraph/types.hpp"

namespace otfgraph {

struct LinkTreeCounters {
  std::uint64_t next_child_calls = 0;
  std::uint64_t loop_iterations = 0;
  std::uint64_t max_loop_iterations = 0;  // within a single invocation
  std::uint64_t rejected_candidates = 0;
  std::uint64_t max_recursion_depth = 0;
};

/// Lazily sampled uniform parent-link tree on nodes 1..n, each link tagged
/// dir or rec with probability 1/2.
///
/// Every answer is distributed exactly as if all links had been drawn up
/// front (u(j) uniform on [1, j-1], independent flags) and then looked up.
/// Only the links and "no child here" facts that queries force are ever
/// materialized:
///   - front(j): the largest value a child query on j has returned. No
///     unexposed node in (j, front(j)] may take j as its parent.
///   - K: nodes with a front but nobody fronting to them. phi increments at
///     every index outside K, which makes the candidate coins in next_child a
///     harmonic sequence that Toss can sample in one draw.
///
/// Node 1 carries the self-loop link (1, dir) and never costs randomness.
/// A LinkTree is a single mutation domain; callers serialize access.
class LinkTree {
 public:
  LinkTree(Node n, std::uint64_t seed, double toss_exponent = 3.0);

  Node size() const { return n_; }
  Node sentinel() const { return n_ + 1; }

  /// u(j) and its flag, drawn on first request uniformly from the parents
  /// still possible for j. Idempotent.
  ParentLink parent(Node j);

  /// Least u-child of j above front(j), or n+1. Advances front(j).
  Node next_child(Node j);

  /// Least u-child of j strictly above k, or n+1.
  Node next_child_from(Node j, Node k);

  /// Least u-child of j strictly above k whose link has the given flag.
  Node next_child_tp(Node j, Node k, Flag type);

  /// Random recursive tree view: the same links with flags ignored.
  Node rrt_parent(Node j) { return parent(j).node; }
  Node rrt_next_child(Node j, Node k) { return next_child_from(j, k); }

  /// Conditions the tree on u(j) = link.node. Only allowed while j is
  /// unexposed and link.node is still a possible parent of j.
  void assign_link(Node j, ParentLink link);

  // Read-only views of the committed state.
  std::optional<ParentLink> link(Node j) const;
  std::optional<Node> front(Node j) const { return front_.get(j); }
  std::optional<Node> front_inverse(Node j) const { return front_inv_.get(j); }
  const ChildSets& children() const { return children_; }
  const RankStructures& ranks() const { return ranks_; }
  const LinkTreeCounters& counters() const { return counters_; }
  const Toss& toss_sampler() const { return toss_; }

  /// Keys held across every lazy structure.
  std::size_t stored_cells() const;
  std::uint64_t bits_consumed() const { return source_.bits_consumed(); }
  BitSource& source() { return source_; }

 private:
  void check_node(Node j, const char* op) const;
  /// front(j) <- value, with front^-1, K/phi maintenance, then the recursive
  /// child query that keeps front(front(j)) set.
  void commit_front(Node j, Node value);
  void attach(Node child, Node parent_node, Flag flag);

  Node n_;
  BitSource source_;
  Toss toss_;
  LazyMap<ParentLink> links_;
  LazyMap<Node> front_;
  LazyMap<Node> front_inv_;
  ChildSets children_;
  RankStructures ranks_;
  LinkTreeCounters counters_;
  std::uint64_t depth_ = 0;
};

}  // namespace otfgraph
