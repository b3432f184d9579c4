#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "otfgraph/link_tree.hpp"
#include "otfgraph/sparse_state.hpp"
#include "otfgraph/types.hpp"

namespace otfgraph {

/// On-the-fly adjacency oracle for Barabasi-Albert graphs with one edge per
/// node (node 1 carries a self-loop).
///
/// The graph is the copying-model reading of a LinkTree: node x's BA parent
/// is u(x) when the link is dir, and the BA parent of u(x) when it is rec.
/// `ba_next_neighbor(j)` first returns the BA parent of j, then the BA
/// children of j in increasing order, then n+1 forever. Its answers have the
/// same joint law as querying a BA graph sampled in full beforehand.
class BaGenerator {
 public:
  BaGenerator(Node n, std::uint64_t seed, double toss_exponent = 3.0);

  Node size() const { return tree_.size(); }

  Node ba_parent(Node j);
  Node ba_next_neighbor(Node j);
  Node next_neighbor(Node j) { return ba_next_neighbor(j); }

  LinkTree& tree() { return tree_; }
  const LinkTree& tree() const { return tree_; }

  std::uint64_t bits_consumed() const { return tree_.bits_consumed(); }
  std::size_t stored_cells() const;

 private:
  using MinHeap = std::priority_queue<Node, std::vector<Node>, std::greater<>>;

  LinkTree tree_;
  // Pending BA children of j not yet returned; created on j's first query.
  LazyMap<MinHeap> heaps_;
  std::size_t heap_entries_ = 0;
};

}  // namespace otfgraph
