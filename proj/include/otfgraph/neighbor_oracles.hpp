#pragma once

#include <vector>

#include "otfgraph/batch.hpp"
#include "otfgraph/link_tree.hpp"
#include "otfgraph/sparse_state.hpp"
#include "otfgraph/types.hpp"

namespace otfgraph {

/// Answers next-neighbor queries from a stored graph: parent first, then
/// children ascending, then n+1 forever. This is the "sample everything up
/// front" baseline the lazy generators are measured against.
class StoredNeighborOracle {
 public:
  explicit StoredNeighborOracle(GraphSample graph);

  Node size() const { return graph_.n; }
  Node next_neighbor(Node j);

 private:
  GraphSample graph_;
  std::vector<std::vector<Node>> children_;
  std::vector<std::size_t> answered_;
};

/// Next-neighbor view of the random recursive tree held in a LinkTree.
class RrtNeighborOracle {
 public:
  explicit RrtNeighborOracle(LinkTree& tree) : tree_(tree), last_(tree.size()) {}

  Node size() const { return tree_.size(); }
  Node next_neighbor(Node j);

 private:
  LinkTree& tree_;
  // Last child returned for j (j itself right after the parent answer).
  LazyMap<Node> last_;
};

}  // namespace otfgraph
