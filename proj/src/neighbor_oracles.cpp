#include "otfgraph/neighbor_oracles.hpp"

#include <stdexcept>

namespace otfgraph {

StoredNeighborOracle::StoredNeighborOracle(GraphSample graph)
    : graph_(std::move(graph)), children_(graph_.n + 1), answered_(graph_.n + 1, 0) {
  graph_.validate();
  for (Node j = 2; j <= graph_.n; ++j) children_[graph_.parent_of(j)].push_back(j);
}

Node StoredNeighborOracle::next_neighbor(Node j) {
  if (j < 1 || j > graph_.n) throw std::invalid_argument("next_neighbor: node out of range");
  const std::size_t k = answered_[j];
  if (k > children_[j].size()) return graph_.n + 1;
  ++answered_[j];
  if (k == 0) return graph_.parent_of(j);
  return children_[j][k - 1];
}

Node RrtNeighborOracle::next_neighbor(Node j) {
  if (j < 1 || j > tree_.size()) {
    throw std::invalid_argument("next_neighbor: node out of range");
  }
  Node* last = last_.find(j);
  if (last == nullptr) {
    last_.set(j, j);
    return tree_.rrt_parent(j);
  }
  if (*last > tree_.size()) return *last;
  *last = tree_.rrt_next_child(j, *last);
  return *last;
}

}  // namespace otfgraph
