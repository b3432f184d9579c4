#include "otfgraph/ba_generator.hpp"

#include <stdexcept>
#include <string>

namespace otfgraph {

BaGenerator::BaGenerator(Node n, std::uint64_t seed, double toss_exponent)
    : tree_(n, seed, toss_exponent), heaps_(n) {}

std::size_t BaGenerator::stored_cells() const {
  return tree_.stored_cells() + heaps_.size() + heap_entries_;
}

Node BaGenerator::ba_parent(Node j) {
  ParentLink link = tree_.parent(j);
  while (link.flag == Flag::rec) link = tree_.parent(link.node);
  return link.node;
}

Node BaGenerator::ba_next_neighbor(Node j) {
  const Node n = size();
  if (j < 1 || j > n) {
    throw std::invalid_argument("ba_next_neighbor: node " + std::to_string(j) +
                                " outside [1, n]");
  }
  MinHeap* heap = heaps_.find(j);
  if (heap == nullptr) {
    heap = &heaps_.at_or_create(j);
    heap->push(n + 1);
    heap->push(tree_.next_child_tp(j, j, Flag::dir));
    heap_entries_ += 2;
    // Node 1 is its own BA parent, so links into it are direct either way.
    if (j == 1) {
      heap->push(tree_.next_child_tp(1, 1, Flag::rec));
      ++heap_entries_;
    }
    return ba_parent(j);
  }

  // Exhausted nodes answer n+1 without touching randomness.
  const Node r = heap->top();
  if (r == n + 1) return n + 1;
  heap->pop();

  const ParentLink link = tree_.parent(r);
  const Node sibling = link.flag == Flag::dir
                           ? tree_.next_child_tp(j, r, Flag::dir)
                           : tree_.next_child_tp(link.node, r, Flag::rec);
  const Node copier = tree_.next_child_tp(r, r, Flag::rec);
  heap->push(sibling);
  heap->push(copier);
  ++heap_entries_;
  return r;
}

}  // namespace otfgraph
