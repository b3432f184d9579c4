#pragma once

#include <optional>
#include <vector>

#include "otfgraph/bit_source.hpp"
#include "otfgraph/types.hpp"

namespace otfgraph {

/// Linear-time reference for LinkTree, used only as a test oracle.
///
/// Child queries scan the nodes above the query point one at a time; every
/// still-unlinked node beyond front(j) takes j as its parent with probability
/// 1/phi(x), phi computed straight from its definition. No K set, no toss, no
/// recursive front maintenance.
class NaiveLinkTree {
 public:
  NaiveLinkTree(Node n, std::uint64_t seed);

  Node size() const { return n_; }

  ParentLink parent(Node j);
  /// Least u-child of j strictly above k, or n+1.
  Node next_child(Node j, Node k);
  Node next_child_tp(Node j, Node k, Flag type);

  /// |{i < x : front(i) unset or front(i) < x}|.
  std::uint64_t phi(Node x) const;

  std::optional<ParentLink> link(Node j) const { return links_.at(j); }
  std::optional<Node> front(Node j) const { return front_.at(j); }
  std::uint64_t bits_consumed() const { return source_.bits_consumed(); }

 private:
  void check_node(Node j) const;
  void advance_front(Node j, Node value);

  Node n_;
  BitSource source_;
  std::vector<std::optional<ParentLink>> links_;
  std::vector<std::optional<Node>> front_;
};

}  // namespace otfgraph
