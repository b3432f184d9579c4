#pragma once

#include <cstdint>
#include <optional>

#include "otfgraph/order_statistic_tree.hpp"
#include "otfgraph/types.hpp"

namespace otfgraph {

/// Counts the nodes that may still be the parent of a given node.
///
/// `left` holds every i with front(i) set, `right` the multiset of those
/// fronts. For a node a, the excluded parents are the i < a whose front
/// reaches a; every i >= a with a front has front(i) > i >= a, so
///   |excluded(a)| = |{front(i) >= a}| - |{i >= a : front(i) set}|
/// and phi(a) = (a - 1) - |excluded(a)|.
class PhiOracle {
 public:
  explicit PhiOracle(Node n) : n_(n) {}

  std::uint64_t phi(Node a) const;

  void add_front(Node i, Node front);
  void move_front(Node old_front, Node new_front);

  const OrderStatisticTree& left() const { return left_; }
  const OrderStatisticTree& right() const { return right_; }
  std::size_t stored_cells() const { return left_.stored_cells() + right_.stored_cells(); }

 private:
  Node n_;
  OrderStatisticTree left_;
  OrderStatisticTree right_;
};

/// The set K = {i : front(i) set, front^-1(i) unset} with rank and select over
/// its complement in [1, n+1]. All ranks are 0-based.
class KSet {
 public:
  explicit KSet(Node n) : n_(n) {}

  bool contains(Node x) const { return members_.count(x) != 0; }
  void assign(Node x, bool member);
  std::size_t size() const { return members_.size(); }

  /// |[a, b) \ K|.
  std::uint64_t count_non_k(Node a, Node b) const;
  /// |{i in [1, n+1] \ K : i < a}|.
  std::uint64_t rank_complement(Node a) const;
  /// The complement element of rank s.
  Node select_complement(std::uint64_t s) const;
  /// The (h+1)-th smallest complement element that is >= a.
  Node vertex_of_rank(Node a, std::uint64_t h) const;

  std::uint64_t complement_size() const { return (n_ + 1) - members_.size(); }
  const OrderStatisticTree& members() const { return members_; }
  std::size_t stored_cells() const { return members_.stored_cells(); }

 private:
  Node n_;
  OrderStatisticTree members_;
};

/// One committed change of front(i). `front_of_old` is front(old_front),
/// needed because old_front loses its front^-1 and may join K.
struct FrontUpdate {
  Node node = 0;
  std::optional<Node> old_front;
  Node new_front = 0;
  std::optional<Node> front_inv_of_node;
  std::optional<Node> front_of_old;
};

class RankStructures {
 public:
  explicit RankStructures(Node n) : phi_(n), k_(n), n_(n) {}

  /// Keeps left/right and K in step with one front change. Fronts only move
  /// forward; a regression throws InternalError.
  void on_front_update(const FrontUpdate& update);

  std::uint64_t phi(Node a) const { return phi_.phi(a); }
  const PhiOracle& phi_oracle() const { return phi_; }
  const KSet& k() const { return k_; }
  std::size_t stored_cells() const { return phi_.stored_cells() + k_.stored_cells(); }

 private:
  PhiOracle phi_;
  KSet k_;
  Node n_;
};

}  // namespace otfgraph
