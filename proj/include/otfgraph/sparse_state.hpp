#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "otfgraph/types.hpp"

namespace otfgraph {

namespace detail {

inline void check_node_key(Node key, Node n) {
  if (key < 1 || key > n + 1) {
    throw std::invalid_argument("node " + std::to_string(key) +
                                " outside [1, " + std::to_string(n + 1) + "]");
  }
}

}  // namespace detail

/// Node-indexed "array" backed by a balanced search tree. Reads of unwritten
/// keys return nullopt; storage is proportional to the number of keys written,
/// never to n.
template <typename V>
class LazyMap {
 public:
  explicit LazyMap(Node n) : n_(n) {}

  std::optional<V> get(Node key) const {
    detail::check_node_key(key, n_);
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  void set(Node key, V value) {
    detail::check_node_key(key, n_);
    values_.insert_or_assign(key, std::move(value));
  }

  /// Mutable access, default-constructing the value on first touch.
  V& at_or_create(Node key) {
    detail::check_node_key(key, n_);
    return values_[key];
  }

  /// Removes the key; returns whether it was present.
  bool erase(Node key) { return values_.erase(key) != 0; }

  V* find(Node key) {
    auto it = values_.find(key);
    return it == values_.end() ? nullptr : &it->second;
  }

  bool contains(Node key) const { return values_.contains(key); }
  std::size_t size() const { return values_.size(); }
  Node universe() const { return n_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

 private:
  Node n_;
  std::map<Node, V> values_;
};

/// child(j) for every node j: the committed u-children of j, each set created
/// on first insert together with the sentinel n+1.
class ChildSets {
 public:
  explicit ChildSets(Node n) : n_(n) {}

  /// Throws InternalError on a duplicate insert: the generators only ever
  /// attach a node once.
  void insert(Node j, Node x) {
    detail::check_node_key(j, n_);
    detail::check_node_key(x, n_);
    if (x <= j || x > n_) {
      throw std::invalid_argument("child_insert: child must lie in (j, n]");
    }
    auto [it, created] = sets_.try_emplace(j);
    if (created) {
      it->second.insert(n_ + 1);
      ++stored_;
    }
    if (!it->second.insert(x).second) {
      throw InternalError("child_insert: duplicate child " + std::to_string(x) +
                          " of " + std::to_string(j));
    }
    ++stored_;
  }

  /// Least member of child(j) strictly greater than k. A set never touched
  /// behaves as {n+1}.
  Node succ(Node j, Node k) const {
    detail::check_node_key(j, n_);
    if (k > n_) {
      throw std::invalid_argument("child_succ: nothing above the sentinel");
    }
    auto it = sets_.find(j);
    if (it == sets_.end()) return n_ + 1;
    return *it->second.upper_bound(k);
  }

  bool initialized(Node j) const { return sets_.contains(j); }

  /// Members of child(j) including the sentinel; empty if never touched.
  const std::set<Node>& members(Node j) const {
    static const std::set<Node> empty;
    auto it = sets_.find(j);
    return it == sets_.end() ? empty : it->second;
  }

  std::size_t stored_cells() const { return stored_; }

 private:
  Node n_;
  std::map<Node, std::set<Node>> sets_;
  std::size_t stored_ = 0;
};

}  // namespace otfgraph
