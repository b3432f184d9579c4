#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "otfgraph/types.hpp"

namespace otfgraph {

/// Multiset of nodes with rank queries: a treap whose priorities are a hash of
/// the key, so its shape (and cost) is independent of any BitSource.
///
/// Equal keys share one tree node carrying a multiplicity, hence
/// `stored_cells()` counts distinct keys.
class OrderStatisticTree {
 public:
  OrderStatisticTree();

  void insert(Node key);
  /// Removes one occurrence; false if the key is absent.
  bool erase_one(Node key);

  std::size_t count(Node key) const;
  /// Number of stored elements (with multiplicity) strictly below key.
  std::size_t count_less(Node key) const;
  std::size_t count_greater_equal(Node key) const { return size() - count_less(key); }

  std::size_t size() const { return pool_[root_].total; }
  bool empty() const { return size() == 0; }
  std::size_t stored_cells() const { return pool_.size() - 1 - free_.size(); }

  /// Largest stored key k with pred(k, count_less(k)) true, for a predicate
  /// that is true on a prefix of the key order and false afterwards. One
  /// root-to-leaf descent.
  template <typename Pred>
  std::optional<Node> last_where(Pred pred) const {
    std::optional<Node> best;
    std::size_t before = 0;
    std::uint32_t t = root_;
    while (t != kNil) {
      const Item& it = pool_[t];
      const std::size_t less = before + pool_[it.left].total;
      if (pred(it.key, less)) {
        best = it.key;
        before = less + it.mult;
        t = it.right;
      } else {
        t = it.left;
      }
    }
    return best;
  }

  /// Keys in ascending order, each repeated by its multiplicity.
  std::vector<Node> to_vector() const;

 private:
  static constexpr std::uint32_t kNil = 0;

  struct Item {
    Node key = 0;
    std::uint64_t priority = 0;
    std::size_t mult = 0;
    std::size_t total = 0;
    std::uint32_t left = kNil;
    std::uint32_t right = kNil;
  };

  std::uint32_t make(Node key);
  void pull(std::uint32_t t);
  std::uint32_t rotate_right(std::uint32_t t);
  std::uint32_t rotate_left(std::uint32_t t);
  std::uint32_t insert_at(std::uint32_t t, Node key);
  std::uint32_t erase_at(std::uint32_t t, Node key, bool& erased);
  std::uint32_t merge(std::uint32_t a, std::uint32_t b);

  std::vector<Item> pool_;
  std::vector<std::uint32_t> free_;
  std::uint32_t root_ = kNil;
};

}  // namespace otfgraph
