#include "otfgraph/order_statistic_tree.hpp"

namespace otfgraph {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

OrderStatisticTree::OrderStatisticTree() : pool_(1) {}

std::uint32_t OrderStatisticTree::make(Node key) {
  Item item;
  item.key = key;
  item.priority = mix(key);
  item.mult = 1;
  item.total = 1;
  if (!free_.empty()) {
    const std::uint32_t t = free_.back();
    free_.pop_back();
    pool_[t] = item;
    return t;
  }
  pool_.push_back(item);
  return static_cast<std::uint32_t>(pool_.size() - 1);
}

void OrderStatisticTree::pull(std::uint32_t t) {
  Item& it = pool_[t];
  it.total = pool_[it.left].total + it.mult + pool_[it.right].total;
}

std::uint32_t OrderStatisticTree::rotate_right(std::uint32_t t) {
  const std::uint32_t l = pool_[t].left;
  pool_[t].left = pool_[l].right;
  pool_[l].right = t;
  pull(t);
  pull(l);
  return l;
}

std::uint32_t OrderStatisticTree::rotate_left(std::uint32_t t) {
  const std::uint32_t r = pool_[t].right;
  pool_[t].right = pool_[r].left;
  pool_[r].left = t;
  pull(t);
  pull(r);
  return r;
}

std::uint32_t OrderStatisticTree::insert_at(std::uint32_t t, Node key) {
  if (t == kNil) return make(key);
  if (key == pool_[t].key) {
    ++pool_[t].mult;
    ++pool_[t].total;
    return t;
  }
  if (key < pool_[t].key) {
    const std::uint32_t child = insert_at(pool_[t].left, key);
    pool_[t].left = child;
    pull(t);
    if (pool_[child].priority > pool_[t].priority) return rotate_right(t);
  } else {
    const std::uint32_t child = insert_at(pool_[t].right, key);
    pool_[t].right = child;
    pull(t);
    if (pool_[child].priority > pool_[t].priority) return rotate_left(t);
  }
  return t;
}

std::uint32_t OrderStatisticTree::merge(std::uint32_t a, std::uint32_t b) {
  if (a == kNil) return b;
  if (b == kNil) return a;
  if (pool_[a].priority > pool_[b].priority) {
    pool_[a].right = merge(pool_[a].right, b);
    pull(a);
    return a;
  }
  pool_[b].left = merge(a, pool_[b].left);
  pull(b);
  return b;
}

std::uint32_t OrderStatisticTree::erase_at(std::uint32_t t, Node key, bool& erased) {
  if (t == kNil) return t;
  Item& it = pool_[t];
  if (key < it.key) {
    it.left = erase_at(it.left, key, erased);
  } else if (key > it.key) {
    it.right = erase_at(it.right, key, erased);
  } else {
    erased = true;
    if (it.mult > 1) {
      --it.mult;
    } else {
      const std::uint32_t replacement = merge(it.left, it.right);
      free_.push_back(t);
      return replacement;
    }
  }
  pull(t);
  return t;
}

void OrderStatisticTree::insert(Node key) { root_ = insert_at(root_, key); }

bool OrderStatisticTree::erase_one(Node key) {
  bool erased = false;
  root_ = erase_at(root_, key, erased);
  return erased;
}

std::size_t OrderStatisticTree::count(Node key) const {
  std::uint32_t t = root_;
  while (t != kNil) {
    const Item& it = pool_[t];
    if (key == it.key) return it.mult;
    t = key < it.key ? it.left : it.right;
  }
  return 0;
}

std::size_t OrderStatisticTree::count_less(Node key) const {
  std::size_t less = 0;
  std::uint32_t t = root_;
  while (t != kNil) {
    const Item& it = pool_[t];
    if (it.key < key) {
      less += pool_[it.left].total + it.mult;
      t = it.right;
    } else {
      t = it.left;
    }
  }
  return less;
}

std::vector<Node> OrderStatisticTree::to_vector() const {
  std::vector<Node> out;
  out.reserve(size());
  std::vector<std::uint32_t> stack;
  std::uint32_t t = root_;
  while (t != kNil || !stack.empty()) {
    while (t != kNil) {
      stack.push_back(t);
      t = pool_[t].left;
    }
    t = stack.back();
    stack.pop_back();
    out.insert(out.end(), pool_[t].mult, pool_[t].key);
    t = pool_[t].right;
  }
  return out;
}

}  // namespace otfgraph
