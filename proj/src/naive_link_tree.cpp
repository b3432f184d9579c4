#include "otfgraph/naive_link_tree.hpp"

#include <stdexcept>
#include <string>

namespace otfgraph {

NaiveLinkTree::NaiveLinkTree(Node n, std::uint64_t seed)
    : n_(n), source_(seed), links_(n + 2), front_(n + 2) {
  if (n < 1) throw std::invalid_argument("graph size must be at least 1");
  links_[1] = ParentLink{1, Flag::dir};
}

void NaiveLinkTree::check_node(Node j) const {
  if (j < 1 || j > n_) {
    throw std::invalid_argument("node " + std::to_string(j) + " outside [1, n]");
  }
}

std::uint64_t NaiveLinkTree::phi(Node x) const {
  std::uint64_t count = 0;
  for (Node i = 1; i < x; ++i) {
    if (!front_[i] || *front_[i] < x) ++count;
  }
  return count;
}

ParentLink NaiveLinkTree::parent(Node j) {
  check_node(j);
  if (links_[j]) return *links_[j];
  std::vector<Node> possible;
  for (Node i = 1; i < j; ++i) {
    if (!front_[i] || *front_[i] < j) possible.push_back(i);
  }
  const Node chosen = possible[source_.uniform_int(possible.size())];
  const Flag flag = source_.uniform_flag();
  links_[j] = ParentLink{chosen, flag};
  return *links_[j];
}

void NaiveLinkTree::advance_front(Node j, Node value) {
  if (!front_[j] || *front_[j] < value) front_[j] = value;
}

Node NaiveLinkTree::next_child(Node j, Node k) {
  check_node(j);
  for (Node x = k + 1; x <= n_; ++x) {
    if (links_[x]) {
      if (links_[x]->node == j) {
        advance_front(j, x);
        return x;
      }
      continue;
    }
    // Unlinked nodes at or below front(j) are already known not to be
    // children of j.
    if (front_[j] && x <= *front_[j]) continue;
    if (source_.uniform_int(phi(x)) == 0) {
      links_[x] = ParentLink{j, source_.uniform_flag()};
      advance_front(j, x);
      return x;
    }
  }
  advance_front(j, n_ + 1);
  return n_ + 1;
}

Node NaiveLinkTree::next_child_tp(Node j, Node k, Flag type) {
  Node x = k;
  do {
    x = next_child(j, x);
  } while (x <= n_ && links_[x]->flag != type);
  return x;
}

}  // namespace otfgraph
