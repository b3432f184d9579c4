#include "otfgraph/link_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace otfgraph {

namespace {

struct DepthGuard {
  DepthGuard(std::uint64_t& depth, std::uint64_t& max_depth) : depth_(depth) {
    max_depth = std::max(max_depth, ++depth_);
  }
  ~DepthGuard() { --depth_; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

  std::uint64_t& depth_;
};

}  // namespace

LinkTree::LinkTree(Node n, std::uint64_t seed, double toss_exponent)
    : n_(n),
      source_(seed),
      toss_(Toss::for_graph(n, toss_exponent)),
      links_(n),
      front_(n),
      front_inv_(n),
      children_(n),
      ranks_(n) {
  if (n < 1) throw std::invalid_argument("graph size must be at least 1");
}

void LinkTree::check_node(Node j, const char* op) const {
  if (j < 1 || j > n_) {
    throw std::invalid_argument(std::string(op) + ": node " + std::to_string(j) +
                                " outside [1, " + std::to_string(n_) + "]");
  }
}

std::optional<ParentLink> LinkTree::link(Node j) const {
  if (j == 1) return ParentLink{1, Flag::dir};
  return links_.get(j);
}

std::size_t LinkTree::stored_cells() const {
  return links_.size() + front_.size() + front_inv_.size() + children_.stored_cells() +
         ranks_.stored_cells();
}

void LinkTree::attach(Node child, Node parent_node, Flag flag) {
  links_.set(child, ParentLink{parent_node, flag});
  children_.insert(parent_node, child);
}

ParentLink LinkTree::parent(Node j) {
  check_node(j, "parent");
  if (j == 1) return {1, Flag::dir};
  if (auto known = links_.get(j)) return *known;

  // The possible parents Phi(j) are in bijection with [1, j-1] \ K: a
  // complement element x stands for itself when it has no front, and for
  // front^-1(x) otherwise.
  const std::uint64_t phi = ranks_.phi(j);
  const KSet& k = ranks_.k();
  if (phi != k.rank_complement(j)) {
    throw InternalError("phi(" + std::to_string(j) + ") disagrees with the K complement");
  }
  const Node x = k.select_complement(source_.uniform_int(phi));
  Node chosen = x;
  if (front_.contains(x)) {
    const auto inv = front_inv_.get(x);
    if (!inv) throw InternalError("fronted node outside K lacks front^-1");
    chosen = *inv;
  }
  const Flag flag = source_.uniform_flag();
  attach(j, chosen, flag);
  return {chosen, flag};
}

void LinkTree::assign_link(Node j, ParentLink link) {
  check_node(j, "assign_link");
  if (j == 1) throw std::invalid_argument("assign_link: node 1 is fixed");
  if (links_.contains(j)) throw std::invalid_argument("assign_link: node already exposed");
  if (link.node < 1 || link.node >= j) {
    throw std::invalid_argument("assign_link: parent must lie in [1, j-1]");
  }
  if (auto f = front_.get(link.node); f && *f >= j) {
    throw std::invalid_argument("assign_link: parent already ruled out for this node");
  }
  attach(j, link.node, link.flag);
}

void LinkTree::commit_front(Node j, Node value) {
  const std::optional<Node> old = front_.get(j);
  front_.set(j, value);
  std::optional<Node> front_of_old;
  if (old && *old <= n_) {
    front_inv_.erase(*old);
    front_of_old = front_.get(*old);
  }
  if (value <= n_) front_inv_.set(value, j);
  ranks_.on_front_update(FrontUpdate{j, old, value, front_inv_.get(j), front_of_old});
  if (value <= n_ && !front_.contains(value)) next_child(value);
}

Node LinkTree::next_child(Node j) {
  check_node(j, "next_child");
  DepthGuard guard(depth_, counters_.max_recursion_depth);
  ++counters_.next_child_calls;

  parent(j);
  const std::optional<Node> f = front_.get(j);
  if (f && *f >= n_) return n_ + 1;

  Node a = f ? *f + 1 : j + 1;
  const Node b = children_.succ(j, f ? *f : j);
  const KSet& k = ranks_.k();
  std::uint64_t iterations = 0;
  for (;;) {
    ++iterations;
    ++counters_.loop_iterations;
    counters_.max_loop_iterations = std::max(counters_.max_loop_iterations, iterations);

    const std::uint64_t s = k.count_non_k(a, b);
    const std::uint64_t h = toss_(source_, ranks_.phi(a), s + 1);
    if (h == s) {
      commit_front(j, b);
      return b;
    }
    const Node x = k.vertex_of_rank(a, h);
    if (!links_.contains(x)) {
      attach(x, j, source_.uniform_flag());
      commit_front(j, x);
      return x;
    }
    // x already belongs to another parent: restart the coins just past it.
    ++counters_.rejected_candidates;
    a = x + 1;
  }
}

Node LinkTree::next_child_from(Node j, Node k) {
  check_node(j, "next_child_from");
  if (k >= n_) return n_ + 1;
  // Answers below front(j) are read back from child(j); push the front past k
  // first so that callers need not track it.
  for (;;) {
    const auto f = front_.get(j);
    if (f && *f >= k) break;
    next_child(j);
  }
  const Node q = children_.succ(j, k);
  if (q <= *front_.get(j)) return q;
  return next_child(j);
}

Node LinkTree::next_child_tp(Node j, Node k, Flag type) {
  check_node(j, "next_child_tp");
  Node x = k;
  do {
    x = next_child_from(j, x);
  } while (x <= n_ && links_.get(x)->flag != type);
  return x;
}

}  // namespace otfgraph
