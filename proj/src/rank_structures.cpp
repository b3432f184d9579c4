#include "otfgraph/rank_structures.hpp"

#include <stdexcept>
#include <string>

namespace otfgraph {

std::uint64_t PhiOracle::phi(Node a) const {
  if (a < 2 || a > n_ + 1) {
    throw std::invalid_argument("phi: argument " + std::to_string(a) +
                                " outside [2, n+1]");
  }
  const std::size_t fronts_reaching = right_.count_greater_equal(a);
  const std::size_t fronted_above = left_.count_greater_equal(a);
  return (a - 1) - (fronts_reaching - fronted_above);
}

void PhiOracle::add_front(Node i, Node front) {
  left_.insert(i);
  right_.insert(front);
}

void PhiOracle::move_front(Node old_front, Node new_front) {
  if (!right_.erase_one(old_front)) {
    throw InternalError("phi oracle: unknown front " + std::to_string(old_front));
  }
  right_.insert(new_front);
}

void KSet::assign(Node x, bool member) {
  const bool present = contains(x);
  if (member && !present) members_.insert(x);
  if (!member && present) members_.erase_one(x);
}

std::uint64_t KSet::count_non_k(Node a, Node b) const {
  if (a > b) throw std::invalid_argument("count_non_k: a > b");
  if (a < 1 || b > n_ + 1) throw std::invalid_argument("count_non_k: out of range");
  return (b - a) - (members_.count_less(b) - members_.count_less(a));
}

std::uint64_t KSet::rank_complement(Node a) const {
  if (a < 1 || a > n_ + 1) {
    throw std::invalid_argument("rank_complement: argument outside [1, n+1]");
  }
  return (a - 1) - members_.count_less(a);
}

Node KSet::select_complement(std::uint64_t s) const {
  if (s >= complement_size()) {
    throw std::out_of_range("select_complement: rank " + std::to_string(s) +
                            " beyond complement size");
  }
  // Last member j of K with fewer than or exactly s complement elements below
  // it; the answer then sits in the gap right after j.
  const auto anchor = members_.last_where(
      [s](Node key, std::size_t less) { return (key - 1) - less <= s; });
  if (!anchor) return s + 1;
  const std::uint64_t below = (*anchor - 1) - members_.count_less(*anchor);
  return *anchor + 1 + (s - below);
}

Node KSet::vertex_of_rank(Node a, std::uint64_t h) const {
  const std::uint64_t base = rank_complement(a);
  if (h >= complement_size() - base) {
    throw std::out_of_range("vertex_of_rank: rank beyond the complement");
  }
  return select_complement(base + h);
}

void RankStructures::on_front_update(const FrontUpdate& u) {
  if (u.old_front && u.new_front <= *u.old_front) {
    throw InternalError("front of " + std::to_string(u.node) + " would regress from " +
                        std::to_string(*u.old_front) + " to " +
                        std::to_string(u.new_front));
  }
  if (u.new_front <= u.node || u.new_front > n_ + 1) {
    throw InternalError("front of " + std::to_string(u.node) + " out of range");
  }
  if (u.old_front) {
    phi_.move_front(*u.old_front, u.new_front);
  } else {
    phi_.add_front(u.node, u.new_front);
  }
  k_.assign(u.node, !u.front_inv_of_node.has_value());
  if (u.new_front <= n_) k_.assign(u.new_front, false);
  if (u.old_front && *u.old_front <= n_) {
    k_.assign(*u.old_front, u.front_of_old.has_value());
  }
}

}  // namespace otfgraph
