#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "otfgraph/ba_generator.hpp"
#include "otfgraph/batch.hpp"
#include "otfgraph/types.hpp"

namespace otfgraph {

/// Degrees of a graph sample read as an undirected graph whose edges point
/// from j to parent(j). The self-loop at node 1 adds 2 to deg(1) and 1 to both
/// its in- and out-degree. Index i-1 holds node i.
struct DegreeStats {
  std::vector<std::uint64_t> degree;
  std::vector<std::uint64_t> in_degree;
  std::vector<std::uint64_t> out_degree;
  std::vector<double> delta;     // deg(i) / 2|E|
  std::vector<double> delta_in;  // deg_in(i) / |E|
  std::map<std::uint64_t, std::uint64_t> histogram;  // degree -> node count

  double fraction_with_degree(std::uint64_t d) const;
};

DegreeStats degree_stats(const GraphSample& g);

struct TreeMetrics {
  std::uint64_t height = 0;         // longest path to node 1, self-loop ignored
  std::uint64_t max_in_degree = 0;  // largest child count, self-loop ignored
};

TreeMetrics tree_metrics(const GraphSample& g);

using Histogram = std::map<std::vector<Node>, std::uint64_t>;

/// 1/2 * sum |p - q| with q the empirical law of `counts`; outcomes missing
/// from either side count as zero mass there.
Rational tv_distance(const ExactDistribution& p, const Histogram& counts);
Rational tv_distance(const Histogram& a, const Histogram& b);

struct ChiSquareResult {
  double statistic = 0.0;
  std::uint64_t dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit of `counts` against p. Cells expected below 5 are
/// pooled (smallest first); observations outside p's support make p_value 0.
/// Throws std::invalid_argument when fewer than two cells remain.
ChiSquareResult chi_square(const ExactDistribution& p, const Histogram& counts);

/// Pearson test that two samples share one law (2 x k contingency table),
/// pooling cells whose expected count falls below 5.
ChiSquareResult chi_square_two_sample(const Histogram& a, const Histogram& b);

/// Upper tail of the chi-square distribution.
double chi_square_survival(double statistic, std::uint64_t dof);

// --- sweeps -----------------------------------------------------------------

enum class Schedule { node_major, round_robin };

Schedule parse_schedule(const std::string& name);

struct QueryAnswer {
  Node node = 0;
  Node answer = 0;

  friend bool operator==(const QueryAnswer&, const QueryAnswer&) = default;
};

/// Exhausts every node's neighbor list: node-major finishes node j before
/// starting j+1, round-robin gives each unfinished node one query per pass.
template <typename Oracle>
std::vector<QueryAnswer> run_sweep(Oracle& oracle, Schedule schedule) {
  const Node n = oracle.size();
  std::vector<QueryAnswer> transcript;
  if (schedule == Schedule::node_major) {
    for (Node j = 1; j <= n; ++j) {
      for (;;) {
        const Node r = oracle.next_neighbor(j);
        transcript.push_back({j, r});
        if (r == n + 1) break;
      }
    }
    return transcript;
  }
  std::vector<Node> open;
  for (Node j = 1; j <= n; ++j) open.push_back(j);
  while (!open.empty()) {
    std::vector<Node> still_open;
    for (Node j : open) {
      const Node r = oracle.next_neighbor(j);
      transcript.push_back({j, r});
      if (r != n + 1) still_open.push_back(j);
    }
    open.swap(still_open);
  }
  return transcript;
}

/// Rebuilds the graph from a transcript that exhausted every node and
/// cross-checks it: the first answer of j is its parent (below j, or 1 for
/// node 1), later answers rise strictly to n+1 and stay there, and c is listed
/// as a child of j exactly when parent(c) = j. Throws InternalError otherwise.
GraphSample graph_from_transcript(Node n, const std::vector<QueryAnswer>& transcript);

GraphSample reconstruct_via_sweep(BaGenerator& gen, Schedule schedule = Schedule::node_major);

// --- link-level schedules ---------------------------------------------------

/// One step of an interleaved link-tree schedule: either parent(j), or the
/// next child of j with the given flag after the last one this stream saw.
struct LinkQuery {
  bool is_parent = false;
  Node node = 0;
  Flag type = Flag::dir;
};

/// A fixed pseudo-random schedule of `length` queries on nodes 1..n, about a
/// third of them parent queries.
std::vector<LinkQuery> make_link_schedule(Node n, std::size_t length, std::uint64_t seed);

/// Plays a schedule against LinkTree or NaiveLinkTree. Parent answers are
/// encoded as 2*u + (flag == rec); child answers are the node itself. A
/// (j, flag) stream that already hit n+1 answers n+1 without a call.
template <typename Tree>
std::vector<Node> run_link_schedule(Tree& tree, const std::vector<LinkQuery>& schedule) {
  const Node n = tree.size();
  std::map<std::pair<Node, Flag>, Node> last;
  std::vector<Node> out;
  out.reserve(schedule.size());
  for (const LinkQuery& q : schedule) {
    if (q.is_parent) {
      const ParentLink p = tree.parent(q.node);
      out.push_back(2 * p.node + (p.flag == Flag::rec ? 1 : 0));
      continue;
    }
    auto [it, fresh] = last.try_emplace({q.node, q.type}, q.node);
    if (it->second <= n) it->second = tree.next_child_tp(q.node, it->second, q.type);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace otfgraph
