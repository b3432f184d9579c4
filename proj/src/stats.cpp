#include "otfgraph/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace otfgraph {

double DegreeStats::fraction_with_degree(std::uint64_t d) const {
  if (degree.empty()) return 0.0;
  auto it = histogram.find(d);
  const std::uint64_t count = it == histogram.end() ? 0 : it->second;
  return static_cast<double>(count) / static_cast<double>(degree.size());
}

DegreeStats degree_stats(const GraphSample& g) {
  g.validate();
  DegreeStats s;
  s.degree.assign(g.n, 0);
  s.in_degree.assign(g.n, 0);
  s.out_degree.assign(g.n, 0);
  for (Node j = 1; j <= g.n; ++j) {
    const Node head = g.parent_of(j);
    ++s.out_degree[j - 1];
    ++s.in_degree[head - 1];
    ++s.degree[j - 1];
    ++s.degree[head - 1];
  }
  const double edges = static_cast<double>(g.n);
  s.delta.resize(g.n);
  s.delta_in.resize(g.n);
  for (Node i = 0; i < g.n; ++i) {
    s.delta[i] = static_cast<double>(s.degree[i]) / (2.0 * edges);
    s.delta_in[i] = static_cast<double>(s.in_degree[i]) / edges;
    ++s.histogram[s.degree[i]];
  }
  return s;
}

TreeMetrics tree_metrics(const GraphSample& g) {
  g.validate();
  TreeMetrics m;
  std::vector<std::uint64_t> depth(g.n, 0);
  std::vector<std::uint64_t> kids(g.n, 0);
  for (Node j = 2; j <= g.n; ++j) {
    const Node p = g.parent_of(j);
    depth[j - 1] = depth[p - 1] + 1;
    m.height = std::max(m.height, depth[j - 1]);
    m.max_in_degree = std::max(m.max_in_degree, ++kids[p - 1]);
  }
  return m;
}

namespace {

std::uint64_t total(const Histogram& h) {
  std::uint64_t t = 0;
  for (const auto& [key, c] : h) t += c;
  return t;
}

struct Cell {
  double expected = 0.0;
  double observed = 0.0;
};

}  // namespace

Rational tv_distance(const ExactDistribution& p, const Histogram& counts) {
  const std::uint64_t t = total(counts);
  if (t == 0) throw std::invalid_argument("tv_distance: empty sample");
  Rational sum = 0;
  for (const auto& [key, prob] : p) {
    auto it = counts.find(key);
    const Rational q = it == counts.end() ? Rational(0) : Rational(it->second, t);
    sum += abs(prob - q);
  }
  for (const auto& [key, c] : counts) {
    if (!p.contains(key)) sum += Rational(c, t);
  }
  return sum / 2;
}

Rational tv_distance(const Histogram& a, const Histogram& b) {
  const std::uint64_t ta = total(a);
  const std::uint64_t tb = total(b);
  if (ta == 0 || tb == 0) throw std::invalid_argument("tv_distance: empty sample");
  Rational sum = 0;
  for (const auto& [key, c] : a) {
    auto it = b.find(key);
    const std::uint64_t cb = it == b.end() ? 0 : it->second;
    sum += abs(Rational(c, ta) - Rational(cb, tb));
  }
  for (const auto& [key, c] : b) {
    if (!a.contains(key)) sum += Rational(c, tb);
  }
  return sum / 2;
}

double chi_square_survival(double statistic, std::uint64_t dof) {
  if (dof == 0) throw std::invalid_argument("chi-square needs at least one degree of freedom");
  if (!std::isfinite(statistic)) return 0.0;
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(static_cast<double>(dof) / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square(const ExactDistribution& p, const Histogram& counts) {
  const std::uint64_t t = total(counts);
  if (t == 0) throw std::invalid_argument("chi_square: empty sample");
  std::vector<Cell> cells;
  for (const auto& [key, prob] : p) {
    auto it = counts.find(key);
    cells.push_back({static_cast<double>(t) * prob.convert_to<double>(),
                     it == counts.end() ? 0.0 : static_cast<double>(it->second)});
  }
  bool off_support = false;
  for (const auto& [key, c] : counts) off_support |= (c > 0 && !p.contains(key));

  std::sort(cells.begin(), cells.end(),
            [](const Cell& x, const Cell& y) { return x.expected < y.expected; });
  std::vector<Cell> pooled;
  Cell pool;
  std::size_t i = 0;
  for (; i < cells.size() && (cells[i].expected < 5.0 || pool.expected < 5.0) &&
         pool.expected < 5.0;
       ++i) {
    pool.expected += cells[i].expected;
    pool.observed += cells[i].observed;
  }
  if (pool.expected > 0.0) pooled.push_back(pool);
  for (; i < cells.size(); ++i) pooled.push_back(cells[i]);
  if (pooled.size() >= 2 && pooled.front().expected < 5.0) {
    pooled[1].expected += pooled[0].expected;
    pooled[1].observed += pooled[0].observed;
    pooled.erase(pooled.begin());
  }
  if (pooled.size() < 2) throw std::invalid_argument("chi_square: fewer than two cells");

  ChiSquareResult r;
  r.dof = pooled.size() - 1;
  if (off_support) {
    r.statistic = std::numeric_limits<double>::infinity();
    r.p_value = 0.0;
    return r;
  }
  for (const Cell& c : pooled) {
    const double d = c.observed - c.expected;
    r.statistic += d * d / c.expected;
  }
  r.p_value = chi_square_survival(r.statistic, r.dof);
  return r;
}

ChiSquareResult chi_square_two_sample(const Histogram& a, const Histogram& b) {
  const double na = static_cast<double>(total(a));
  const double nb = static_cast<double>(total(b));
  if (na == 0 || nb == 0) throw std::invalid_argument("chi_square_two_sample: empty sample");
  const double n = na + nb;

  struct Pair {
    double a = 0.0;
    double b = 0.0;
  };
  std::map<std::vector<Node>, Pair> joint;
  for (const auto& [key, c] : a) joint[key].a += static_cast<double>(c);
  for (const auto& [key, c] : b) joint[key].b += static_cast<double>(c);
  std::vector<Pair> cells;
  for (const auto& [key, pr] : joint) cells.push_back(pr);
  std::sort(cells.begin(), cells.end(),
            [](const Pair& x, const Pair& y) { return x.a + x.b < y.a + y.b; });

  const double smaller_share = std::min(na, nb) / n;
  auto small = [&](const Pair& c) { return (c.a + c.b) * smaller_share < 5.0; };
  std::vector<Pair> pooled;
  Pair pool;
  std::size_t i = 0;
  for (; i < cells.size() && small(pool); ++i) {
    pool.a += cells[i].a;
    pool.b += cells[i].b;
    if (!small(cells[i]) && !small(pool)) {
      ++i;
      break;
    }
  }
  if (pool.a + pool.b > 0) pooled.push_back(pool);
  for (; i < cells.size(); ++i) pooled.push_back(cells[i]);
  if (pooled.size() >= 2 && small(pooled.front())) {
    pooled[1].a += pooled[0].a;
    pooled[1].b += pooled[0].b;
    pooled.erase(pooled.begin());
  }
  if (pooled.size() < 2) {
    throw std::invalid_argument("chi_square_two_sample: fewer than two cells");
  }

  ChiSquareResult r;
  r.dof = pooled.size() - 1;
  for (const Pair& c : pooled) {
    const double col = c.a + c.b;
    const double ea = col * na / n;
    const double eb = col * nb / n;
    r.statistic += (c.a - ea) * (c.a - ea) / ea + (c.b - eb) * (c.b - eb) / eb;
  }
  r.p_value = chi_square_survival(r.statistic, r.dof);
  return r;
}

Schedule parse_schedule(const std::string& name) {
  if (name == "sweep" || name == "node-major") return Schedule::node_major;
  if (name == "roundrobin" || name == "round-robin") return Schedule::round_robin;
  throw std::invalid_argument("unknown schedule '" + name + "'");
}

GraphSample graph_from_transcript(Node n, const std::vector<QueryAnswer>& transcript) {
  auto fail = [](Node j, const std::string& what) {
    throw InternalError("transcript for node " + std::to_string(j) + ": " + what);
  };
  std::vector<std::vector<Node>> answers(n + 1);
  for (const QueryAnswer& q : transcript) {
    if (q.node < 1 || q.node > n) fail(q.node, "query outside [1, n]");
    if (q.answer < 1 || q.answer > n + 1) fail(q.node, "answer outside [1, n+1]");
    answers[q.node].push_back(q.answer);
  }
  GraphSample g{n, std::vector<Node>(n)};
  std::vector<std::vector<Node>> kids(n + 1);
  for (Node j = 1; j <= n; ++j) {
    const auto& a = answers[j];
    if (a.empty() || a.back() != n + 1) fail(j, "neighbor list not exhausted");
    const Node p = a.front();
    if (j == 1 ? p != 1 : (p < 1 || p >= j)) fail(j, "first answer is not a valid parent");
    g.parent[j - 1] = p;
    Node prev = j;
    bool done = false;
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (done) {
        if (a[i] != n + 1) fail(j, "answer after n+1");
        continue;
      }
      if (a[i] == n + 1) {
        done = true;
        continue;
      }
      if (a[i] <= prev) fail(j, "children not strictly increasing");
      kids[j].push_back(a[i]);
      prev = a[i];
    }
  }
  std::uint64_t listed = 0;
  for (Node j = 1; j <= n; ++j) {
    for (Node c : kids[j]) {
      if (g.parent[c - 1] != j) fail(j, "lists child " + std::to_string(c) + " of another parent");
      ++listed;
    }
  }
  if (listed != n - 1) fail(1, "some node is missing from its parent's list");
  return g;
}

GraphSample reconstruct_via_sweep(BaGenerator& gen, Schedule schedule) {
  return graph_from_transcript(gen.size(), run_sweep(gen, schedule));
}

std::vector<LinkQuery> make_link_schedule(Node n, std::size_t length, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("make_link_schedule: n must be at least 1");
  BitSource source(seed);
  std::vector<LinkQuery> out(length);
  for (LinkQuery& q : out) {
    q.is_parent = source.uniform_int(3) == 0;
    q.node = source.uniform_int(n) + 1;
    q.type = source.uniform_flag();
  }
  return out;
}

}  // namespace otfgraph
