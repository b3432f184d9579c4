#include "otfgraph/batch.hpp"

#include <stdexcept>

namespace otfgraph {

Model parse_model(const std::string& name) {
  if (name == "ba") return Model::ba;
  if (name == "z") return Model::z;
  if (name == "rrt") return Model::rrt;
  throw std::invalid_argument("unknown model '" + name + "' (expected ba, z or rrt)");
}

const char* to_string(Model model) {
  switch (model) {
    case Model::ba:
      return "ba";
    case Model::z:
      return "z";
    case Model::rrt:
      return "rrt";
  }
  return "?";
}

void GraphSample::validate() const {
  if (n < 1 || parent.size() != n) throw std::invalid_argument("graph sample: bad size");
  if (parent[0] != 1) throw std::invalid_argument("graph sample: parent(1) must be 1");
  for (Node j = 2; j <= n; ++j) {
    const Node p = parent[j - 1];
    if (p < 1 || p >= j) {
      throw std::invalid_argument("graph sample: parent(" + std::to_string(j) +
                                  ") outside [1, j-1]");
    }
  }
}

GraphSample batch_ba(Node n, BitSource& source) {
  if (n < 1) throw std::invalid_argument("batch_ba: n must be at least 1");
  GraphSample g{n, std::vector<Node>(n)};
  g.parent[0] = 1;
  // Each node appears once per edge endpoint, so a uniform pick from this list
  // is a degree-proportional pick.
  std::vector<Node> endpoints;
  endpoints.reserve(2 * n);
  endpoints.push_back(1);
  endpoints.push_back(1);
  for (Node j = 2; j <= n; ++j) {
    const Node head = endpoints[source.uniform_int(endpoints.size())];
    g.parent[j - 1] = head;
    endpoints.push_back(j);
    endpoints.push_back(head);
  }
  return g;
}

GraphSample batch_z(Node n, BitSource& source) {
  if (n < 1) throw std::invalid_argument("batch_z: n must be at least 1");
  GraphSample g{n, std::vector<Node>(n)};
  g.parent[0] = 1;
  for (Node j = 2; j <= n; ++j) {
    const bool direct = source.bit();
    const Node u = source.uniform_int(j - 1) + 1;
    g.parent[j - 1] = direct ? u : g.parent[u - 1];
  }
  return g;
}

GraphSample batch_rrt(Node n, BitSource& source) {
  if (n < 1) throw std::invalid_argument("batch_rrt: n must be at least 1");
  GraphSample g{n, std::vector<Node>(n)};
  g.parent[0] = 1;
  for (Node j = 2; j <= n; ++j) g.parent[j - 1] = source.uniform_int(j - 1) + 1;
  return g;
}

GraphSample batch_sample(Model model, Node n, BitSource& source) {
  switch (model) {
    case Model::ba:
      return batch_ba(n, source);
    case Model::z:
      return batch_z(n, source);
    case Model::rrt:
      return batch_rrt(n, source);
  }
  throw std::invalid_argument("unknown model");
}

namespace {

// Law of the head of e_j given the prefix, as (head, probability) pairs.
std::map<Node, Rational> step_law(Model model, const std::vector<Node>& prefix) {
  const Node j = prefix.size() + 1;
  std::map<Node, Rational> law;
  switch (model) {
    case Model::ba: {
      std::vector<std::uint64_t> degree(j, 0);
      for (Node i = 1; i < j; ++i) {
        ++degree[i];
        ++degree[prefix[i - 1]];
      }
      for (Node i = 1; i < j; ++i) {
        if (degree[i] != 0) law[i] += Rational(degree[i], 2 * (j - 1));
      }
      break;
    }
    case Model::z:
      for (Node u = 1; u < j; ++u) {
        law[u] += Rational(1, 2 * (j - 1));
        law[prefix[u - 1]] += Rational(1, 2 * (j - 1));
      }
      break;
    case Model::rrt:
      for (Node u = 1; u < j; ++u) law[u] += Rational(1, j - 1);
      break;
  }
  return law;
}

void unroll(Model model, Node n, std::vector<Node>& prefix, const Rational& mass,
            ExactDistribution& out) {
  if (prefix.size() == n) {
    out[prefix] += mass;
    return;
  }
  for (const auto& [head, p] : step_law(model, prefix)) {
    prefix.push_back(head);
    unroll(model, n, prefix, mass * p, out);
    prefix.pop_back();
  }
}

}  // namespace

ExactDistribution enumerate_exact(Model model, Node n) {
  if (n < 1 || n > kMaxExactNodes) {
    throw std::invalid_argument("enumerate_exact: n must lie in [1, " +
                                std::to_string(kMaxExactNodes) + "]");
  }
  ExactDistribution out;
  std::vector<Node> prefix{1};
  unroll(model, n, prefix, Rational(1), out);
  return out;
}

}  // namespace otfgraph
