#include "otfgraph/cli.hpp"

#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "otfgraph/ba_generator.hpp"
#include "otfgraph/link_tree.hpp"
#include "otfgraph/naive_link_tree.hpp"
#include "otfgraph/neighbor_oracles.hpp"
#include "otfgraph/stats.hpp"

namespace otfgraph {

using json = nlohmann::ordered_json;

namespace {

constexpr double kPassPValue = 1e-3;

// Runs f on a fresh on-the-fly oracle for the model. ba and z share the
// link-tree generator; rrt reads the same tree with flags ignored.
template <typename F>
auto with_oracle(Model model, Node n, std::uint64_t seed, double c, F&& f) {
  if (model == Model::rrt) {
    LinkTree tree(n, seed, c);
    RrtNeighborOracle oracle(tree);
    return f(oracle, tree);
  }
  BaGenerator gen(n, seed, c);
  return f(gen, gen.tree());
}

std::vector<Node> load_queries(const RunConfig& cfg) {
  std::ifstream in(cfg.queries_file);
  if (!in) throw std::invalid_argument("cannot open queries file '" + cfg.queries_file + "'");
  return parse_queries(in, cfg.n);
}

std::vector<QueryAnswer> run_schedule(const RunConfig& cfg, std::uint64_t seed) {
  std::vector<Node> queries;
  if (cfg.schedule == "file") queries = load_queries(cfg);
  return with_oracle(cfg.model, cfg.n, seed, cfg.toss_exponent, [&](auto& oracle, LinkTree&) {
    if (cfg.schedule != "file") return run_sweep(oracle, parse_schedule(cfg.schedule));
    std::vector<QueryAnswer> transcript;
    for (Node j : queries) transcript.push_back({j, oracle.next_neighbor(j)});
    return transcript;
  });
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

void RunConfig::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(toss_exponent > 1.0)) throw std::invalid_argument("toss exponent must exceed 1");
  if (schedule == "file") {
    if (queries_file.empty()) throw std::invalid_argument("schedule 'file' needs --queries-file");
  } else {
    parse_schedule(schedule);
  }
}

std::vector<Node> parse_queries(std::istream& in, Node n) {
  std::vector<Node> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(number, "expected a node index, got '" + token + "'");
    }
    Node j = 0;
    try {
      j = std::stoull(token);
    } catch (const std::out_of_range&) {
      throw ParseError(number, "node index out of range");
    }
    if (j < 1 || j > n) {
      throw ParseError(number, "node " + token + " outside [1, " + std::to_string(n) + "]");
    }
    out.push_back(j);
  }
  return out;
}

BenchResult run_bench(Model model, Node n, std::uint64_t seed, std::uint64_t queries,
                      double toss_exponent) {
  if (queries < 1) throw std::invalid_argument("run_bench: need at least one query");
  using Clock = std::chrono::steady_clock;
  BitSource picker(seed ^ 0x9e3779b97f4a7c15ULL);
  return with_oracle(model, n, seed, toss_exponent, [&](auto& oracle, LinkTree& tree) {
    BenchResult r;
    r.n = n;
    r.queries = queries;
    std::unordered_set<Node> exhausted;
    const std::size_t cells_before = tree.stored_cells();
    double total_ns = 0.0;
    std::uint64_t total_bits = 0;
    for (std::uint64_t q = 0; q < queries; ++q) {
      const Node j = picker.uniform_int(n) + 1;
      const bool trivial = exhausted.contains(j);
      const std::uint64_t bits_before = tree.bits_consumed();
      const auto t0 = Clock::now();
      const Node answer = oracle.next_neighbor(j);
      const auto t1 = Clock::now();
      const std::uint64_t bits = tree.bits_consumed() - bits_before;
      const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
      total_ns += ns;
      total_bits += bits;
      r.max_time_ns = std::max(r.max_time_ns, ns);
      r.max_bits = std::max(r.max_bits, bits);
      if (trivial) {
        ++r.trivial_queries;
        r.trivial_query_bits += bits;
      }
      if (answer == n + 1) exhausted.insert(j);
    }
    const double qd = static_cast<double>(queries);
    r.mean_time_ns = total_ns / qd;
    r.mean_bits = static_cast<double>(total_bits) / qd;
    r.mean_loop_iterations = static_cast<double>(tree.counters().loop_iterations) / qd;
    r.max_loop_iterations = tree.counters().max_loop_iterations;
    r.max_recursion_depth = tree.counters().max_recursion_depth;
    if constexpr (requires { oracle.stored_cells(); }) {
      r.stored_cells = oracle.stored_cells();
    } else {
      r.stored_cells = tree.stored_cells();
    }
    r.mean_cell_growth = static_cast<double>(r.stored_cells - cells_before) / qd;
    return r;
  });
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const auto transcript = run_schedule(cfg, cfg.seed);
  if (cfg.output == OutputFormat::json) {
    json arr = json::array();
    for (const auto& qa : transcript) arr.push_back({{"q", qa.node}, {"r", qa.answer}});
    out << arr.dump() << '\n';
  } else {
    for (const auto& qa : transcript) out << "q " << qa.node << " -> " << qa.answer << '\n';
  }
  return kExitOk;
}

int cmd_batch(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  json all = json::array();
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    BitSource source(cfg.seed + t);
    const GraphSample g = batch_sample(cfg.model, cfg.n, source);
    if (cfg.output == OutputFormat::json) {
      all.push_back(g.parent);
      continue;
    }
    out << "# seed " << cfg.seed + t << '\n';
    for (Node j = 1; j <= g.n; ++j) out << j << " -> " << g.parent_of(j) << '\n';
  }
  if (cfg.output == OutputFormat::json) out << all.dump() << '\n';
  return kExitOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  if (cfg.n > kMaxExactNodes) {
    throw std::invalid_argument("compare needs n <= " + std::to_string(kMaxExactNodes));
  }
  if (cfg.schedule == "file") throw std::invalid_argument("compare needs a full sweep schedule");
  const ExactDistribution exact = enumerate_exact(cfg.model, cfg.n);
  json tests = json::array();
  bool ok = true;

  if (cfg.model != Model::rrt) {
    const ExactDistribution other =
        enumerate_exact(cfg.model == Model::ba ? Model::z : Model::ba, cfg.n);
    Rational tv = 0;
    for (const auto& [key, p] : exact) {
      auto it = other.find(key);
      tv += abs(p - (it == other.end() ? Rational(0) : it->second));
    }
    for (const auto& [key, p] : other) {
      if (!exact.contains(key)) tv += p;
    }
    tv /= 2;
    const bool same = tv == 0;
    ok &= same;
    tests.push_back({{"name", "ba_vs_z_exact"}, {"tv", to_double(tv)}, {"pass", same}});
  }

  auto sampled = [&](const std::string& name, auto&& draw) {
    Histogram h;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) ++h[draw(cfg.seed + t).parent];
    const double tv = to_double(tv_distance(exact, h));
    double p = 1.0;
    try {
      p = chi_square(exact, h).p_value;
    } catch (const std::invalid_argument&) {
      // Too few trials for two pooled cells; p stays uninformative.
    }
    const bool pass = p > kPassPValue;
    ok &= pass;
    tests.push_back({{"name", name}, {"tv", tv}, {"chi2_p", p}, {"pass", pass}});
  };
  sampled("on_the_fly_vs_exact", [&](std::uint64_t seed) {
    return graph_from_transcript(cfg.n, run_schedule(cfg, seed));
  });
  sampled("batch_vs_exact", [&](std::uint64_t seed) {
    BitSource source(seed);
    return batch_sample(cfg.model, cfg.n, source);
  });

  {
    // The link tree underneath every model against the linear-scan reference.
    const auto schedule = make_link_schedule(cfg.n, 4 * cfg.n, cfg.seed);
    Histogram fast;
    Histogram naive;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      LinkTree tree(cfg.n, cfg.seed + t, cfg.toss_exponent);
      NaiveLinkTree reference(cfg.n, cfg.seed + t);
      ++fast[run_link_schedule(tree, schedule)];
      ++naive[run_link_schedule(reference, schedule)];
    }
    double p = 1.0;
    try {
      p = chi_square_two_sample(fast, naive).p_value;
    } catch (const std::invalid_argument&) {
    }
    const bool pass = p > kPassPValue;
    ok &= pass;
    tests.push_back({{"name", "naive_vs_efficient"},
                     {"tv", to_double(tv_distance(fast, naive))},
                     {"chi2_p", p},
                     {"pass", pass}});
  }

  if (cfg.output == OutputFormat::json) {
    json report = {{"model", to_string(cfg.model)},
                   {"n", cfg.n},
                   {"seeds", cfg.trials},
                   {"tests", tests}};
    out << report.dump(2) << '\n';
  } else {
    for (const auto& t : tests) {
      out << t["name"].get<std::string>() << " tv=" << t["tv"].get<double>();
      if (t.contains("chi2_p")) out << " chi2_p=" << t["chi2_p"].get<double>();
      out << (t["pass"].get<bool>() ? " PASS" : " FAIL") << '\n';
    }
  }
  return ok ? kExitOk : kExitTestFailure;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  if (cfg.schedule == "file") throw std::invalid_argument("stats needs a full sweep schedule");
  using Clock = std::chrono::steady_clock;
  std::map<std::uint64_t, std::uint64_t> degree_hist;
  std::uint64_t height = 0;
  std::uint64_t max_indeg = 0;
  std::uint64_t bits = 0;
  std::uint64_t queries = 0;
  double ns = 0.0;
  Histogram outcomes;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const auto t0 = Clock::now();
    const auto [transcript, used] = with_oracle(
        cfg.model, cfg.n, cfg.seed + t, cfg.toss_exponent, [&](auto& oracle, LinkTree& tree) {
          auto tr = run_sweep(oracle, parse_schedule(cfg.schedule));
          return std::pair{std::move(tr), tree.bits_consumed()};
        });
    ns += std::chrono::duration<double, std::nano>(Clock::now() - t0).count();
    bits += used;
    queries += transcript.size();
    const GraphSample g = graph_from_transcript(cfg.n, transcript);
    for (const auto& [d, c] : degree_stats(g).histogram) degree_hist[d] += c;
    const TreeMetrics m = tree_metrics(g);
    height = std::max(height, m.height);
    max_indeg = std::max(max_indeg, m.max_in_degree);
    if (cfg.n <= kMaxExactNodes) ++outcomes[g.parent];
  }

  json report = {{"model", to_string(cfg.model)},
                 {"n", cfg.n},
                 {"seeds", cfg.trials},
                 {"tv", nullptr},
                 {"chi2_p", nullptr},
                 {"height", height},
                 {"max_indeg", max_indeg},
                 {"bits_per_query_mean", static_cast<double>(bits) / static_cast<double>(queries)},
                 {"time_per_query_ns", ns / static_cast<double>(queries)}};
  json hist = json::object();
  for (const auto& [d, c] : degree_hist) hist[std::to_string(d)] = c;
  report["degree_hist"] = hist;
  if (cfg.n <= kMaxExactNodes) {
    const ExactDistribution exact = enumerate_exact(cfg.model, cfg.n);
    report["tv"] = to_double(tv_distance(exact, outcomes));
    try {
      report["chi2_p"] = chi_square(exact, outcomes).p_value;
    } catch (const std::invalid_argument&) {
    }
  }

  if (cfg.output == OutputFormat::json) {
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& [key, value] : report.items()) {
    if (key == "degree_hist") continue;
    out << key << ": " << value.dump() << '\n';
  }
  out << "degree_hist:";
  for (const auto& [d, c] : degree_hist) out << ' ' << d << ':' << c;
  out << '\n';
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const BenchResult r = run_bench(cfg.model, cfg.n, cfg.seed, cfg.trials, cfg.toss_exponent);
  json report = {{"model", to_string(cfg.model)},
                 {"n", r.n},
                 {"queries", r.queries},
                 {"time_per_query_ns", r.mean_time_ns},
                 {"max_time_ns", r.max_time_ns},
                 {"bits_per_query_mean", r.mean_bits},
                 {"max_bits", r.max_bits},
                 {"loop_iterations_mean", r.mean_loop_iterations},
                 {"max_loop_iterations", r.max_loop_iterations},
                 {"max_recursion_depth", r.max_recursion_depth},
                 {"stored_cells", r.stored_cells},
                 {"cell_growth_mean", r.mean_cell_growth},
                 {"trivial_queries", r.trivial_queries},
                 {"trivial_query_bits", r.trivial_query_bits}};
  if (cfg.output == OutputFormat::json) {
    out << report.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : report.items()) out << key << ": " << value.dump() << '\n';
  }
  return kExitOk;
}

int run_command(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "sample") return cmd_sample(cfg, out);
  if (cfg.command == "batch") return cmd_batch(cfg, out);
  if (cfg.command == "compare") return cmd_compare(cfg, out);
  if (cfg.command == "stats") return cmd_stats(cfg, out);
  if (cfg.command == "bench") return cmd_bench(cfg, out);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace otfgraph
