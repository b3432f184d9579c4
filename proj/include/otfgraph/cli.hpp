#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "otfgraph/batch.hpp"
#include "otfgraph/types.hpp"

namespace otfgraph {

enum class OutputFormat { text, json };

struct RunConfig {
  std::string command;  // sample | batch | compare | stats | bench
  Model model = Model::ba;
  Node n = 1;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  std::string schedule = "sweep";  // sweep | roundrobin | file
  std::string queries_file;
  double toss_exponent = 3.0;
  OutputFormat output = OutputFormat::text;

  /// Throws std::invalid_argument on n < 1, trials < 1, c <= 1, or a file
  /// schedule without a file.
  void validate() const;
};

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitTestFailure = 2;

/// One decimal node index per line, blank lines skipped. Indices must lie in
/// [1, n]; anything else raises ParseError with the 1-based line number.
std::vector<Node> parse_queries(std::istream& in, Node n);

struct BenchResult {
  Node n = 0;
  std::uint64_t queries = 0;
  double mean_time_ns = 0.0;
  double max_time_ns = 0.0;
  double mean_bits = 0.0;
  std::uint64_t max_bits = 0;
  double mean_loop_iterations = 0.0;
  std::uint64_t max_loop_iterations = 0;
  std::uint64_t max_recursion_depth = 0;
  std::size_t stored_cells = 0;  // after the last query, which is the peak
  double mean_cell_growth = 0.0;
  std::uint64_t trivial_queries = 0;
  std::uint64_t trivial_query_bits = 0;
};

/// `queries` next-neighbor queries on uniformly random nodes of one on-the-fly
/// instance. Query nodes come from a stream independent of the generator's.
BenchResult run_bench(Model model, Node n, std::uint64_t seed, std::uint64_t queries,
                      double toss_exponent = 3.0);

int cmd_sample(const RunConfig& cfg, std::ostream& out);
int cmd_batch(const RunConfig& cfg, std::ostream& out);
int cmd_compare(const RunConfig& cfg, std::ostream& out);
int cmd_stats(const RunConfig& cfg, std::ostream& out);
int cmd_bench(const RunConfig& cfg, std::ostream& out);

/// Dispatches on cfg.command. Usage errors propagate as exceptions.
int run_command(const RunConfig& cfg, std::ostream& out);

}  // namespace otfgraph
