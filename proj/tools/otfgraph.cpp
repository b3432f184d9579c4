// otfgraph: sample BA, copying-model and random recursive tree graphs on the fly.

#include <iostream>

#include <CLI11.hpp>

#include "otfgraph/cli.hpp"

int main(int argc, char** argv) {
  otfgraph::RunConfig cfg;
  std::string model = "ba";
  std::string output = "text";

  CLI::App app{"On-the-fly sampler for BA graphs, copying-model graphs and random recursive trees"};
  app.add_option("command", cfg.command, "sample | batch | compare | stats | bench")
      ->required()
      ->check(CLI::IsMember({"sample", "batch", "compare", "stats", "bench"}));
  app.add_option("--model", model, "ba | z | rrt")->check(CLI::IsMember({"ba", "z", "rrt"}));
  app.add_option("--n", cfg.n, "number of nodes")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "64-bit seed");
  app.add_option("--trials", cfg.trials, "seeds to run (bench: number of queries)")
      ->check(CLI::PositiveNumber);
  app.add_option("--schedule", cfg.schedule, "sweep | roundrobin | file")
      ->check(CLI::IsMember({"sweep", "roundrobin", "file"}));
  app.add_option("--queries-file", cfg.queries_file, "node indices, one per line");
  app.add_option("--toss-exponent", cfg.toss_exponent, "c in alpha = n^c, must exceed 1");
  app.add_option("--output", output, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? otfgraph::kExitOk : otfgraph::kExitUsage;
  }

  try {
    cfg.model = otfgraph::parse_model(model);
    cfg.output = output == "json" ? otfgraph::OutputFormat::json : otfgraph::OutputFormat::text;
    return otfgraph::run_command(cfg, std::cout);
  } catch (const otfgraph::ParseError& e) {
    std::cerr << "otfgraph: " << cfg.queries_file << ": " << e.what() << '\n';
    return otfgraph::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "otfgraph: " << e.what() << '\n';
    return otfgraph::kExitUsage;
  }
}
