#include <CLI11.hpp>
#include <iostream>

#include "cycinv/cli.hpp"
#include "cycinv/errors.hpp"
#include "cycinv/weights.hpp"

int main(int argc, char** argv) {
  using namespace cycinv;
  CLI::App app{"Generators, relations and Betti tables of cyclic-group invariant rings"};
  app.require_subcommand(1);

  RunConfig config;
  std::string weights, format = "text";
  std::optional<int> m, s, max_degree;
  std::optional<std::string> graph;
  unsigned threads = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--char", config.field_char, "Homology field characteristic (0 = Q, or a prime)");
    sub->add_option("--threads", threads, "Worker threads (overrides CYCINV_THREADS)");
  };
  auto weighted = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Group order")->required();
    sub->add_option("--weights", weights, "Comma-separated weights, 2 or 3 entries")->required();
  };

  auto* gens = app.add_subcommand("gens", "Minimal generators of the invariant ring");
  auto* rels = app.add_subcommand("relations", "Relations R_{i,j} and Groebner certificate");
  auto* betti = app.add_subcommand("betti", "Polynomial and graded Betti tables of the invariant ring");
  auto* hilbert = app.add_subcommand("hilbert-check", "Hilbert series identity to a degree bound");
  for (auto* sub : {gens, rels, betti, hilbert}) {
    common(sub);
    weighted(sub);
  }
  hilbert->add_option("--max-degree", max_degree, "Degree bound (default 3n)");

  auto* edge = app.add_subcommand("edge-betti", "Betti table of the edge ideal of X[s] or a JSON graph");
  common(edge);
  edge->add_option("--m", m, "Vertex count");
  edge->add_option("--s", s, "Number of deleted adjacent edges");
  edge->add_option("--graph", graph, "Graph file {\"m\": int, \"edges\": [[a,b],...]}, 1-based");

  auto* sweep = app.add_subcommand("sweep", "Closed form vs Hochster over ranges of (m, s)");
  common(sweep);
  sweep->add_option("--m-min", config.m_min);
  sweep->add_option("--m-max", config.m_max);

  auto* fuzz = app.add_subcommand("fuzz", "Random weight systems through every invariant check");
  common(fuzz);
  fuzz->add_option("--seed", config.seed);
  fuzz->add_option("--count-2d", config.count_2d);
  fuzz->add_option("--count-3d", config.count_3d);
  fuzz->add_option("--n-max-2d", config.n_max_2d);
  fuzz->add_option("--n-max-3d", config.n_max_3d);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    config.command = parse_command(app.get_subcommands().front()->get_name());
    if (!weights.empty()) config.weights = parse_weight_list(weights);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  config.m = m;
  config.s = s;
  config.graph_file = graph;
  config.max_degree = max_degree;
  config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  config.threads = threads ? threads : threads_from_env().value_or(1);
  return run(config, std::cout, std::cerr);
}
