#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace infconn::cli;

  CLI::App app{"infconn: l-infinity algebraic connectivity gamma(G) of simple graphs"};
  app.require_subcommand(1);

  GlobalOptions opt;
  bool text = false;
  auto* json_flag = app.add_flag("--json", opt.json, "machine-readable JSON output");
  app.add_flag("--text", text, "plain-text output (default)")->excludes(json_flag);
  app.add_option("--tol", opt.tol, "numerical tolerance (spectral convergence, simplex pivots)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for random corpora");
  app.fallthrough();

  AnalysisFlags flags;
  auto add_analysis_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--lp", flags.lp, "cross-check with the LP oracle");
    cmd->add_flag("--spectral", flags.spectral, "distance spectral radius, a(G), mu_{n-1}");
    cmd->add_flag("--cheeger", flags.cheeger, "exact Cheeger constant (n <= 24)");
  };

  std::string input;
  auto* compute = app.add_subcommand("compute", "gamma, witness and requested invariants of an edge-list graph");
  compute->add_option("input", input, "edge-list file")->required();
  add_analysis_flags(compute);

  std::size_t random_count = 0, random_max_n = 9;
  auto* verify = app.add_subcommand("verify", "evaluate the bound suite; exit 1 if any bound fails");
  verify->add_option("input", input, "edge-list file");
  verify->add_option("--random", random_count, "verify this many seeded random connected graphs instead");
  verify->add_option("--max-n", random_max_n, "largest vertex count for --random")->check(CLI::PositiveNumber);
  add_analysis_flags(verify);

  std::string family, output;
  std::vector<long long> params;
  auto* generate = app.add_subcommand("generate", "write a named family member as an edge list");
  generate->add_option("--family", family, "path|cycle|complete|star|bipartite|hypercube|hamming|grid3|torus|petersen")
      ->required();
  generate->add_option("--params", params, "comma-separated parameters")->delimiter(',');
  generate->add_option("-o,--output", output, "output path (stdout if omitted)");

  std::vector<std::string> inputs;
  auto* product = app.add_subcommand("product", "Cartesian product of two or more edge-list graphs");
  product->add_option("inputs", inputs, "edge-list files")->required();
  product->add_option("-o,--output", output, "output path (stdout if omitted)");

  std::vector<long long> sizes;
  std::string method = "both";
  auto* bench = app.add_subcommand("bench", "time the transmission formula against the LP pipeline");
  bench->add_option("--family", family, "single-parameter family: path|cycle|complete|star|hypercube")->required();
  bench->add_option("--sizes", sizes, "comma-separated sizes")->delimiter(',')->required();
  bench->add_option("--method", method, "formula|lp|both")->check(CLI::IsMember({"formula", "lp", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (text) opt.json = false;

  if (compute->parsed()) return cmd_compute(input, flags, opt, std::cout, std::cerr);
  if (verify->parsed()) {
    if (random_count > 0) return cmd_verify_random(random_count, random_max_n, flags, opt, std::cout, std::cerr);
    if (input.empty()) {
      std::cerr << "error: verify needs an input file or --random N\n";
      return kInputError;
    }
    return cmd_verify(input, flags, opt, std::cout, std::cerr);
  }
  if (generate->parsed()) return cmd_generate(family, params, output, std::cout, std::cerr);
  if (product->parsed()) return cmd_product(inputs, output, std::cout, std::cerr);
  if (bench->parsed()) {
    const BenchMethod m = method == "formula" ? BenchMethod::Formula
                          : method == "lp"    ? BenchMethod::Lp
                                              : BenchMethod::Both;
    return cmd_bench(family, sizes, m, opt, std::cout, std::cerr);
  }
  return kInputError;
}
