#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace treelabel;

int main(int argc, char** argv) {
  CLI::App app{"Distance labels for trees"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h is the hwa height
  app.require_subcommand(1);

  FamilyParams family;
  std::uint64_t seed = 1;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a tree from a family");
  gen->add_option("--family", family.family,
                  "random-tree, caterpillar, path, hwa or hard-caterpillar")
      ->required();
  gen->add_option("--n", family.n, "Node count");
  gen->add_option("--k", family.k, "Path length in nodes");
  gen->add_option("--h", family.h, "hwa height");
  gen->add_option("--W", family.W, "hwa top weight, or the path's max edge weight");
  gen->add_option("--a", family.a, "hwa weight ratio");
  gen->add_flag("--unweighted", family.unweighted, "hwa: emit the unit-weight expansion");
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  std::string tree_path;
  std::string scheme_name_arg = "exact";
  SchemeParams params;
  Weight weight_bound = 0;
  auto* encode = app.add_subcommand("encode", "Label every node of a tree");
  encode->add_option("tree", tree_path)->required();
  encode->add_option("--scheme", scheme_name_arg, "exact, approx, path or caterpillar");
  encode->add_option("--eps", params.eps, "Stretch parameter for approx");
  encode->add_option("--W", weight_bound, "path: plan for edge weights up to W");
  encode->add_option("--out", out_path, "Output file (default: stdout)");

  std::string label_path;
  NodeId u = 0;
  NodeId v = 0;
  auto* query = app.add_subcommand("query", "Distance between two nodes, from labels alone");
  query->add_option("labels", label_path)->required();
  query->add_option("u", u)->required();
  query->add_option("v", v)->required();

  cli::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check decoded distances against the tree");
  verify->add_option("tree", tree_path)->required();
  verify->add_option("labels", label_path)->required();
  verify->add_option("--sample", verify_opts.sample, "Check N random pairs instead of all");
  verify->add_option("--seed", verify_opts.seed);
  verify->add_flag("--json", verify_opts.json);

  cli::BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Measure label sizes against their budgets");
  bench->add_option("--plan", bench_opts.plan_path, "JSON run plan (default: built-in)");
  bench->add_option("--calibration", bench_opts.calibration_path, "Budget constants file");
  bench->add_option("--seed", bench_opts.seed);
  bench->add_option("--out", bench_opts.out_path, "Output file (default: stdout)");
  bench->add_flag("--json", bench_opts.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  if (*gen) return cli::cmd_gen(family, seed, out_path, std::cout, std::cerr);
  if (*encode) {
    Scheme scheme;
    try {
      scheme = parse_scheme(scheme_name_arg);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return cli::kExitUsage;
    }
    if (weight_bound > 0) params.weight_bound = weight_bound;
    return cli::cmd_encode(tree_path, scheme, params, out_path, std::cout, std::cerr);
  }
  if (*query) return cli::cmd_query(label_path, u, v, std::cout, std::cerr);
  if (*verify) return cli::cmd_verify(tree_path, label_path, verify_opts, std::cout, std::cerr);
  if (*bench) return cli::cmd_bench(bench_opts, std::cout, std::cerr);
  return cli::kExitUsage;
}
