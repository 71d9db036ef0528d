#pragma once

// Tree workloads by family name and the label-size benchmark.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treelabel/calibration.hpp"
#include "treelabel/label_file.hpp"
#include "treelabel/tree.hpp"

namespace treelabel {

struct FamilyParams {
  std::string family;  // random-tree, caterpillar, path, hwa, hard-caterpillar
  std::size_t n = 0;
  std::size_t k = 0;        // path length in nodes
  std::uint64_t W = 0;      // hwa top weight, or the path's max edge weight
  std::uint64_t a = 2;
  unsigned h = 0;
  bool unweighted = false;  // hwa: emit the unit-weight expansion

  // Edge weight bound for the path family: W if set, else n / (k - 1), else 1.
  Weight path_max_weight() const;
  std::string describe() const;
};

// Throws std::invalid_argument on unknown families or bad parameters.
Tree generate_family(const FamilyParams& p, std::uint64_t seed);

struct BenchRun {
  FamilyParams family;
  Scheme scheme = Scheme::kExact;
  double eps = 0.5;
  std::size_t trials = 1;
};

struct BenchRow {
  std::string family;
  std::string params;
  std::string scheme;
  std::size_t trees = 0;
  std::size_t max_bits = 0;
  double mean_bits = 0;
  double bound = 0;
  std::optional<double> floor;  // lower bound, reported only
  bool pass = false;
};

struct BenchReport {
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;

  bool all_pass() const noexcept;
  std::string to_json() const;
  std::string to_table() const;
};

// {"runs": [{"family": "path", "k": 16, "n": 1048576, "scheme": "path", "trials": 10}, ...]}
std::vector<BenchRun> parse_bench_plan(std::string_view text);  // throws ParseError
std::vector<BenchRun> default_bench_plan();

// Per-trial seeds are derived from (seed, run index, trial), so rows do not
// depend on which other runs are in the plan.
BenchReport run_bench(const std::vector<BenchRun>& plan, std::uint64_t seed,
                      const Budgets& budgets);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept;

}  // namespace treelabel
