#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "treelabel/bench.hpp"
#include "treelabel/label_file.hpp"

namespace treelabel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

// Each command writes results to `out` (or the --out file) and diagnostics to
// `err`, and returns the process exit code.

int cmd_gen(const FamilyParams& family, std::uint64_t seed, const std::string& out_path,
            std::ostream& out, std::ostream& err);

int cmd_encode(const std::string& tree_path, Scheme scheme, const SchemeParams& params,
               const std::string& out_path, std::ostream& out, std::ostream& err);

// Reads only the label file.
int cmd_query(const std::string& label_path, NodeId u, NodeId v, std::ostream& out,
              std::ostream& err);

struct VerifyOptions {
  std::size_t sample = 0;  // 0: every pair
  std::uint64_t seed = 1;
  bool json = false;
};

int cmd_verify(const std::string& tree_path, const std::string& label_path,
               const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::string plan_path;  // empty: built-in plan
  std::string calibration_path;  // empty: the compiled-in file
  std::uint64_t seed = 1;
  std::string out_path;
  bool json = false;
};

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace treelabel::cli
