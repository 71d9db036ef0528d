#include "treelabel/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "treelabel/bitcodec.hpp"
#include "treelabel/errors.hpp"
#include "treelabel/families.hpp"

namespace treelabel {

Weight FamilyParams::path_max_weight() const {
  if (W > 0) return W;
  if (n > 0 && k > 1) return std::max<Weight>(1, n / (k - 1));
  return 1;
}

std::string FamilyParams::describe() const {
  std::ostringstream os;
  if (family == "path") {
    os << "k=" << k << ",W=" << path_max_weight();
  } else if (family == "hwa") {
    os << "h=" << h << ",W=" << W << ",a=" << a << (unweighted ? ",unweighted" : "");
  } else {
    os << "n=" << n;
  }
  return os.str();
}

Tree generate_family(const FamilyParams& p, std::uint64_t seed) {
  const auto need_n = [&](std::size_t min) {
    if (p.n < min) {
      throw std::invalid_argument(p.family + " needs n >= " + std::to_string(min));
    }
  };
  if (p.family == "random-tree") {
    need_n(1);
    return gen_random_tree(p.n, seed);
  }
  if (p.family == "caterpillar") {
    need_n(1);
    return gen_random_caterpillar(p.n, seed);
  }
  if (p.family == "path") {
    if (p.k < 1) throw std::invalid_argument("path needs k >= 1");
    return gen_weighted_path(p.k, p.path_max_weight(), seed);
  }
  if (p.family == "hwa") {
    HwaTree t = build_hwa(p.h, p.W, p.a, seed);
    if (p.unweighted) return expand_unweighted(t.tree).tree;
    return std::move(t.tree);
  }
  if (p.family == "hard-caterpillar") return gen_hard_caterpillar(p.n, seed).tree;
  throw std::invalid_argument("unknown family '" + p.family + "'");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
  // splitmix64 finalizer over each input in turn
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ a) ^ b);
}

bool BenchReport::all_pass() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.pass; });
}

std::string BenchReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["seed"] = seed;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json e;
    e["family"] = r.family;
    e["params"] = r.params;
    e["scheme"] = r.scheme;
    e["trees"] = r.trees;
    e["max_bits"] = r.max_bits;
    e["mean_bits"] = r.mean_bits;
    e["bound"] = r.bound;
    if (r.floor) e["floor"] = *r.floor;
    e["pass"] = r.pass;
    arr.push_back(std::move(e));
  }
  doc["rows"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string BenchReport::to_table() const {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-17s %-24s %-12s %6s %8s %9s %9s %8s  %s\n", "family",
                "params", "scheme", "trees", "max", "mean", "bound", "floor", "result");
  os << line;
  for (const auto& r : rows) {
    char floor_buf[32] = "-";
    if (r.floor) std::snprintf(floor_buf, sizeof floor_buf, "%.1f", *r.floor);
    std::snprintf(line, sizeof line, "%-17s %-24s %-12s %6zu %8zu %9.1f %9.1f %8s  %s\n",
                  r.family.c_str(), r.params.c_str(), r.scheme.c_str(), r.trees, r.max_bits,
                  r.mean_bits, r.bound, floor_buf, r.pass ? "pass" : "FAIL");
    os << line;
  }
  return os.str();
}

std::vector<BenchRun> parse_bench_plan(std::string_view text) {
  std::vector<BenchRun> plan;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& e : doc.at("runs")) {
      BenchRun r;
      r.family.family = e.at("family").get<std::string>();
      r.family.n = e.value("n", std::size_t{0});
      r.family.k = e.value("k", std::size_t{0});
      r.family.W = e.value("W", std::uint64_t{0});
      r.family.a = e.value("a", std::uint64_t{2});
      r.family.h = e.value("h", 0u);
      r.family.unweighted = e.value("unweighted", false);
      r.scheme = parse_scheme(e.at("scheme").get<std::string>());
      r.eps = e.value("eps", 0.5);
      r.trials = e.value("trials", std::size_t{1});
      plan.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bench plan: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bench plan: ") + e.what());
  }
  return plan;
}

std::vector<BenchRun> default_bench_plan() {
  std::vector<BenchRun> plan;
  auto add = [&](FamilyParams f, Scheme s, std::size_t trials, double eps = 0.5) {
    plan.push_back(BenchRun{std::move(f), s, eps, trials});
  };
  for (std::size_t n : {std::size_t{1} << 8, std::size_t{1} << 12, std::size_t{1} << 16}) {
    add({.family = "random-tree", .n = n}, Scheme::kExact, 5);
  }
  for (double eps : {0.25, 1.0}) {
    add({.family = "random-tree", .n = std::size_t{1} << 16}, Scheme::kApprox, 3, eps);
  }
  for (std::size_t k : {2, 4, 16, 64}) {
    add({.family = "path", .n = std::size_t{1} << 20, .k = k}, Scheme::kPath, 20);
  }
  add({.family = "caterpillar", .n = std::size_t{1} << 16}, Scheme::kCaterpillar, 5);
  add({.family = "hard-caterpillar", .n = std::size_t{1} << 16}, Scheme::kCaterpillar, 5);
  add({.family = "hwa", .W = 64, .a = 2, .h = 6, .unweighted = true}, Scheme::kExact, 5);
  return plan;
}

BenchReport run_bench(const std::vector<BenchRun>& plan, std::uint64_t seed,
                      const Budgets& budgets) {
  BenchReport report;
  report.seed = seed;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    const BenchRun& run = plan[i];
    BenchRow row;
    row.family = run.family.family;
    row.params = run.family.describe();
    row.scheme = std::string(scheme_name(run.scheme));
    if (run.scheme == Scheme::kApprox) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "(eps=%g)", run.eps);
      row.scheme += buf;
    }
    SchemeParams params;
    params.eps = run.eps;
    std::uint64_t path_n = 0;
    if (run.scheme == Scheme::kPath) {
      params.weight_bound = run.family.path_max_weight();
      path_n = std::max<std::uint64_t>(1, (run.family.k - 1) * *params.weight_bound);
    }

    double total_bits = 0;
    std::size_t total_labels = 0;
    double bound = 0;
    for (std::size_t trial = 0; trial < run.trials; ++trial) {
      const Tree t = generate_family(run.family, mix_seed(seed, i, trial));
      const auto labels = encode_with(run.scheme, t, params);
      row.max_bits = std::max(row.max_bits, max_bits(labels));
      total_bits += mean_bits(labels) * static_cast<double>(labels.size());
      total_labels += labels.size();

      const unsigned B = ceil_log2(t.size(), 1);
      double b = 0;
      switch (run.scheme) {
        case Scheme::kExact: b = budgets.exact(B); break;
        case Scheme::kApprox: b = budgets.approx(B, run.eps); break;
        case Scheme::kCaterpillar: b = budgets.caterpillar(B); break;
        case Scheme::kPath: b = budgets.path(run.family.k, path_n); break;
      }
      // Tree sizes can vary between trials, so each is held to its own budget.
      if (trial == 0) row.pass = true;
      row.pass = row.pass && static_cast<double>(max_bits(labels)) <= b;
      bound = std::max(bound, b);
      ++row.trees;
    }
    row.bound = bound;
    row.mean_bits = total_labels ? total_bits / static_cast<double>(total_labels) : 0.0;
    if (run.scheme == Scheme::kPath) row.floor = path_floor(run.family.k, path_n);
    if (run.scheme == Scheme::kCaterpillar) row.floor = caterpillar_floor(run.family.n);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace treelabel
