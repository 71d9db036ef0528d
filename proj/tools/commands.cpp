#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "treelabel/errors.hpp"
#include "treelabel/random.hpp"
#include "treelabel/tree.hpp"

namespace treelabel::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + out_path);
}

// Tree files may carry zero weights (hwa family); schemes reject what they
// cannot encode.
Tree load_tree(const std::string& path) {
  return parse_tree(read_file(path), WeightPolicy::kNonNegative);
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int cmd_gen(const FamilyParams& family, std::uint64_t seed, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    emit(serialize_tree(generate_family(family, seed)), out_path, out);
    return kExitOk;
  });
}

int cmd_encode(const std::string& tree_path, Scheme scheme, const SchemeParams& params,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Tree t = load_tree(tree_path);
    LabelFile f{scheme, params, encode_with(scheme, t, params)};
    emit(f.to_json(), out_path, out);
    return kExitOk;
  });
}

int cmd_query(const std::string& label_path, NodeId u, NodeId v, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const LabelFile f = LabelFile::from_json(read_file(label_path));
    if (u >= f.labels.size() || v >= f.labels.size()) {
      throw std::out_of_range("node id out of range (label file has " +
                              std::to_string(f.labels.size()) + " labels)");
    }
    out << decode_with(f.scheme, f.labels[u], f.labels[v]) << "\n";
    return kExitOk;
  });
}

int cmd_verify(const std::string& tree_path, const std::string& label_path,
               const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Tree t = load_tree(tree_path);
    const LabelFile f = LabelFile::from_json(read_file(label_path));
    if (f.labels.size() != t.size()) {
      throw std::invalid_argument("label file has " + std::to_string(f.labels.size()) +
                                  " labels for a tree of " + std::to_string(t.size()) +
                                  " nodes");
    }
    const LabelDecoder decoder(f.scheme, f.labels);
    const bool approx = f.scheme == Scheme::kApprox;
    const double limit = 1.0 + f.params.eps;

    std::uint64_t pairs = 0;
    std::uint64_t failures = 0;
    double max_stretch = 1.0;
    std::string first_failure;
    auto check = [&](NodeId u, NodeId v, Weight truth) {
      ++pairs;
      const std::uint64_t got = decoder.distance(u, v);
      bool ok = got == truth;
      if (approx) {
        ok = got >= truth && static_cast<double>(got) <= limit * static_cast<double>(truth);
        if (truth > 0) {
          max_stretch = std::max(max_stretch, static_cast<double>(got) / static_cast<double>(truth));
        }
      }
      if (!ok && failures++ == 0) {
        first_failure = "(" + std::to_string(u) + ", " + std::to_string(v) + "): decoded " +
                        std::to_string(got) + ", oracle " + std::to_string(truth);
      }
    };

    if (opts.sample == 0) {
      for (NodeId u = 0; u < t.size(); ++u) {
        const auto dist = oracle_distances_from(t, u);
        for (NodeId v = u; v < t.size(); ++v) check(u, v, dist[v]);
      }
    } else {
      Rng rng(opts.seed);
      for (std::size_t i = 0; i < opts.sample; ++i) {
        const auto u = static_cast<NodeId>(rng.uniform(0, t.size() - 1));
        const auto v = static_cast<NodeId>(rng.uniform(0, t.size() - 1));
        check(u, v, oracle_dist(t, u, v));
      }
    }

    const bool pass = failures == 0;
    if (opts.json) {
      nlohmann::ordered_json doc;
      doc["scheme"] = std::string(scheme_name(f.scheme));
      doc["mode"] = opts.sample == 0 ? "exhaustive" : "sample";
      doc["pairs"] = pairs;
      doc["failures"] = failures;
      if (approx) {
        doc["eps"] = f.params.eps;
        doc["max_stretch"] = max_stretch;
      }
      doc["max_label_bits"] = max_bits(f.labels);
      doc["pass"] = pass;
      out << doc.dump(2) << "\n";
    } else {
      out << "scheme " << scheme_name(f.scheme) << ", "
          << (opts.sample == 0 ? "exhaustive" : "sampled") << ", " << pairs << " pairs\n";
      out << "max label bits " << max_bits(f.labels) << "\n";
      if (approx) {
        out << "max stretch " << std::fixed << std::setprecision(4) << max_stretch
            << " (allowed " << limit << ")\n";
      }
      out << (pass ? "PASS" : "FAIL") << ": " << failures << " failing pairs\n";
      if (!pass) out << "first failure " << first_failure << "\n";
    }
    return pass ? kExitOk : kExitVerifyFailed;
  });
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto plan = opts.plan_path.empty() ? default_bench_plan()
                                             : parse_bench_plan(read_file(opts.plan_path));
    const Budgets budgets = opts.calibration_path.empty()
                                ? Budgets::load_default()
                                : Budgets::load(opts.calibration_path);
    const BenchReport report = run_bench(plan, opts.seed, budgets);
    emit(opts.json ? report.to_json() : report.to_table(), opts.out_path, out);
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
  });
}

}  // namespace treelabel::cli
