// Measures the constants behind calibration/budgets.json.
//
// Trees here are deliberately not the ones the acceptance run uses: other
// sizes and adversarial shapes (complete binary, deep, random binary, hwa
// expansions). Multiplicative constants are rounded up to a multiple of 1/4,
// additive ones to the next integer.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treelabel/approx_scheme.hpp"
#include "treelabel/calibration.hpp"
#include "treelabel/caterpillar_scheme.hpp"
#include "treelabel/exact_scheme.hpp"
#include "treelabel/families.hpp"
#include "treelabel/nca.hpp"
#include "treelabel/path_scheme.hpp"
#include "treelabel/random.hpp"

namespace {

using namespace treelabel;

double clog(double v) { return v <= 1 ? 0.0 : std::ceil(std::log2(v)); }

Tree complete_binary(std::size_t n) {
  std::vector<NodeId> parent(n, kNoParent);
  for (std::size_t i = 1; i < n; ++i) parent[i] = static_cast<NodeId>((i - 1) / 2);
  return Tree(parent);
}

Tree random_binary(std::size_t n, Rng& rng) {
  std::vector<NodeId> parent(n, kNoParent);
  std::vector<NodeId> open{0, 0};
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t j = rng.uniform(0, open.size() - 1);
    parent[i] = open[j];
    open[j] = open.back();
    open.pop_back();
    open.push_back(static_cast<NodeId>(i));
    open.push_back(static_cast<NodeId>(i));
  }
  return Tree(parent);
}

Tree deep(std::size_t n, std::size_t window, Rng& rng) {
  std::vector<NodeId> parent(n, kNoParent);
  for (std::size_t i = 1; i < n; ++i) {
    parent[i] = static_cast<NodeId>(rng.uniform(i > window ? i - window : 0, i - 1));
  }
  return Tree(parent);
}

void for_each_shape(unsigned B, const std::function<void(const Tree&)>& f) {
  Rng rng(0xca11b + B);
  for (std::size_t n : {(std::size_t{1} << (B - 1)) + 1, std::size_t{1} << B}) {
    f(complete_binary(n));
    f(random_binary(n, rng));
    f(deep(n, 3, rng));
    f(gen_random_tree(n, rng.next()));
  }
  if (B <= 12) {
    for (unsigned h = 1; h <= 8; ++h) {
      const Tree t = expand_unweighted(build_hwa(h, std::uint64_t{1} << h, 2, rng.next()).tree).tree;
      if (ceil_log2(t.size()) == B) f(t);
    }
  }
}

double up(double v, double step) { return std::ceil(v / step - 1e-9) * step; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measure label-size constants"};
  unsigned max_B = 16;
  std::string out;
  app.add_option("--max-log-n", max_B, "largest ceil(log2 n) measured")->check(CLI::Range(4, 20));
  app.add_option("--out", out, "write budgets JSON here");
  CLI11_PARSE(app, argc, argv);

  double exact_C = 0, nca_C = 0, approx_c = 0, cat_c_prime = 0, path_c = 0;
  // One header per group-1 leaf index: its width header costs about
  // 2 log log log n bits on top of the index.
  const double cat_c = 2;

  for (unsigned B = 3; B <= max_B; B += (B < 10 ? 1 : 2)) {
    for_each_shape(B, [&](const Tree& t) {
      const unsigned Bt = ceil_log2(t.size());
      const double lbt = std::max(1.0, clog(Bt));
      for (const ExactLabel& l : build_exact_labels(t)) {
        exact_C = std::max(exact_C, (static_cast<double>(write_exact_label(l).size()) -
                                     0.5 * Bt * Bt) / (Bt * lbt));
        nca_C = std::max(nca_C, static_cast<double>(nca_bits(l.nca)) / (Bt * lbt));
      }
      for (const ApproxLabel& l : build_approx_labels(t, 0.25)) {
        const double fixed = static_cast<double>(write_approx_label(l).size()) - Bt -
                             static_cast<double>(nca_bits(l.nca) + l.thresholds.size());
        approx_c = std::max(approx_c, fixed);
      }
    });
    Rng rng(0xca7 + B);
    for (std::size_t n : {(std::size_t{1} << (B - 1)) + 1, std::size_t{1} << B}) {
      for (int s = 0; s < 3; ++s) {
        const Tree cat = gen_random_caterpillar(n, rng.next());
        const Tree hard = gen_hard_caterpillar(n, rng.next()).tree;
        const unsigned Bt = ceil_log2(n);
        for (const Tree* t : {&cat, &hard}) {
          for (const BitString& bits : encode_caterpillar(*t)) {
            cat_c_prime = std::max(cat_c_prime, static_cast<double>(bits.size()) -
                                                    (2.0 * Bt - clog(Bt) + cat_c * clog(clog(Bt))));
          }
        }
      }
    }
  }
  for (std::size_t k : {2u, 3u, 5u, 8u, 24u, 100u, 200u}) {
    for (Weight w : {Weight{3}, Weight{77}, Weight{5000}, Weight{3000000}}) {
      const Budgets zero{};
      for (std::uint64_t s = 0; s < 20; ++s) {
        const Tree t = gen_weighted_path(k, w, k * 31 + w + s);
        const std::uint64_t n = (k - 1) * w;
        for (const BitString& bits : encode_path(t, w)) {
          path_c = std::max(path_c, static_cast<double>(bits.size()) - zero.path(k, n));
        }
      }
    }
  }

  nlohmann::ordered_json measured = {{"exact_C", exact_C},         {"nca_C", nca_C},
                                     {"approx_c", approx_c},       {"caterpillar_c", cat_c},
                                     {"caterpillar_c_prime", cat_c_prime}, {"path_c", path_c}};
  nlohmann::ordered_json frozen = {{"exact_C", up(exact_C, 0.25)},
                                   {"nca_C", up(nca_C, 0.25)},
                                   {"approx_c", up(approx_c, 1)},
                                   {"caterpillar_c", cat_c},
                                   {"caterpillar_c_prime", up(cat_c_prime, 1)},
                                   {"path_c", up(path_c, 1)}};
  std::cerr << "measured " << measured.dump() << "\n";
  if (out.empty()) {
    std::cout << frozen.dump(2) << "\n";
  } else {
    std::ofstream(out) << frozen.dump(2) << "\n";
  }
  return 0;
}
