// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "treelabel/approx_scheme.hpp"
#include "treelabel/calibration.hpp"
#include "treelabel/caterpillar_scheme.hpp"
#include "treelabel/exact_scheme.hpp"
#include "treelabel/families.hpp"
#include "treelabel/label_file.hpp"
#include "treelabel/path_scheme.hpp"
#include "treelabel/random.hpp"
#include "treelabel/tree.hpp"

namespace {

using namespace treelabel;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double target_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > target_seconds) {
    o.pass = false;
    o.detail += " [over time target " + std::to_string(static_cast<int>(target_seconds)) + "s]";
  }
  std::printf("%s criterion %d: %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Decoded distance against the search oracle for every unordered pair.
std::size_t all_pairs_mismatches(const Tree& t, const LabelDecoder& dec) {
  std::size_t bad = 0;
  for (NodeId u = 0; u < t.size(); ++u) {
    const auto dist = oracle_distances_from(t, u);
    for (NodeId v = u; v < t.size(); ++v) bad += dec.distance(u, v) != dist[v];
  }
  return bad;
}

std::size_t sampled_mismatches(const Tree& t, const LabelDecoder& dec, std::size_t pairs, Rng& rng) {
  std::size_t bad = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto u = static_cast<NodeId>(rng.uniform(0, t.size() - 1));
    const auto v = static_cast<NodeId>(rng.uniform(0, t.size() - 1));
    bad += dec.distance(u, v) != oracle_dist(t, u, v);
  }
  return bad;
}

Tree random_parent_array(std::size_t n, Rng& rng) {
  std::vector<NodeId> parent(n, kNoParent);
  for (std::size_t i = 1; i < n; ++i) parent[i] = static_cast<NodeId>(rng.uniform(0, i - 1));
  return Tree(parent);
}

// Random tree of one of three shapes: uniform recursive, deep (parent among
// the previous few nodes), or caterpillar.
Tree mixed_tree(std::size_t n, Rng& rng) {
  switch (rng.uniform(0, 2)) {
    case 0:
      return gen_random_tree(n, rng.next());
    case 1: {
      std::vector<NodeId> parent(n, kNoParent);
      for (std::size_t i = 1; i < n; ++i) {
        parent[i] = static_cast<NodeId>(rng.uniform(i > 8 ? i - 8 : 0, i - 1));
      }
      return Tree(parent);
    }
    default:
      return n < 2 ? Tree({kNoParent}) : gen_random_caterpillar(n, rng.next());
  }
}

// The same unrooted tree rooted at `root`, with ids permuted.
Tree reroot_shuffled(const Tree& t, NodeId root, Rng& rng) {
  const std::size_t n = t.size();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId v = 0; v < n; ++v) {
    if (v != t.root()) {
      adj[v].push_back(t.parent(v));
      adj[t.parent(v)].push_back(v);
    }
  }
  std::vector<NodeId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<NodeId>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(0, i - 1)]);
  std::vector<NodeId> parent(n, kNoParent);
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[perm[w]] = perm[v];
        stack.push_back(w);
      }
    }
  }
  return Tree(parent);
}

// Caterpillar with spine 0..s-1 and leaves[i] leaves on spine node i.
Tree caterpillar_from_counts(const std::vector<std::size_t>& leaves) {
  std::vector<NodeId> parent{kNoParent};
  for (std::size_t i = 1; i < leaves.size(); ++i) parent.push_back(static_cast<NodeId>(i - 1));
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = 0; j < leaves[i]; ++j) parent.push_back(static_cast<NodeId>(i));
  }
  return Tree(parent);
}

Outcome criterion1() {
  std::size_t trees = 0, bad = 0;
  auto check = [&](const Tree& t) {
    ++trees;
    const LabelDecoder dec(Scheme::kExact, encode_exact(t));
    bad += all_pairs_mismatches(t, dec);
  };
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<NodeId> parent(n, 0);
    parent[0] = kNoParent;
    while (true) {
      check(Tree(parent));
      std::size_t i = n - 1;
      while (i >= 1 && parent[i] + 1 >= i) parent[i--] = 0;
      if (i == 0) break;
      ++parent[i];
    }
  }
  Rng rng(101);
  for (std::size_t n : {8u, 9u}) {
    for (int s = 0; s < 100000; ++s) check(random_parent_array(n, rng));
  }
  return {bad == 0, fmt("%zu trees, %zu mismatching pairs", trees, bad)};
}

Outcome criterion2() {
  Rng rng(202);
  std::size_t bad = 0, pairs = 0;
  for (int s = 0; s < 1000; ++s) {
    const std::size_t n = rng.uniform(1, 2000);
    const Tree t = mixed_tree(n, rng);
    const LabelDecoder dec(Scheme::kExact, encode_exact(t));
    if (n <= 200) {
      bad += all_pairs_mismatches(t, dec);
      pairs += n * (n + 1) / 2;
    } else {
      bad += sampled_mismatches(t, dec, 1000, rng);
      pairs += 1000;
    }
  }
  return {bad == 0, fmt("1000 trees, %zu pairs, %zu mismatches", pairs, bad)};
}

Outcome criterion3(const Budgets& budgets) {
  Outcome o;
  for (unsigned B : {8u, 12u, 16u}) {
    std::size_t max_bits = 0, max_list = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Tree t = gen_random_tree(std::size_t{1} << B, 300 + B * 100 + s);
      for (const ExactLabel& l : build_exact_labels(t)) {
        max_bits = std::max(max_bits, write_exact_label(l).size());
        max_list = std::max(max_list, l.distance_list_bits());
      }
    }
    const bool ok = max_bits <= budgets.exact(B) && max_list <= exact_list_budget(B);
    o.pass = o.pass && ok;
    o.detail += fmt("n=2^%u: max %zu <= %.0f, list %zu <= %.0f; ", B, max_bits, budgets.exact(B),
                    max_list, exact_list_budget(B));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t bad_dist = 0, over = 0, plan_over = 0, labels = 0;
  for (std::size_t k : {2u, 4u, 16u, 64u}) {
    for (Weight max_w : {Weight{10}, Weight{1000}, Weight{1000000}}) {
      std::size_t max_bits = 0;
      for (std::uint64_t s = 0; s < 100; ++s) {
        const Tree t = gen_weighted_path(k, max_w, k * 1000003 + max_w + s);
        const auto bits = encode_path(t);
        const LabelDecoder dec(Scheme::kPath, bits);
        bad_dist += all_pairs_mismatches(t, dec);
        const auto plan = SegmentPlan::for_diameter(k, distroot(t, static_cast<NodeId>(k - 1)));
        const unsigned log_k = ceil_log2(k);
        for (const BitString& b : bits) {
          ++labels;
          max_bits = std::max(max_bits, b.size());
          const std::size_t header = width_header_size(log_k) + varint_size(plan.segment_bits);
          // (k - 1) l + 1 with l = ceil(b / k), the k-way split of b bits.
          const std::size_t even = (plan.value_bits + k - 1) / k;
          over += b.size() > (k - 1) * even + 1 + log_k + header;
          // The plan in use keeps L - l bits, l = floor(b / k), L = b + 1.
          plan_over += b.size() > plan.total_bits - plan.segment_bits + log_k + header;
        }
      }
      const double floor = path_floor(k, (k - 1) * max_w);
      o.detail += fmt("k=%zu w=%llu max %zu floor %.1f; ", k,
                      static_cast<unsigned long long>(max_w), max_bits, floor);
    }
  }
  o.pass = bad_dist == 0 && over == 0 && plan_over == 0;
  o.detail = fmt("%zu mismatches; of %zu labels %zu over (k-1)l+1+log k+header, %zu over "
                 "L-l+log k+header; ",
                 bad_dist, labels, over, plan_over) +
             o.detail;
  return o;
}

Outcome criterion5(const Budgets& budgets) {
  Rng rng(505);
  std::size_t bad = 0, trees = 0;
  auto check = [&](const Tree& t) {
    ++trees;
    const LabelDecoder dec(Scheme::kCaterpillar, encode_caterpillar(t));
    bad += all_pairs_mismatches(t, dec);
  };
  // Every spine length and leaf distribution for n <= 10.
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::size_t s = 1; s <= n; ++s) {
      std::vector<std::size_t> counts(s, 0);
      const std::size_t leaves = n - s;
      std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t left) {
        if (i + 1 == s) {
          counts[i] = left;
          check(caterpillar_from_counts(counts));
          return;
        }
        for (std::size_t c = 0; c <= left; ++c) {
          counts[i] = c;
          fill(i + 1, left - c);
        }
      };
      fill(0, leaves);
    }
  }
  // Sampled spine lengths and distributions up to 64, half of them re-rooted.
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = rng.uniform(2, 64);
    const std::size_t s = rng.uniform(1, n);
    std::vector<std::size_t> counts(s, 0);
    for (std::size_t j = s; j < n; ++j) ++counts[rng.uniform(0, s - 1)];
    Tree t = caterpillar_from_counts(counts);
    if (i % 2) t = reroot_shuffled(t, static_cast<NodeId>(rng.uniform(0, n - 1)), rng);
    check(t);
  }
  for (int i = 0; i < 1000; ++i) {
    Tree t = gen_random_caterpillar(rng.uniform(2, 5000), rng.next());
    if (i % 4 == 0) t = reroot_shuffled(t, static_cast<NodeId>(rng.uniform(0, t.size() - 1)), rng);
    check(t);
  }
  Outcome o{bad == 0, fmt("%zu caterpillars, %zu mismatching pairs; ", trees, bad)};
  for (unsigned B : {16u, 17u}) {
    const std::size_t n = std::size_t{1} << B;
    std::size_t max_bits = 0;
    for (std::uint64_t s = 0; s < 5; ++s) {
      max_bits = std::max(max_bits, treelabel::max_bits(encode_caterpillar(gen_random_caterpillar(n, s))));
      max_bits = std::max(max_bits, treelabel::max_bits(encode_caterpillar(gen_hard_caterpillar(n, s).tree)));
    }
    o.pass = o.pass && max_bits <= budgets.caterpillar(B);
    o.detail += fmt("n=2^%u: max %zu <= %.1f; ", B, max_bits, budgets.caterpillar(B));
  }
  return o;
}

Outcome criterion6() {
  Rng rng(606);
  std::size_t violations = 0, ancestor_errors = 0, pairs = 0;
  double worst = 1.0;
  for (double eps : {0.1, 0.25, 0.5, 1.0}) {
    for (int s = 0; s < 200; ++s) {
      const std::size_t n = rng.uniform(1, 2000);
      const Tree t = mixed_tree(n, rng);
      const LabelDecoder dec(Scheme::kApprox, encode_approx(t, eps));
      auto check = [&](NodeId u, NodeId v, Weight d) {
        ++pairs;
        const auto got = dec.distance(u, v);
        if (got < d || static_cast<double>(got) > (1 + eps) * static_cast<double>(d)) ++violations;
        if (d > 0) worst = std::max(worst, static_cast<double>(got) / static_cast<double>(d));
        const NodeId w = nca_by_walk(t, u, v);
        if ((w == u || w == v) && got != d) ++ancestor_errors;
      };
      if (n <= 200) {
        for (NodeId u = 0; u < n; ++u) {
          const auto dist = oracle_distances_from(t, u);
          for (NodeId v = 0; v < n; ++v) check(u, v, dist[v]);
        }
      } else {
        for (int i = 0; i < 1000; ++i) {
          const auto u = static_cast<NodeId>(rng.uniform(0, n - 1));
          const auto v = static_cast<NodeId>(rng.uniform(0, n - 1));
          check(u, v, oracle_dist(t, u, v));
        }
        // Every ancestor of a few sampled nodes.
        for (int i = 0; i < 20; ++i) {
          const auto v = static_cast<NodeId>(rng.uniform(0, n - 1));
          for (NodeId a = v; a != kNoParent; a = t.parent(a)) {
            check(v, a, oracle_dist(t, v, a));
            check(a, v, oracle_dist(t, a, v));
          }
        }
      }
    }
  }
  return {violations == 0 && ancestor_errors == 0,
          fmt("%zu pairs, %zu sandwich violations, %zu inexact ancestor pairs, max ratio %.3f",
              pairs, violations, ancestor_errors, worst)};
}

Outcome criterion7() {
  const unsigned B = 16;
  std::size_t longest = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Tree t = gen_random_tree(std::size_t{1} << B, 7000 + s);
    for (const ApproxLabel& l : build_approx_labels(t, 1.0)) {
      longest = std::max(longest, l.thresholds.size());
    }
  }
  return {longest <= 2 * B + 2, fmt("longest S %zu <= %u", longest, 2 * B + 2)};
}

Outcome criterion8() {
  Outcome o;
  std::size_t closed_bad = 0, closed_pairs = 0;
  for (unsigned h = 1; h <= 5; ++h) {
    for (std::uint64_t W : {std::uint64_t{1} << h, std::uint64_t{2} << h}) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const HwaTree t = build_hwa(h, W, 2, seed);
        for (NodeId u : t.leaves) {
          const auto dist = oracle_distances_from(t.tree, u);
          for (NodeId v : t.leaves) {
            ++closed_pairs;
            closed_bad += hwa_leaf_distance(t, u, v) != dist[v];
          }
        }
      }
    }
  }

  // dist_T'(u,v) = (dist_phi0(u,v) mod 2V) + V dist_phi1(u,v), T' an
  // (h-1, V^2, a^2)-tree from an (h, W, a) setup with V = W/a, a = 2.
  std::size_t phi_bad = 0, phi_pairs = 0;
  std::string first_phi;
  for (unsigned hp = 1; hp <= 3; ++hp) {
    const std::uint64_t V = std::uint64_t{1} << hp;  // W = 2^(hp+1), a = 2
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const HwaTree tp = build_hwa(hp, V * V, 4, seed);
      const HwaTree t0 = phi_split(tp, V, 2, 0), t1 = phi_split(tp, V, 2, 1);
      for (std::size_t i = 0; i < tp.leaves.size(); ++i) {
        const auto dist = oracle_distances_from(tp.tree, tp.leaves[i]);
        for (std::size_t j = 0; j < tp.leaves.size(); ++j) {
          ++phi_pairs;
          const auto d0 = hwa_leaf_distance(t0, t0.leaves[i], t0.leaves[j]);
          const auto d1 = hwa_leaf_distance(t1, t1.leaves[i], t1.leaves[j]);
          const auto rhs = d0 % (2 * V) + V * d1;
          if (rhs != dist[tp.leaves[j]]) {
            if (phi_bad++ == 0) {
              first_phi = fmt("first at h'=%u V=%llu seed %llu leaves %zu,%zu: %llu vs %llu", hp,
                              static_cast<unsigned long long>(V),
                              static_cast<unsigned long long>(seed), i, j,
                              static_cast<unsigned long long>(dist[tp.leaves[j]]),
                              static_cast<unsigned long long>(rhs));
            }
          }
        }
      }
    }
  }

  std::size_t expand_bad = 0, node_bound_bad = 0;
  Rng rng(808);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const unsigned h = 1 + static_cast<unsigned>(seed % 5);
    const HwaTree t = build_hwa(h, std::uint64_t{1} << h, 2, seed);
    const Expansion e = expand_unweighted(t.tree);
    for (int p = 0; p < 50; ++p) {
      const NodeId u = t.leaves[rng.uniform(0, t.leaves.size() - 1)];
      const NodeId v = static_cast<NodeId>(rng.uniform(0, t.tree.size() - 1));
      expand_bad += oracle_dist(e.tree, e.image[u], e.image[v]) != oracle_dist(t.tree, u, v);
    }
  }
  for (unsigned h = 1; h <= 6; ++h) {
    for (std::uint64_t W : {std::uint64_t{1} << h, std::uint64_t{4} << h}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Expansion e = expand_unweighted(build_hwa(h, W, 2, seed).tree);
        node_bound_bad += e.tree.size() > 2 * W * h + 1;
      }
    }
  }

  o.pass = closed_bad == 0 && phi_bad == 0 && expand_bad == 0 && node_bound_bad == 0;
  o.detail = fmt("closed form %zu/%zu bad; phi identity %zu/%zu bad%s%s; expansion %zu/1000 bad; "
                 "node bound %zu bad",
                 closed_bad, closed_pairs, phi_bad, phi_pairs, phi_bad ? " (" : "",
                 phi_bad ? (first_phi + ")").c_str() : "", expand_bad, node_bound_bad);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion9() {
  namespace fs = std::filesystem;
  const std::string tool = TREELABEL_CLI_PATH;
  const fs::path dir = fs::temp_directory_path() / "treelabel_acceptance_query";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string tree = (dir / "tree.json").string(), labels = (dir / "labels.json").string(),
                    out = (dir / "q.txt").string();
  struct Case {
    const char* gen;
    const char* scheme;
    double stretch;
  };
  std::size_t queries = 0, bad = 0;
  Outcome o;
  for (const Case& c : {Case{"--family random-tree --n 300", "exact", 1.0},
                        Case{"--family random-tree --n 300", "approx --eps 0.5", 1.5},
                        Case{"--family path --k 40 --W 100000", "path", 1.0},
                        Case{"--family caterpillar --n 300", "caterpillar", 1.0}}) {
    if (std::system((tool + " gen " + c.gen + " --seed 9 --out " + tree).c_str()) != 0 ||
        std::system((tool + " encode " + tree + " --scheme " + c.scheme + " --out " + labels).c_str()) != 0) {
      return {false, std::string("gen/encode failed for ") + c.scheme};
    }
    const Tree t = parse_tree(slurp(tree));
    fs::remove(tree);
    Rng rng(909);
    for (int i = 0; i < 10; ++i) {
      const auto u = static_cast<NodeId>(rng.uniform(0, t.size() - 1));
      const auto v = static_cast<NodeId>(rng.uniform(0, t.size() - 1));
      ++queries;
      const std::string cmd = tool + " query " + labels + " " + std::to_string(u) + " " +
                              std::to_string(v) + " > " + out;
      if (fs::exists(tree) || std::system(cmd.c_str()) != 0) {
        ++bad;
        continue;
      }
      const double got = std::stod(slurp(out));
      const auto want = static_cast<double>(oracle_dist(t, u, v));
      bad += got < want || got > c.stretch * want;
    }
  }
  fs::remove_all(dir);
  return {bad == 0, fmt("%zu queries without the tree file, %zu wrong", queries, bad)};
}

Outcome criterion10() {
  std::size_t bad = 0, trees = 0;
  for (unsigned h = 1; h <= 6; ++h) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Tree t = expand_unweighted(build_hwa(h, std::uint64_t{1} << h, 2, seed).tree).tree;
      ++trees;
      bad += all_pairs_mismatches(t, LabelDecoder(Scheme::kExact, encode_exact(t)));
    }
  }
  for (std::size_t n : {4u, 5u, 16u, 100u, 1000u, 4096u, 10000u, 16384u}) {
    for (std::uint64_t seed = 0; seed < (n < 10000 ? 5u : 2u); ++seed) {
      const Tree t = gen_hard_caterpillar(n, seed).tree;
      ++trees;
      bad += all_pairs_mismatches(t, LabelDecoder(Scheme::kCaterpillar, encode_caterpillar(t)));
    }
  }
  return {bad == 0, fmt("%zu trees all pairs, %zu mismatches", trees, bad)};
}

}  // namespace

int main() {
  const Budgets budgets = Budgets::load_default();
  run(1, "exact scheme, all small trees", 300, criterion1);
  run(2, "exact scheme, random trees up to 2000 nodes", 120, criterion2);
  run(3, "exact scheme size budget", 60, [&] { return criterion3(budgets); });
  run(4, "path scheme correctness and label size", 60, criterion4);
  run(5, "caterpillar scheme correctness and budget", 180, [&] { return criterion5(budgets); });
  run(6, "approx scheme stretch sandwich", 180, criterion6);
  run(7, "threshold string length at eps=1", 30, criterion7);
  run(8, "tree family identities", 120, criterion8);
  run(9, "stateless query through the CLI", 10, criterion9);
  run(10, "hard families", 180, criterion10);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
