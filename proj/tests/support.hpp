#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "treelabel/label_file.hpp"
#include "treelabel/random.hpp"
#include "treelabel/tree.hpp"

namespace treelabel::testing {

// Calls f on every parent array of an n-node tree rooted at 0 whose node i
// has a parent in [0, i). That covers every labelled tree up to relabelling
// in (n-1)! arrays.
inline void for_each_recursive_tree(std::size_t n, const std::function<void(const Tree&)>& f) {
  std::vector<NodeId> parent(n, 0);
  parent[0] = kNoParent;
  if (n == 1) {
    f(Tree(parent));
    return;
  }
  while (true) {
    f(Tree(parent));
    std::size_t i = n - 1;
    while (i >= 1 && parent[i] + 1 >= i) {
      parent[i] = 0;
      --i;
    }
    if (i == 0) return;
    ++parent[i];
  }
}

// A parent array with arbitrary root and ids: a random permutation of a
// random recursive tree. Exercises code that assumes nothing about ids.
inline Tree random_shuffled_tree(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NodeId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<NodeId>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(0, i - 1)]);
  std::vector<NodeId> parent(n, kNoParent);
  for (std::size_t i = 1; i < n; ++i) parent[perm[i]] = perm[rng.uniform(0, i - 1)];
  return Tree(parent);
}

// Decoded distance for every pair against the graph-search oracle. Returns
// the number of mismatching pairs.
inline std::size_t count_mismatches(const Tree& t, Scheme s, const std::vector<BitString>& labels) {
  const LabelDecoder dec(s, labels);
  std::size_t bad = 0;
  for (NodeId u = 0; u < t.size(); ++u) {
    const auto dist = oracle_distances_from(t, u);
    for (NodeId v = 0; v < t.size(); ++v) bad += dec.distance(u, v) != dist[v];
  }
  return bad;
}

}  // namespace treelabel::testing
