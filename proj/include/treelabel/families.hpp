#pragma once

// Adversarial tree families: (h,W,a)-trees, their unweighted expansions, the
// phi split, and the hard caterpillar family.

#include <cstdint>
#include <optional>
#include <vector>

#include "treelabel/tree.hpp"

namespace treelabel {

// An (h,W,a)-tree. A (1,W,a)-tree is a claw: root r, center c, leaves l0 and
// l1 with edge weights W-x (r-c), x (c-l0) and x (c-l1). An (h,W,a)-tree is a
// claw whose two leaves are the roots of two (h-1,W/a,a)-trees.
//
// Claws are numbered in heap order: claw 0 at the top, claw c's subtrees
// under l0 and l1 are claws 2c+1 and 2c+2. Claw c at level t has budget
// W/a^t and 0 <= x[c] < W/a^t.
struct HwaTree {
  unsigned h = 0;
  std::uint64_t W = 1;
  std::uint64_t a = 1;
  std::vector<std::uint64_t> x;  // per claw, heap order, size 2^h - 1
  std::vector<NodeId> leaves;    // left to right
  Tree tree{std::vector<NodeId>{kNoParent}};

  std::uint64_t level_weight(unsigned level) const;
  // Position of `v` among the leaves, or nullopt when v is not a leaf.
  std::optional<std::size_t> leaf_index(NodeId v) const;
};

// Throws std::invalid_argument when W/a^i is not integral for some i <= h,
// when a == 0, or when an explicit x is out of range.
HwaTree build_hwa(unsigned h, std::uint64_t W, std::uint64_t a, std::uint64_t seed);
HwaTree build_hwa(unsigned h, std::uint64_t W, std::uint64_t a, std::vector<std::uint64_t> x);

// Closed form: at the deepest claw containing both leaves,
// 2 x + 2 sum_{i=1}^{h'-1} V/a^i with V the claw's budget and h' its height.
std::uint64_t hwa_leaf_distance(const HwaTree& t, NodeId u, NodeId v);

struct Expansion {
  Tree tree;
  std::vector<NodeId> image;  // original node -> expanded node
};

// Weight-m edges become paths of m unit edges; weight-0 edges merge their
// endpoints into one node.
Expansion expand_unweighted(const Tree& t);

// Splits every claw weight y of an (h', V^2, a^2)-tree into base-(V/a^t)
// digits y = y0 + y1 V/a^t and keeps digit `side`, giving an (h', V, a)-tree
// with the same shape.
HwaTree phi_split(const HwaTree& t_prime, std::uint64_t V, std::uint64_t a, unsigned side);

struct HardCaterpillar {
  Tree tree;
  std::vector<std::uint64_t> positions;  // i_1..i_k, 1-based spine positions
  std::size_t group_size = 0;            // floor(m / 2k)
};

// k = floor(log2 n), m = 2^k, a spine of m/2 nodes (ids 0..m/2-1, position p
// is node p-1), i_1 = 1, i_2..i_k uniform in [1, m/2], and floor(m/2k)
// leaves hung at each position i_t. Throws std::invalid_argument if n < 4.
HardCaterpillar gen_hard_caterpillar(std::size_t n, std::uint64_t seed);

}  // namespace treelabel
