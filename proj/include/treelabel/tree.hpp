#pragma once

// Rooted trees, the reference distance oracle, the canonical JSON format and
// seeded generators.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treelabel {

using NodeId = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr NodeId kNoParent = std::numeric_limits<NodeId>::max();

// Zero-weight edges are only legal for the (h,W,a) family.
enum class WeightPolicy { kPositive, kNonNegative };

class Tree {
 public:
  // parent[root] == kNoParent for exactly one node. `weight` is either empty
  // (all edges weigh 1) or has one entry per node, weight[i] being the edge
  // i -> parent(i); the root entry is ignored and stored as 0.
  explicit Tree(std::vector<NodeId> parent, std::vector<Weight> weight = {},
                WeightPolicy policy = WeightPolicy::kPositive);

  std::size_t size() const noexcept { return parent_.size(); }
  NodeId root() const noexcept { return root_; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  Weight weight(NodeId v) const {
    if (v == root_) return 0;
    return weight_.empty() ? 1 : weight_[v];
  }
  bool has_weights() const noexcept { return !weight_.empty(); }
  bool unit_weighted() const noexcept;

  std::span<const NodeId> children(NodeId v) const {
    return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
  }
  // Breadth-first order from the root; every parent precedes its children.
  std::span<const NodeId> top_down() const noexcept { return order_; }

  const std::vector<NodeId>& parents() const noexcept { return parent_; }
  const std::vector<Weight>& weights() const noexcept { return weight_; }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.parent_ == b.parent_ && a.weight_ == b.weight_;
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<Weight> weight_;
  NodeId root_ = 0;
  std::vector<std::uint32_t> child_begin_;
  std::vector<NodeId> child_list_;  // children sorted by id
  std::vector<NodeId> order_;
};

Weight distroot(const Tree& t, NodeId v);
std::vector<Weight> all_distroots(const Tree& t);
std::vector<std::uint32_t> all_depths(const Tree& t);

// NCA by walking parent pointers from the deeper node.
NodeId nca_by_walk(const Tree& t, NodeId u, NodeId v);

// Reference distance: walks both nodes up to their NCA summing edge weights.
Weight oracle_dist(const Tree& t, NodeId u, NodeId v);
// Reference distances from `source` to every node by graph search over the
// undirected tree.
std::vector<Weight> oracle_distances_from(const Tree& t, NodeId source);

Tree parse_tree(std::string_view text, WeightPolicy policy = WeightPolicy::kPositive);
std::string serialize_tree(const Tree& t);

// Uniform recursive tree: node i > 0 attaches to a uniform parent in [0, i).
Tree gen_random_tree(std::size_t n, std::uint64_t seed);
// Random spine length in [1, n]; the rest attach as leaves to uniform spine nodes.
Tree gen_random_caterpillar(std::size_t n, std::uint64_t seed);
// Path v0..v(k-1) rooted at v0 with uniform weights in [1, max_w].
Tree gen_weighted_path(std::size_t k, Weight max_w, std::uint64_t seed);

// True when the non-leaf nodes of the (unrooted) tree form a path.
bool is_caterpillar(const Tree& t);
// True when every node has at most one child.
bool is_rooted_path(const Tree& t);

}  // namespace treelabel
