#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "treelabel/tree.hpp"

namespace treelabel {

// Heavy-light decomposition of a rooted tree.
//
// The heavy child of a node is its child with the largest subtree, ties going
// to the smallest id. The root and every non-heavy child are light; a light
// node heads the heavy path that continues through its heavy children.
class HldIndex {
 public:
  explicit HldIndex(const Tree& t);

  std::size_t size() const noexcept { return subtree_size_.size(); }
  NodeId root() const noexcept { return root_; }
  NodeId parent(NodeId v) const { return parent_[v]; }

  NodeId heavy_child(NodeId v) const { return heavy_child_[v]; }  // kNoParent if leaf
  bool is_light(NodeId v) const { return v == root_ || heavy_child_[parent_[v]] != v; }
  NodeId apex(NodeId v) const { return apex_[v]; }
  std::uint32_t heavy_offset(NodeId v) const { return heavy_offset_[v]; }
  std::uint32_t subtree_size(NodeId v) const { return subtree_size_[v]; }

  // Light ancestors of v in root-to-node order, including v if it is light.
  std::span<const NodeId> light_ancestors(NodeId v) const {
    return {la_flat_.data() + la_begin_[v], la_flat_.data() + la_begin_[v] + la_count_[v]};
  }
  // Nodes of the heavy path headed by `head`, top to bottom.
  std::span<const NodeId> heavy_path(NodeId head) const;
  // Light children of v ordered by subtree size descending, then by id.
  std::span<const NodeId> light_children(NodeId v) const {
    return {light_child_list_.data() + light_child_begin_[v],
            light_child_list_.data() + light_child_begin_[v + 1]};
  }

  bool is_ancestor(NodeId a, NodeId v) const { return tin_[a] <= tin_[v] && tout_[v] <= tout_[a]; }

 private:
  NodeId root_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> heavy_child_;
  std::vector<NodeId> apex_;
  std::vector<std::uint32_t> heavy_offset_;
  std::vector<std::uint32_t> subtree_size_;
  std::vector<std::uint32_t> la_begin_;
  std::vector<std::uint8_t> la_count_;
  std::vector<NodeId> la_flat_;
  std::vector<std::uint32_t> path_begin_;  // indexed by head, into path_flat_
  std::vector<NodeId> path_flat_;
  std::vector<std::uint32_t> light_child_begin_;
  std::vector<NodeId> light_child_list_;
  std::vector<std::uint32_t> tin_, tout_;
};

inline HldIndex decompose(const Tree& t) { return HldIndex(t); }

// Number of light nodes on the path root..a, where a is an ancestor of v (or
// v itself). Throws std::invalid_argument otherwise.
std::size_t light_count_to(const HldIndex& idx, NodeId v, NodeId a);

}  // namespace treelabel
