#include "treelabel/hld.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace treelabel {

HldIndex::HldIndex(const Tree& t)
    : root_(t.root()),
      parent_(t.parents()),
      heavy_child_(t.size(), kNoParent),
      apex_(t.size()),
      heavy_offset_(t.size(), 0),
      subtree_size_(t.size(), 1),
      la_begin_(t.size(), 0),
      la_count_(t.size(), 0) {
  const std::size_t n = t.size();
  const auto order = t.top_down();

  for (std::size_t i = n; i-- > 1;) {
    const NodeId v = order[i];
    subtree_size_[parent_[v]] += subtree_size_[v];
  }
  for (NodeId v = 0; v < n; ++v) {
    // Children are sorted by id, so strict '>' keeps the smallest id on ties.
    std::uint32_t best = 0;
    for (NodeId c : t.children(v)) {
      if (subtree_size_[c] > best) {
        best = subtree_size_[c];
        heavy_child_[v] = c;
      }
    }
  }

  for (NodeId v : order) {
    if (is_light(v)) {
      apex_[v] = v;
      heavy_offset_[v] = 0;
      const NodeId p = v == root_ ? kNoParent : parent_[v];
      const std::uint32_t inherited = p == kNoParent ? 0 : la_count_[p];
      la_begin_[v] = static_cast<std::uint32_t>(la_flat_.size());
      la_count_[v] = static_cast<std::uint8_t>(inherited + 1);
      if (p != kNoParent) {
        const std::uint32_t from = la_begin_[p];
        for (std::uint32_t i = 0; i < inherited; ++i) la_flat_.push_back(la_flat_[from + i]);
      }
      la_flat_.push_back(v);
    } else {
      const NodeId p = parent_[v];
      apex_[v] = apex_[p];
      heavy_offset_[v] = heavy_offset_[p] + 1;
      la_begin_[v] = la_begin_[p];
      la_count_[v] = la_count_[p];
    }
  }

  path_begin_.assign(n, 0);
  path_flat_.reserve(n);
  for (NodeId v : order) {
    if (!is_light(v)) continue;
    path_begin_[v] = static_cast<std::uint32_t>(path_flat_.size());
    for (NodeId x = v; x != kNoParent; x = heavy_child_[x]) path_flat_.push_back(x);
  }

  light_child_begin_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    const auto kids = t.children(v);
    light_child_begin_[v + 1] = light_child_begin_[v] +
        static_cast<std::uint32_t>(kids.size() - (kids.empty() ? 0 : 1));
  }
  light_child_list_.reserve(light_child_begin_[n]);
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t start = light_child_list_.size();
    for (NodeId c : t.children(v)) {
      if (c != heavy_child_[v]) light_child_list_.push_back(c);
    }
    std::stable_sort(light_child_list_.begin() + static_cast<std::ptrdiff_t>(start),
                     light_child_list_.end(), [this](NodeId a, NodeId b) {
                       return subtree_size_[a] > subtree_size_[b];
                     });
  }

  tin_.assign(n, 0);
  tout_.assign(n, 0);
  std::vector<NodeId> stack{root_};
  std::uint32_t clock = 0;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    tin_[v] = clock++;
    tout_[v] = tin_[v] + subtree_size_[v] - 1;
    const auto kids = t.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
}

std::span<const NodeId> HldIndex::heavy_path(NodeId head) const {
  if (!is_light(head)) throw std::invalid_argument("heavy_path: node is not a path head");
  std::size_t len = 0;
  for (NodeId x = head; x != kNoParent; x = heavy_child_[x]) ++len;
  return {path_flat_.data() + path_begin_[head], len};
}

std::size_t light_count_to(const HldIndex& idx, NodeId v, NodeId a) {
  if (v >= idx.size() || a >= idx.size() || !idx.is_ancestor(a, v)) {
    throw std::invalid_argument("light_count_to: node " + std::to_string(a) +
                                " is not an ancestor of " + std::to_string(v));
  }
  return idx.light_ancestors(a).size();
}

}  // namespace treelabel
