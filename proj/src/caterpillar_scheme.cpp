#include "treelabel/caterpillar_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "treelabel/path_scheme.hpp"

namespace treelabel {

unsigned caterpillar_width(std::size_t n) { return ceil_log2(2 * n, 1) + 1; }

std::size_t caterpillar_group_bound(unsigned width) {
  const double log_n = width >= 2 ? static_cast<double>(width - 2) : 0.0;
  if (log_n <= 2.0) return 1;
  const auto k = static_cast<std::size_t>(std::floor(log_n / (2.0 * std::log2(log_n))));
  return std::max<std::size_t>(k, 1);
}

namespace {

unsigned group1_segment_bits(unsigned width) {
  return SegmentPlan::with_value_bits(caterpillar_group_bound(width), width - 1).segment_bits;
}

struct Layout {
  std::vector<NodeId> spine;           // spine nodes from the root end
  std::vector<std::uint32_t> position; // spine position, per spine node
  std::vector<NodeId> anchor;          // per node: itself (spine) or its neighbour
  std::vector<std::vector<NodeId>> leaves;  // per spine node, sorted by id
};

Layout lay_out(const Tree& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId v = 0; v < n; ++v) {
    if (v == t.root()) continue;
    adj[v].push_back(t.parent(v));
    adj[t.parent(v)].push_back(v);
  }
  std::vector<bool> on_spine(n, false);
  bool any = false;
  for (NodeId v = 0; v < n; ++v) {
    if (adj[v].size() >= 2) on_spine[v] = any = true;
  }
  if (!any) on_spine[0] = true;  // n <= 2

  // Root at the spine end with the smaller id.
  NodeId start = kNoParent;
  for (NodeId v = 0; v < n && start == kNoParent; ++v) {
    if (!on_spine[v]) continue;
    const auto spine_nbrs = std::count_if(adj[v].begin(), adj[v].end(),
                                          [&](NodeId w) { return on_spine[w]; });
    if (spine_nbrs <= 1) start = v;
  }

  Layout lay;
  lay.position.assign(n, 0);
  lay.anchor.assign(n, kNoParent);
  lay.leaves.resize(n);
  NodeId prev = kNoParent;
  for (NodeId cur = start; cur != kNoParent;) {
    lay.position[cur] = static_cast<std::uint32_t>(lay.spine.size());
    lay.spine.push_back(cur);
    lay.anchor[cur] = cur;
    NodeId next = kNoParent;
    for (NodeId w : adj[cur]) {
      if (on_spine[w] && w != prev) next = w;
    }
    prev = cur;
    cur = next;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (on_spine[v]) continue;
    lay.anchor[v] = adj[v].front();
    lay.leaves[adj[v].front()].push_back(v);  // ascending ids
  }
  return lay;
}

}  // namespace

std::vector<BitString> encode_caterpillar(const Tree& t) {
  if (!t.unit_weighted()) throw std::invalid_argument("caterpillar scheme requires unit weights");
  if (!is_caterpillar(t)) throw std::invalid_argument("tree is not a caterpillar");
  const std::size_t n = t.size();
  const Layout lay = lay_out(t);

  const unsigned width = caterpillar_width(n);
  const std::size_t k = caterpillar_group_bound(width);
  const auto plan = SegmentPlan::with_value_bits(k, width - 1);

  // Group 1: the root plus every spine node with more than n/k leaves.
  std::vector<NodeId> group1;
  std::vector<std::uint64_t> group1_dist;
  std::vector<std::int64_t> group1_index(n, -1);
  for (NodeId s : lay.spine) {
    if (s == lay.spine.front() || lay.leaves[s].size() * k > n) {
      group1_index[s] = static_cast<std::int64_t>(group1.size());
      group1.push_back(s);
      group1_dist.push_back(lay.position[s]);
    }
  }
  if (group1.size() > k) throw EncodeError("group 1 exceeds its capacity");
  const std::uint64_t x = compute_shared_offset(group1_dist, plan);
  const unsigned index_width = ceil_log2(k);

  std::vector<BitString> labels(n);
  for (NodeId s : lay.spine) {
    BitString& b = labels[s];
    b.push_back(false);
    write_fixed(b, lay.position[s] + x, width);
    const auto& kids = lay.leaves[s];
    for (std::size_t j = 0; j < kids.size(); ++j) {
      BitString& leaf = labels[kids[j]];
      leaf.push_back(true);
      const std::uint64_t d = lay.position[s] + x;
      if (group1_index[s] >= 0) {
        leaf.push_back(true);
        const auto pl = make_path_label(d, static_cast<std::uint64_t>(group1_index[s]),
                                        index_width, plan);
        write_width_header(leaf, index_width);
        write_fixed(leaf, pl.index, index_width);
        write_fixed(leaf, pl.packed, pl.packed_bits);
        write_fixed(leaf, j, width);
      } else {
        leaf.push_back(false);
        const unsigned sib_width = bit_width(kids.size() - 1);
        write_varint(leaf, width - sib_width);
        write_fixed(leaf, d, width);
        write_fixed(leaf, j, sib_width);
      }
    }
  }
  return labels;
}

CaterpillarLabel read_caterpillar_label(const BitString& bits) {
  BitReader c(bits);
  CaterpillarLabel label;
  if (!c.read_bit()) {
    if (c.remaining() == 0 || c.remaining() > 64) throw DecodeError("malformed spine label");
    label.kind = CaterpillarNodeKind::kSpine;
    label.distance = c.read(static_cast<unsigned>(c.remaining()));
    return label;
  }
  label.kind = CaterpillarNodeKind::kLeaf;
  if (!c.read_bit()) {
    label.group = 2;
    const std::uint64_t delta = read_varint(c);
    const std::uint64_t rest = c.remaining() + delta;
    if (rest % 2 != 0 || rest / 2 < delta || rest / 2 > 64) {
      throw DecodeError("malformed caterpillar leaf label");
    }
    const auto width = static_cast<unsigned>(rest / 2);
    label.distance = c.read(width);
    label.sibling = c.read(width - static_cast<unsigned>(delta));
    return label;
  }
  label.group = 1;
  const unsigned index_width = read_width_header(c);
  PathLabel pl;
  pl.index_width = index_width;
  pl.index = c.read(index_width);
  // 2L - l(L) is strictly increasing in L, so the remaining length fixes L.
  const std::size_t rest = c.remaining();
  unsigned width = 0;
  for (unsigned w = 2; w <= 64; ++w) {
    if (2 * w - group1_segment_bits(w) == rest) {
      width = w;
      break;
    }
  }
  if (width == 0) throw DecodeError("caterpillar label length matches no width");
  pl.segment_bits = group1_segment_bits(width);
  if ((pl.index + 1) * pl.segment_bits > width) throw DecodeError("group index out of range");
  pl.packed_bits = width - pl.segment_bits;
  pl.packed = c.read(pl.packed_bits);
  label.distance = pl.value();
  label.sibling = c.read(width);
  return label;
}

std::uint64_t decode_caterpillar(const CaterpillarLabel& a, const CaterpillarLabel& b) {
  const bool a_leaf = a.kind == CaterpillarNodeKind::kLeaf;
  const bool b_leaf = b.kind == CaterpillarNodeKind::kLeaf;
  const std::uint64_t delta = a.distance > b.distance ? a.distance - b.distance
                                                      : b.distance - a.distance;
  if (delta == 0 && a_leaf && b_leaf) return a.sibling == b.sibling ? 0 : 2;
  return delta + (a_leaf ? 1 : 0) + (b_leaf ? 1 : 0);
}

std::uint64_t decode_caterpillar(const BitString& a, const BitString& b) {
  return decode_caterpillar(read_caterpillar_label(a), read_caterpillar_label(b));
}

}  // namespace treelabel
