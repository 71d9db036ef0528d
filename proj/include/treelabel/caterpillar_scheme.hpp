#pragma once

// Distance labels for unweighted caterpillars.
//
// Every node stores D = distroot(anchor) + x, where the anchor is the node
// itself on the spine or the parent of a leaf, and x is the shared offset of
// the path scheme run over "group 1": the root plus spine nodes with more
// than n/k leaves (at most k nodes). Leaves also store an id unique among
// their siblings.
//
//   spine node             0  D[L]
//   leaf, group-2 anchor   10 varint(d) D[L] sibling[L - d]
//   leaf, group-1 anchor   11 hdr(w) index[w] packed-D[L - l] sibling[L]
//
// L = ceil(log2(2n)) + 1. The decoder recovers L from the total label length,
// then k and the segment width l from L, so no field announces n.

#include <cstdint>
#include <vector>

#include "treelabel/bitcodec.hpp"
#include "treelabel/tree.hpp"

namespace treelabel {

enum class CaterpillarNodeKind { kSpine, kLeaf };

struct CaterpillarLabel {
  CaterpillarNodeKind kind = CaterpillarNodeKind::kSpine;
  int group = 0;  // anchor group for leaves (1 or 2); 0 for spine nodes
  std::uint64_t distance = 0;  // D
  std::uint64_t sibling = 0;
};

// L for an n-node caterpillar.
unsigned caterpillar_width(std::size_t n);
// Group-1 capacity k, as a non-decreasing function of L:
// k = log n / (2 log log n) with log n read as L - 2, at least 1.
std::size_t caterpillar_group_bound(unsigned width);

std::vector<BitString> encode_caterpillar(const Tree& t);
CaterpillarLabel read_caterpillar_label(const BitString& bits);
std::uint64_t decode_caterpillar(const CaterpillarLabel& a, const CaterpillarLabel& b);
std::uint64_t decode_caterpillar(const BitString& a, const BitString& b);

}  // namespace treelabel
