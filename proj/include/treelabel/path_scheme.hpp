#pragma once

// Distance labels for weighted paths v0..v(k-1).
//
// Every node stores d_i + x where d_i = distroot(v_i) and x is one offset
// shared by all nodes, chosen so that d_i + x has an all-zero block of bits
// ("segment i"). The zero block is left out of v_i's label, which saves
// floor(b / k) bits per label, b = ceil(log2(2D)) and D the path length.
//
// Layout: [width header w][index i: w bits][varint segment width][packed value]
// The packed value runs to the end of the label.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "treelabel/bitcodec.hpp"
#include "treelabel/tree.hpp"

namespace treelabel {

struct SegmentPlan {
  std::size_t k = 0;          // number of segments (nodes on the path)
  unsigned value_bits = 0;    // b: every d_i < 2^(b-1)
  unsigned total_bits = 0;    // L = b + 1; the top bit absorbs carries from x
  unsigned segment_bits = 0;  // floor(b / k)

  // b = ceil(log2(2 * diameter)), at least 1.
  static SegmentPlan for_diameter(std::size_t k, std::uint64_t diameter);
  static SegmentPlan with_value_bits(std::size_t k, unsigned value_bits);
};

// The z with no bits outside segment i such that z + y is zero in segment i.
std::uint64_t zero_segment(std::size_t i, std::uint64_t y, const SegmentPlan& plan);

// Shared offset x with d_i + x zero in segment i for every i. `distroots`
// must start at 0 and be strictly increasing.
std::uint64_t compute_shared_offset(std::span<const std::uint64_t> distroots,
                                    const SegmentPlan& plan);

struct PathLabel {
  unsigned index_width = 0;
  std::uint64_t index = 0;
  unsigned segment_bits = 0;
  unsigned packed_bits = 0;
  std::uint64_t packed = 0;

  // d_i + x with segment `index` restored as zeros.
  std::uint64_t value() const;
};

// Drops segment i from an L-bit value.
PathLabel make_path_label(std::uint64_t value, std::uint64_t index, unsigned index_width,
                          const SegmentPlan& plan);

BitString write_path_label(const PathLabel& label);
PathLabel read_path_label(const BitString& bits);

// One label per node of a path rooted at an end. With `weight_bound` set the
// plan uses the family diameter (k - 1) * weight_bound instead of the
// instance's own length.
std::vector<BitString> encode_path(const Tree& t, std::optional<Weight> weight_bound = {});

std::uint64_t decode_path(const PathLabel& a, const PathLabel& b);
std::uint64_t decode_path(const BitString& a, const BitString& b);

}  // namespace treelabel
