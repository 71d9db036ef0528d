#pragma once

// Exact distance labels for unweighted trees.
//
// A label holds B = ceil(log2 n), distroot(v) in B bits, the NCA sublabel,
// and the distances from v to each of its light ancestors a_1 = root, a_2, ...
// The i-th distance is written in exactly B - (i - 1) bits: a_i roots a
// subtree of at most n / 2^(i-1) nodes, so the list costs at most
// B + (B - 1) + ... + 1 bits.
//
// Decoding: with w = nca(u, v) and v leaving w through a light child a,
//   dist(u, v) = distroot(u) - distroot(v) + 2 (dist(v, a) + 1).

#include <cstdint>
#include <vector>

#include "treelabel/bitcodec.hpp"
#include "treelabel/nca.hpp"
#include "treelabel/tree.hpp"

namespace treelabel {

struct ExactLabel {
  unsigned log_n = 1;  // B
  std::uint64_t distroot = 0;
  NcaSublabel nca;
  std::vector<std::uint64_t> light_distances;  // root-to-node order

  // Bits spent on light_distances.
  std::size_t distance_list_bits() const noexcept;
};

// Width of the i-th (0-based) light-ancestor distance.
constexpr unsigned exact_list_width(unsigned log_n, std::size_t i) noexcept {
  return i > log_n ? 0u : log_n - static_cast<unsigned>(i);
}

std::vector<ExactLabel> build_exact_labels(const Tree& t);
std::vector<BitString> encode_exact(const Tree& t);

BitString write_exact_label(const ExactLabel& label);
ExactLabel read_exact_label(const BitString& bits);

std::uint64_t decode_exact(const ExactLabel& a, const ExactLabel& b);
std::uint64_t decode_exact(const BitString& a, const BitString& b);

}  // namespace treelabel
