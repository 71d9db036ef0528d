#pragma once

// NCA sublabels.
//
// A node's sublabel records, for every heavy path on its root path, where the
// path is left (a position code) and through which light child (a light
// code), followed by the node's own position on its last heavy path. Both
// kinds of code come from a weight-balanced alphabetic code, so their lengths
// telescope to O(log n) over the whole root path; each code carries a length
// header, which adds O(log log n) per field.
//
// Comparing two sublabels segment by segment finds the heavy path on which
// the nodes separate, which is all the distance decoders need: the relation
// of the two nodes, which side (if any) leaves the NCA through a light child,
// and light-node counts on either side of the NCA.

#include <cstdint>
#include <span>
#include <vector>

#include "treelabel/bitcodec.hpp"
#include "treelabel/hld.hpp"
#include "treelabel/tree.hpp"

namespace treelabel {

struct Codeword {
  std::uint64_t bits = 0;
  std::uint8_t length = 0;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

// Lexicographic comparison of the bit strings: negative, zero or positive.
// For two words of one prefix-free code this matches the order of the
// symbols they encode.
int compare(const Codeword& a, const Codeword& b) noexcept;

// Order-preserving prefix-free code (Gilbert-Moore construction): symbol j
// of weight w_j out of total W gets ceil(log2(W / w_j)) + 1 bits. All weights
// must be positive.
std::vector<Codeword> alphabetic_code(std::span<const std::uint64_t> weights);

struct NcaSegment {
  Codeword offset;  // position on the current heavy path where the root path leaves it
  Codeword light;   // which light child it leaves through

  friend bool operator==(const NcaSegment&, const NcaSegment&) = default;
};

struct NcaSublabel {
  std::vector<NcaSegment> segments;  // one per light ancestor below the root
  Codeword trailer;                  // position on the node's own heavy path

  friend bool operator==(const NcaSublabel&, const NcaSublabel&) = default;
};

enum class NcaRelation { kEqual, kUAncestorOfV, kVAncestorOfU, kDivergent };
enum class LightSide { kNone, kU, kV, kBoth };

struct NcaInfo {
  NcaRelation relation = NcaRelation::kEqual;
  LightSide light_side = LightSide::kNone;
  std::uint32_t lights_root_to_w = 0;  // light nodes on T[root, w]
  std::uint32_t lights_w_to_u = 0;     // light nodes on T(w, u]
  std::uint32_t lights_w_to_v = 0;     // light nodes on T(w, v]
};

// Precomputes position and light-child codes for every heavy path of a tree.
class NcaEncoder {
 public:
  explicit NcaEncoder(const HldIndex& idx);

  NcaSublabel encode(NodeId v) const;
  const Codeword& position_code(NodeId v) const { return position_code_[v]; }
  const Codeword& light_code(NodeId v) const { return light_code_[v]; }

 private:
  const HldIndex* idx_;
  std::vector<Codeword> position_code_;
  std::vector<Codeword> light_code_;
};

NcaSublabel encode_nca(const Tree& t, const HldIndex& idx, NodeId v);
NcaInfo decode_nca(const NcaSublabel& u, const NcaSublabel& v);

void write_nca(BitString& s, const NcaSublabel& label);
NcaSublabel read_nca(BitReader& c);
std::size_t nca_bits(const NcaSublabel& label) noexcept;

}  // namespace treelabel
