#include "treelabel/nca.hpp"

#include <algorithm>
#include <stdexcept>

namespace treelabel {

int compare(const Codeword& a, const Codeword& b) noexcept {
  const unsigned m = std::min(a.length, b.length);
  const std::uint64_t pa = m == 0 ? 0 : a.bits >> (a.length - m);
  const std::uint64_t pb = m == 0 ? 0 : b.bits >> (b.length - m);
  if (pa != pb) return pa < pb ? -1 : 1;
  if (a.length == b.length) return 0;
  return a.length < b.length ? -1 : 1;
}

std::vector<Codeword> alphabetic_code(std::span<const std::uint64_t> weights) {
  std::uint64_t total = 0;
  for (auto w : weights) {
    if (w == 0) throw std::invalid_argument("alphabetic_code: weights must be positive");
    total += w;
  }
  std::vector<Codeword> code;
  code.reserve(weights.size());
  std::uint64_t cumulative = 0;
  for (auto w : weights) {
    unsigned e = 0;
    while ((w << e) < total) ++e;
    const unsigned len = e + 1;
    // floor(midpoint / total * 2^len), midpoint = cumulative + w / 2.
    using u128 = unsigned __int128;
    const u128 twice_mid = u128{2} * cumulative + w;
    const auto bits = static_cast<std::uint64_t>((twice_mid << len) / (u128{2} * total));
    code.push_back({bits, static_cast<std::uint8_t>(len)});
    cumulative += w;
  }
  return code;
}

NcaEncoder::NcaEncoder(const HldIndex& idx)
    : idx_(&idx), position_code_(idx.size()), light_code_(idx.size()) {
  std::vector<std::uint64_t> weights;
  for (NodeId v = 0; v < idx.size(); ++v) {
    if (idx.is_light(v)) {
      // Position j on a heavy path weighs the nodes hanging off it there.
      const auto path = idx.heavy_path(v);
      weights.clear();
      for (std::size_t j = 0; j < path.size(); ++j) {
        const std::uint64_t below = j + 1 < path.size() ? idx.subtree_size(path[j + 1]) : 0;
        weights.push_back(idx.subtree_size(path[j]) - below);
      }
      const auto code = alphabetic_code(weights);
      for (std::size_t j = 0; j < path.size(); ++j) position_code_[path[j]] = code[j];
    }
    const auto kids = idx.light_children(v);
    if (!kids.empty()) {
      weights.clear();
      for (NodeId c : kids) weights.push_back(idx.subtree_size(c));
      const auto code = alphabetic_code(weights);
      for (std::size_t j = 0; j < kids.size(); ++j) light_code_[kids[j]] = code[j];
    }
  }
}

NcaSublabel NcaEncoder::encode(NodeId v) const {
  NcaSublabel label;
  const auto lights = idx_->light_ancestors(v);
  label.segments.reserve(lights.size() - 1);
  for (std::size_t i = 1; i < lights.size(); ++i) {
    const NodeId a = lights[i];
    label.segments.push_back({position_code_[idx_->parent(a)], light_code_[a]});
  }
  label.trailer = position_code_[v];
  return label;
}

NcaSublabel encode_nca(const Tree& /*t*/, const HldIndex& idx, NodeId v) {
  return NcaEncoder(idx).encode(v);
}

NcaInfo decode_nca(const NcaSublabel& u, const NcaSublabel& v) {
  const std::size_t nu = u.segments.size();
  const std::size_t nv = v.segments.size();
  std::size_t m = 0;
  while (m < nu && m < nv && u.segments[m] == v.segments[m]) ++m;

  NcaInfo info;
  info.lights_root_to_w = static_cast<std::uint32_t>(m + 1);
  info.lights_w_to_u = static_cast<std::uint32_t>(nu - m);
  info.lights_w_to_v = static_cast<std::uint32_t>(nv - m);

  const bool u_stops = m == nu;
  const bool v_stops = m == nv;
  const Codeword& pu = u_stops ? u.trailer : u.segments[m].offset;
  const Codeword& pv = v_stops ? v.trailer : v.segments[m].offset;
  const int c = compare(pu, pv);

  if (u_stops && v_stops) {
    info.relation = c == 0 ? NcaRelation::kEqual
                   : c < 0 ? NcaRelation::kUAncestorOfV
                           : NcaRelation::kVAncestorOfU;
  } else if (u_stops) {
    if (c <= 0) {
      info.relation = NcaRelation::kUAncestorOfV;
    } else {
      info.relation = NcaRelation::kDivergent;
      info.light_side = LightSide::kV;
    }
  } else if (v_stops) {
    if (c >= 0) {
      info.relation = NcaRelation::kVAncestorOfU;
    } else {
      info.relation = NcaRelation::kDivergent;
      info.light_side = LightSide::kU;
    }
  } else {
    info.relation = NcaRelation::kDivergent;
    info.light_side = c == 0 ? LightSide::kBoth : c < 0 ? LightSide::kU : LightSide::kV;
  }
  return info;
}

namespace {

void write_code(BitString& s, const Codeword& w) {
  write_width_header(s, w.length);
  s.append_bits(w.bits, w.length);
}

Codeword read_code(BitReader& c) {
  const unsigned len = read_width_header(c);
  if (len == 0 || len > 64) throw DecodeError("malformed NCA code length");
  return {c.read(len), static_cast<std::uint8_t>(len)};
}

std::size_t code_bits(const Codeword& w) { return width_header_size(w.length) + w.length; }

}  // namespace

void write_nca(BitString& s, const NcaSublabel& label) {
  write_varint(s, label.segments.size());
  for (const auto& seg : label.segments) {
    write_code(s, seg.offset);
    write_code(s, seg.light);
  }
  write_code(s, label.trailer);
}

NcaSublabel read_nca(BitReader& c) {
  const std::uint64_t count = read_varint(c);
  if (count > 64) throw DecodeError("implausible NCA segment count");
  NcaSublabel label;
  label.segments.resize(count);
  for (auto& seg : label.segments) {
    seg.offset = read_code(c);
    seg.light = read_code(c);
  }
  label.trailer = read_code(c);
  return label;
}

std::size_t nca_bits(const NcaSublabel& label) noexcept {
  std::size_t bits = varint_size(label.segments.size()) + code_bits(label.trailer);
  for (const auto& seg : label.segments) bits += code_bits(seg.offset) + code_bits(seg.light);
  return bits;
}

}  // namespace treelabel
