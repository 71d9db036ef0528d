#include "treelabel/path_scheme.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace treelabel {

namespace {

constexpr std::uint64_t low_mask(unsigned bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

constexpr std::uint64_t shl(std::uint64_t v, unsigned s) noexcept { return s >= 64 ? 0 : v << s; }
constexpr std::uint64_t shr(std::uint64_t v, unsigned s) noexcept { return s >= 64 ? 0 : v >> s; }

}  // namespace

SegmentPlan SegmentPlan::for_diameter(std::size_t k, std::uint64_t diameter) {
  if (diameter == 0) diameter = 1;
  return with_value_bits(k, ceil_log2(2 * diameter, 1));
}

SegmentPlan SegmentPlan::with_value_bits(std::size_t k, unsigned value_bits) {
  if (k == 0) throw std::invalid_argument("SegmentPlan: k must be positive");
  if (value_bits == 0 || value_bits > 63) {
    throw std::invalid_argument("SegmentPlan: value width must be in [1, 63]");
  }
  SegmentPlan plan;
  plan.k = k;
  plan.value_bits = value_bits;
  plan.total_bits = value_bits + 1;
  plan.segment_bits = static_cast<unsigned>(value_bits / k);
  return plan;
}

std::uint64_t zero_segment(std::size_t i, std::uint64_t y, const SegmentPlan& plan) {
  assert(i < plan.k);
  const unsigned l = plan.segment_bits;
  if (l == 0) return 0;
  const auto shift = static_cast<unsigned>(i * l);
  const std::uint64_t s = shr(y, shift) & low_mask(l);
  if (s == 0) return 0;
  return shl((std::uint64_t{1} << l) - s, shift);
}

std::uint64_t compute_shared_offset(std::span<const std::uint64_t> distroots,
                                    const SegmentPlan& plan) {
  if (distroots.size() > plan.k) throw std::invalid_argument("more distances than segments");
  std::uint64_t x = 0;
  for (std::size_t i = 1; i < distroots.size(); ++i) {
    x += zero_segment(i, x + distroots[i], plan);
  }
  // Every d_i + x must still fit below the carry bit.
  for (auto d : distroots) {
    if (shr(d + x, plan.total_bits) != 0) throw EncodeError("shared offset overflowed the plan");
  }
  return x;
}

std::uint64_t PathLabel::value() const {
  const auto shift = static_cast<unsigned>(index * segment_bits);
  const std::uint64_t low = packed & low_mask(shift);
  const std::uint64_t high = shr(packed, shift);
  return shl(high, shift + segment_bits) | low;
}

PathLabel make_path_label(std::uint64_t value, std::uint64_t index, unsigned index_width,
                          const SegmentPlan& plan) {
  const unsigned l = plan.segment_bits;
  const auto shift = static_cast<unsigned>(index * l);
  if (l > 0 && (shr(value, shift) & low_mask(l)) != 0) {
    throw EncodeError("segment " + std::to_string(index) + " of stored value is not zero");
  }
  PathLabel label;
  label.index_width = index_width;
  label.index = index;
  label.segment_bits = l;
  label.packed_bits = plan.total_bits - l;
  label.packed = (shl(shr(value, shift + l), shift)) | (value & low_mask(shift));
  return label;
}

BitString write_path_label(const PathLabel& label) {
  BitString s;
  write_width_header(s, label.index_width);
  write_fixed(s, label.index, label.index_width);
  write_varint(s, label.segment_bits);
  write_fixed(s, label.packed, label.packed_bits);
  return s;
}

PathLabel read_path_label(const BitString& bits) {
  BitReader c(bits);
  PathLabel label;
  label.index_width = read_width_header(c);
  label.index = c.read(label.index_width);
  const std::uint64_t l = read_varint(c);
  if (l > 63) throw DecodeError("segment width out of range");
  label.segment_bits = static_cast<unsigned>(l);
  if (c.remaining() > 64 || c.remaining() == 0) throw DecodeError("packed value width out of range");
  label.packed_bits = static_cast<unsigned>(c.remaining());
  const std::uint64_t total = label.packed_bits + label.segment_bits;
  if (total > 64 || (label.index + 1) * label.segment_bits > total) {
    throw DecodeError("path label segment index out of range");
  }
  label.packed = c.read(label.packed_bits);
  return label;
}

std::vector<BitString> encode_path(const Tree& t, std::optional<Weight> weight_bound) {
  if (!is_rooted_path(t)) throw std::invalid_argument("path scheme requires a path rooted at an end");
  const std::size_t k = t.size();
  std::vector<NodeId> order(t.top_down().begin(), t.top_down().end());
  std::vector<std::uint64_t> d(k, 0);
  for (std::size_t i = 1; i < k; ++i) d[i] = d[i - 1] + t.weight(order[i]);

  std::uint64_t diameter = d.back();
  if (weight_bound) {
    const std::uint64_t bound = (k - 1) * *weight_bound;
    if (bound < diameter) throw std::invalid_argument("edge weight exceeds the declared bound");
    diameter = bound;
  }
  const auto plan = SegmentPlan::for_diameter(k, diameter);
  const std::uint64_t x = compute_shared_offset(d, plan);
  const unsigned index_width = ceil_log2(k);

  std::vector<BitString> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[order[i]] = write_path_label(make_path_label(d[i] + x, i, index_width, plan));
  }
  return labels;
}

std::uint64_t decode_path(const PathLabel& a, const PathLabel& b) {
  const std::uint64_t va = a.value();
  const std::uint64_t vb = b.value();
  return va > vb ? va - vb : vb - va;
}

std::uint64_t decode_path(const BitString& a, const BitString& b) {
  return decode_path(read_path_label(a), read_path_label(b));
}

}  // namespace treelabel
