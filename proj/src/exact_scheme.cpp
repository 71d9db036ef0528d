#include "treelabel/exact_scheme.hpp"

#include <stdexcept>
#include <string>

#include "treelabel/hld.hpp"

namespace treelabel {

std::size_t ExactLabel::distance_list_bits() const noexcept {
  std::size_t bits = 0;
  for (std::size_t i = 0; i < light_distances.size(); ++i) bits += exact_list_width(log_n, i);
  return bits;
}

std::vector<ExactLabel> build_exact_labels(const Tree& t) {
  if (!t.unit_weighted()) throw std::invalid_argument("exact scheme requires an unweighted tree");
  const HldIndex idx(t);
  const NcaEncoder nca(idx);
  const auto depth = all_depths(t);
  const unsigned log_n = ceil_log2(t.size(), 1);

  std::vector<ExactLabel> labels(t.size());
  for (NodeId v = 0; v < t.size(); ++v) {
    ExactLabel& label = labels[v];
    label.log_n = log_n;
    label.distroot = depth[v];
    label.nca = nca.encode(v);
    const auto lights = idx.light_ancestors(v);
    label.light_distances.reserve(lights.size());
    for (std::size_t i = 0; i < lights.size(); ++i) {
      const std::uint64_t d = depth[v] - depth[lights[i]];
      if (i > log_n || bit_width(d) > exact_list_width(log_n, i)) {
        throw EncodeError("light-ancestor distance " + std::to_string(d) +
                          " exceeds its width at node " + std::to_string(v));
      }
      label.light_distances.push_back(d);
    }
  }
  return labels;
}

BitString write_exact_label(const ExactLabel& label) {
  BitString s;
  write_varint(s, label.log_n);
  write_fixed(s, label.distroot, label.log_n);
  write_nca(s, label.nca);
  for (std::size_t i = 0; i < label.light_distances.size(); ++i) {
    write_fixed(s, label.light_distances[i], exact_list_width(label.log_n, i));
  }
  return s;
}

std::vector<BitString> encode_exact(const Tree& t) {
  const auto labels = build_exact_labels(t);
  std::vector<BitString> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(write_exact_label(l));
  return out;
}

ExactLabel read_exact_label(const BitString& bits) {
  BitReader c(bits);
  ExactLabel label;
  const std::uint64_t log_n = read_varint(c);
  if (log_n == 0 || log_n > 32) throw DecodeError("exact label: bad log n field");
  label.log_n = static_cast<unsigned>(log_n);
  label.distroot = c.read(label.log_n);
  label.nca = read_nca(c);
  const std::size_t count = label.nca.segments.size() + 1;
  if (count > label.log_n + 1) throw DecodeError("exact label: too many light ancestors");
  label.light_distances.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    label.light_distances[i] = c.read(exact_list_width(label.log_n, i));
  }
  if (!c.at_end()) throw DecodeError("exact label: trailing bits");
  return label;
}

std::uint64_t decode_exact(const ExactLabel& a, const ExactLabel& b) {
  if (a.log_n != b.log_n) throw DecodeError("labels come from trees of different sizes");
  const NcaInfo info = decode_nca(a.nca, b.nca);
  const auto ra = static_cast<std::int64_t>(a.distroot);
  const auto rb = static_cast<std::int64_t>(b.distroot);
  const std::size_t idx = info.lights_root_to_w;  // light child of w, 0-based

  auto light_dist = [idx](const ExactLabel& l) -> std::int64_t {
    if (idx >= l.light_distances.size()) throw DecodeError("inconsistent NCA light counts");
    return static_cast<std::int64_t>(l.light_distances[idx]);
  };

  std::int64_t d = 0;
  switch (info.relation) {
    case NcaRelation::kEqual:
      return 0;
    case NcaRelation::kUAncestorOfV:
      d = rb - ra;
      break;
    case NcaRelation::kVAncestorOfU:
      d = ra - rb;
      break;
    case NcaRelation::kDivergent:
      switch (info.light_side) {
        case LightSide::kV:
          d = ra - rb + 2 * (light_dist(b) + 1);
          break;
        case LightSide::kU:
          d = rb - ra + 2 * (light_dist(a) + 1);
          break;
        case LightSide::kBoth:
          d = light_dist(a) + light_dist(b) + 2;
          break;
        case LightSide::kNone:
          throw DecodeError("divergent pair without a light side");
      }
      break;
  }
  if (d < 0) throw DecodeError("labels are inconsistent (negative distance)");
  return static_cast<std::uint64_t>(d);
}

std::uint64_t decode_exact(const BitString& a, const BitString& b) {
  return decode_exact(read_exact_label(a), read_exact_label(b));
}

}  // namespace treelabel
