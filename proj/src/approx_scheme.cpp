#include "treelabel/approx_scheme.hpp"

#include <cmath>
#include <stdexcept>

#include "treelabel/hld.hpp"

namespace treelabel {

std::uint16_t quantize_eps(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double scaled = std::floor(eps * (1u << kEpsFractionBits));
  if (scaled < 1.0) throw std::invalid_argument("eps below the fixed-point resolution");
  if (scaled > 65535.0) throw std::invalid_argument("eps too large for the 16-bit field");
  return static_cast<std::uint16_t>(scaled);
}

double eps_value(std::uint16_t eps_fixed) noexcept {
  return static_cast<double>(eps_fixed) / (1u << kEpsFractionBits);
}

ThresholdSchedule::ThresholdSchedule(std::uint16_t eps_fixed) : eps_fixed_(eps_fixed), t_{1} {
  if (eps_fixed == 0) throw std::invalid_argument("eps must be positive");
}

std::uint64_t ThresholdSchedule::threshold(std::size_t j) {
  // Internal stretch is eps/2, i.e. eps_fixed / 2^13.
  constexpr std::uint64_t kScale = std::uint64_t{1} << (kEpsFractionBits + 1);
  while (t_.size() <= j) {
    const std::uint64_t next = t_.back() + 1;
    using u128 = unsigned __int128;
    const auto grown = static_cast<std::uint64_t>(u128{next} * (kScale + eps_fixed_) / kScale);
    t_.push_back(grown > next ? grown : next);
  }
  return t_[j];
}

std::size_t ThresholdSchedule::index_for(std::uint64_t d) {
  std::size_t j = 0;
  while (threshold(j) < d) ++j;
  return j;
}

std::vector<ApproxLabel> build_approx_labels(const Tree& t, double eps) {
  const std::uint16_t eps_fixed = quantize_eps(eps);
  if (!t.unit_weighted()) throw std::invalid_argument("approx scheme requires an unweighted tree");
  const HldIndex idx(t);
  const NcaEncoder nca(idx);
  const auto depth = all_depths(t);
  const unsigned log_n = ceil_log2(t.size(), 1);
  ThresholdSchedule schedule(eps_fixed);

  std::vector<ApproxLabel> labels(t.size());
  for (NodeId v = 0; v < t.size(); ++v) {
    ApproxLabel& label = labels[v];
    label.eps_fixed = eps_fixed;
    label.log_n = log_n;
    label.distroot = depth[v];
    label.nca = nca.encode(v);
    const auto lights = idx.light_ancestors(v);
    std::size_t ones = 0;
    // Bottom-up over proper light ancestors.
    for (std::size_t i = lights.size(); i-- > 0;) {
      if (lights[i] == v) continue;
      const std::size_t j = schedule.index_for(depth[v] - depth[lights[i]]);
      for (; ones < j; ++ones) label.thresholds.push_back(true);
      label.thresholds.push_back(false);
    }
  }
  return labels;
}

BitString write_approx_label(const ApproxLabel& label) {
  BitString s;
  write_fixed(s, label.eps_fixed, 16);
  write_varint(s, label.log_n);
  write_fixed(s, label.distroot, label.log_n);
  write_nca(s, label.nca);
  write_varint(s, label.thresholds.size());
  s.append(label.thresholds);
  return s;
}

std::vector<BitString> encode_approx(const Tree& t, double eps) {
  const auto labels = build_approx_labels(t, eps);
  std::vector<BitString> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(write_approx_label(l));
  return out;
}

ApproxLabel read_approx_label(const BitString& bits) {
  BitReader c(bits);
  ApproxLabel label;
  label.eps_fixed = static_cast<std::uint16_t>(c.read(16));
  if (label.eps_fixed == 0) throw DecodeError("approx label: zero eps");
  const std::uint64_t log_n = read_varint(c);
  if (log_n == 0 || log_n > 32) throw DecodeError("approx label: bad log n field");
  label.log_n = static_cast<unsigned>(log_n);
  label.distroot = c.read(label.log_n);
  label.nca = read_nca(c);
  const std::uint64_t s_len = read_varint(c);
  if (s_len != c.remaining()) throw DecodeError("approx label: threshold string length mismatch");
  for (std::uint64_t i = 0; i < s_len; ++i) label.thresholds.push_back(c.read_bit());
  return label;
}

namespace {

// Approximation of dist(x, a) for x's light ancestor a at root-to-node index
// `idx`, read from S. Returns 0 when a is x itself.
std::uint64_t approx_light_distance(const ApproxLabel& l, std::size_t idx) {
  std::vector<std::size_t> ones_before;  // per 0 of S, bottom-up
  std::size_t ones = 0;
  for (std::size_t i = 0; i < l.thresholds.size(); ++i) {
    if (l.thresholds[i]) {
      ++ones;
    } else {
      ones_before.push_back(ones);
    }
  }
  const std::size_t proper = ones_before.size();
  const std::size_t lights = l.nca.segments.size() + 1;
  if (idx >= lights || proper + 1 < lights || proper > lights) {
    throw DecodeError("approx label: inconsistent light counts");
  }
  if (idx >= proper) return 0;  // a is the node itself
  ThresholdSchedule schedule(l.eps_fixed);
  return schedule.threshold(ones_before[proper - 1 - idx]);
}

}  // namespace

std::uint64_t decode_approx(const ApproxLabel& a, const ApproxLabel& b) {
  if (a.eps_fixed != b.eps_fixed) throw DecodeError("labels were encoded with different eps");
  if (a.log_n != b.log_n) throw DecodeError("labels come from trees of different sizes");
  const NcaInfo info = decode_nca(a.nca, b.nca);
  const auto ra = static_cast<std::int64_t>(a.distroot);
  const auto rb = static_cast<std::int64_t>(b.distroot);
  const std::size_t idx = info.lights_root_to_w;

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
    case NcaRelation::kDivergent: {
      switch (info.light_side) {
        case LightSide::kV: {
          const auto alpha = static_cast<std::int64_t>(approx_light_distance(b, idx)) + 1;
          d = ra - rb + 2 * alpha;
          break;
        }
        case LightSide::kU: {
          const auto alpha = static_cast<std::int64_t>(approx_light_distance(a, idx)) + 1;
          d = rb - ra + 2 * alpha;
          break;
        }
        case LightSide::kBoth:
          d = static_cast<std::int64_t>(approx_light_distance(a, idx) +
                                        approx_light_distance(b, idx)) + 2;
          break;
        case LightSide::kNone:
          throw DecodeError("divergent pair without a light side");
      }
      break;
    }
  }
  if (d < 0) throw DecodeError("labels are inconsistent (negative distance)");
  return static_cast<std::uint64_t>(d);
}

std::uint64_t decode_approx(const BitString& a, const BitString& b) {
  return decode_approx(read_approx_label(a), read_approx_label(b));
}

}  // namespace treelabel
