#pragma once

// Scheme dispatch and the label file format:
//   {"scheme": "exact", "params": {...}, "labels": [{"bits": N, "hex": "..."}, ...]}
// A label file is everything a query needs; it holds no tree.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treelabel/bitcodec.hpp"
#include "treelabel/tree.hpp"

namespace treelabel {

enum class Scheme { kExact, kApprox, kPath, kCaterpillar };

std::string_view scheme_name(Scheme s) noexcept;
// Throws std::invalid_argument on an unknown name.
Scheme parse_scheme(std::string_view name);

struct SchemeParams {
  double eps = 0.5;                   // approx only
  std::optional<Weight> weight_bound;  // path only
};

std::vector<BitString> encode_with(Scheme s, const Tree& t, const SchemeParams& params);
std::uint64_t decode_with(Scheme s, const BitString& a, const BitString& b);

// Cached per-label parse for decoding many pairs.
class LabelDecoder {
 public:
  LabelDecoder(Scheme s, const std::vector<BitString>& labels);
  ~LabelDecoder();
  LabelDecoder(LabelDecoder&&) noexcept;
  LabelDecoder& operator=(LabelDecoder&&) noexcept;

  std::size_t size() const noexcept;
  std::uint64_t distance(NodeId u, NodeId v) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct LabelFile {
  Scheme scheme = Scheme::kExact;
  SchemeParams params;
  std::vector<BitString> labels;

  std::string to_json() const;
  static LabelFile from_json(std::string_view text);  // throws ParseError
};

std::size_t max_bits(const std::vector<BitString>& labels) noexcept;
double mean_bits(const std::vector<BitString>& labels) noexcept;

}  // namespace treelabel
