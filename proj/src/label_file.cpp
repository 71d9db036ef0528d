#include "treelabel/label_file.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "treelabel/approx_scheme.hpp"
#include "treelabel/caterpillar_scheme.hpp"
#include "treelabel/errors.hpp"
#include "treelabel/exact_scheme.hpp"
#include "treelabel/path_scheme.hpp"

namespace treelabel {

std::string_view scheme_name(Scheme s) noexcept {
  switch (s) {
    case Scheme::kExact: return "exact";
    case Scheme::kApprox: return "approx";
    case Scheme::kPath: return "path";
    case Scheme::kCaterpillar: return "caterpillar";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::kExact, Scheme::kApprox, Scheme::kPath, Scheme::kCaterpillar}) {
    if (scheme_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

std::vector<BitString> encode_with(Scheme s, const Tree& t, const SchemeParams& params) {
  switch (s) {
    case Scheme::kExact: return encode_exact(t);
    case Scheme::kApprox: return encode_approx(t, params.eps);
    case Scheme::kPath: return encode_path(t, params.weight_bound);
    case Scheme::kCaterpillar: return encode_caterpillar(t);
  }
  throw std::invalid_argument("unknown scheme");
}

std::uint64_t decode_with(Scheme s, const BitString& a, const BitString& b) {
  switch (s) {
    case Scheme::kExact: return decode_exact(a, b);
    case Scheme::kApprox: return decode_approx(a, b);
    case Scheme::kPath: return decode_path(a, b);
    case Scheme::kCaterpillar: return decode_caterpillar(a, b);
  }
  throw std::invalid_argument("unknown scheme");
}

struct LabelDecoder::Impl {
  std::variant<std::vector<ExactLabel>, std::vector<ApproxLabel>, std::vector<PathLabel>,
               std::vector<CaterpillarLabel>>
      parsed;
};

namespace {

template <typename L, typename Read>
std::vector<L> parse_all(const std::vector<BitString>& labels, Read read) {
  std::vector<L> out;
  out.reserve(labels.size());
  for (const auto& b : labels) out.push_back(read(b));
  return out;
}

}  // namespace

LabelDecoder::LabelDecoder(Scheme s, const std::vector<BitString>& labels)
    : impl_(std::make_unique<Impl>()) {
  switch (s) {
    case Scheme::kExact:
      impl_->parsed = parse_all<ExactLabel>(labels, read_exact_label);
      break;
    case Scheme::kApprox:
      impl_->parsed = parse_all<ApproxLabel>(labels, read_approx_label);
      break;
    case Scheme::kPath:
      impl_->parsed = parse_all<PathLabel>(labels, read_path_label);
      break;
    case Scheme::kCaterpillar:
      impl_->parsed = parse_all<CaterpillarLabel>(labels, read_caterpillar_label);
      break;
  }
}

LabelDecoder::~LabelDecoder() = default;
LabelDecoder::LabelDecoder(LabelDecoder&&) noexcept = default;
LabelDecoder& LabelDecoder::operator=(LabelDecoder&&) noexcept = default;

std::size_t LabelDecoder::size() const noexcept {
  return std::visit([](const auto& v) { return v.size(); }, impl_->parsed);
}

std::uint64_t LabelDecoder::distance(NodeId u, NodeId v) const {
  return std::visit(
      [&](const auto& labels) -> std::uint64_t {
        if (u >= labels.size() || v >= labels.size()) {
          throw std::out_of_range("node id out of range");
        }
        using L = typename std::decay_t<decltype(labels)>::value_type;
        if constexpr (std::is_same_v<L, ExactLabel>) {
          return decode_exact(labels[u], labels[v]);
        } else if constexpr (std::is_same_v<L, ApproxLabel>) {
          return decode_approx(labels[u], labels[v]);
        } else if constexpr (std::is_same_v<L, PathLabel>) {
          return decode_path(labels[u], labels[v]);
        } else {
          return decode_caterpillar(labels[u], labels[v]);
        }
      },
      impl_->parsed);
}

std::string LabelFile::to_json() const {
  nlohmann::ordered_json doc;
  doc["scheme"] = std::string(scheme_name(scheme));
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  if (scheme == Scheme::kApprox) p["eps"] = params.eps;
  if (scheme == Scheme::kPath && params.weight_bound) p["weight_bound"] = *params.weight_bound;
  doc["params"] = p;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& b : labels) {
    nlohmann::ordered_json e;
    e["bits"] = b.size();
    e["hex"] = b.to_hex();
    arr.push_back(std::move(e));
  }
  doc["labels"] = std::move(arr);
  return doc.dump() + "\n";
}

LabelFile LabelFile::from_json(std::string_view text) {
  LabelFile f;
  try {
    const auto doc = nlohmann::json::parse(text);
    f.scheme = parse_scheme(doc.at("scheme").get<std::string>());
    if (doc.contains("params")) {
      const auto& p = doc.at("params");
      if (p.contains("eps")) f.params.eps = p.at("eps").get<double>();
      if (p.contains("weight_bound")) f.params.weight_bound = p.at("weight_bound").get<Weight>();
    }
    for (const auto& e : doc.at("labels")) {
      f.labels.push_back(
          BitString::from_hex(e.at("hex").get<std::string>(), e.at("bits").get<std::size_t>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("label file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("label file: ") + e.what());
  } catch (const DecodeError& e) {
    throw ParseError(std::string("label file: ") + e.what());
  }
  return f;
}

std::size_t max_bits(const std::vector<BitString>& labels) noexcept {
  std::size_t m = 0;
  for (const auto& b : labels) m = std::max(m, b.size());
  return m;
}

double mean_bits(const std::vector<BitString>& labels) noexcept {
  if (labels.empty()) return 0.0;
  double s = 0;
  for (const auto& b : labels) s += static_cast<double>(b.size());
  return s / static_cast<double>(labels.size());
}

}  // namespace treelabel
