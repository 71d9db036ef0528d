#pragma once

// (1+eps)-stretch distance labels for unweighted trees.
//
// Instead of exact light-ancestor distances a label carries a threshold
// string S: walking up from v, a 0 for every proper light ancestor and a 1
// each time the distance passes the next threshold t_0 < t_1 < ... . The
// number of 1s before a light ancestor's 0 is the index j of the first
// threshold t_j >= dist(v, a), and t_j <= (1 + eps/2) dist(v, a).
//
// Thresholds are generated greedily in integers: t_0 = 1 and
// t_{j+1} = max(t_j + 1, floor((1 + eps/2)(t_j + 1))), the largest value that
// keeps every distance in (t_j, t_{j+1}] within the stretch.
//
// Layout: [eps: 16-bit fixed point][varint B][distroot: B bits][NCA][varint |S|][S]

#include <cstdint>
#include <vector>

#include "treelabel/bitcodec.hpp"
#include "treelabel/nca.hpp"
#include "treelabel/tree.hpp"

namespace treelabel {

// eps is stored as floor(eps * 2^12) in 16 bits.
inline constexpr unsigned kEpsFractionBits = 12;

// Rounds eps down to the label's fixed-point grid; throws std::invalid_argument
// if eps <= 0 or the result is not representable.
std::uint16_t quantize_eps(double eps);
double eps_value(std::uint16_t eps_fixed) noexcept;

class ThresholdSchedule {
 public:
  explicit ThresholdSchedule(std::uint16_t eps_fixed);

  std::uint64_t threshold(std::size_t j);
  // Smallest j with threshold(j) >= d.
  std::size_t index_for(std::uint64_t d);

 private:
  std::uint16_t eps_fixed_;
  std::vector<std::uint64_t> t_;
};

struct ApproxLabel {
  std::uint16_t eps_fixed = 0;
  unsigned log_n = 1;
  std::uint64_t distroot = 0;
  NcaSublabel nca;
  BitString thresholds;  // S
};

std::vector<ApproxLabel> build_approx_labels(const Tree& t, double eps);
std::vector<BitString> encode_approx(const Tree& t, double eps);

BitString write_approx_label(const ApproxLabel& label);
ApproxLabel read_approx_label(const BitString& bits);

std::uint64_t decode_approx(const ApproxLabel& a, const ApproxLabel& b);
std::uint64_t decode_approx(const BitString& a, const BitString& b);

}  // namespace treelabel
