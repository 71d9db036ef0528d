#pragma once

// Bit strings and the field codecs every label format is assembled from.
//
// Fields are written most-significant bit first, so two equal-width fields
// compare lexicographically exactly as their numeric values compare.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treelabel/errors.hpp"

namespace treelabel {

// Number of bits in the binary expansion of v (0 for v == 0).
constexpr unsigned bit_width(std::uint64_t v) noexcept {
  return static_cast<unsigned>(std::bit_width(v));
}

// ceil(log2(v)) for v >= 1, clamped below at `floor`.
constexpr unsigned ceil_log2(std::uint64_t v, unsigned floor = 0) noexcept {
  const unsigned r = v <= 1 ? 0u : bit_width(v - 1);
  return r < floor ? floor : r;
}

// floor(log2(v)) for v >= 1.
constexpr unsigned floor_log2(std::uint64_t v) noexcept {
  return v == 0 ? 0u : bit_width(v) - 1;
}

class BitString {
 public:
  BitString() = default;

  // Parses a string of '0'/'1' characters.
  static BitString from_string(std::string_view bits);
  // Inverse of to_hex(): `bits` gives the number of meaningful bits.
  static BitString from_hex(std::string_view hex, std::size_t bits);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t i) const noexcept {
    return (words_[i >> 6] >> (63 - (i & 63))) & 1u;
  }

  void push_back(bool bit);
  // Appends the low `width` bits of `value`, most significant first.
  // Caller guarantees value < 2^width.
  void append_bits(std::uint64_t value, unsigned width);
  void append(const BitString& other);

  // Bits [pos, pos + width) as an integer; width <= 64.
  std::uint64_t extract(std::size_t pos, unsigned width) const noexcept;

  std::string to_string() const;
  // Lowercase hex of the bits, zero padded on the right to a byte boundary.
  std::string to_hex() const;

  friend bool operator==(const BitString& a, const BitString& b) noexcept;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

// Sequential reader over a BitString. Reads past the end throw DecodeError.
class BitReader {
 public:
  explicit BitReader(const BitString& bits, std::size_t position = 0);

  std::size_t position() const noexcept { return position_; }
  std::size_t remaining() const noexcept { return bits_->size() - position_; }
  bool at_end() const noexcept { return position_ == bits_->size(); }

  bool read_bit();
  std::uint64_t read(unsigned width);

 private:
  const BitString* bits_;
  std::size_t position_;
};

void write_fixed(BitString& s, std::uint64_t value, unsigned width);
std::uint64_t read_fixed(BitReader& c, unsigned width);

// Two-level length header: z zeros, a one, then `width` in z bits, where
// z = bit_width(width). A width of 0 is the single bit "1".
void write_width_header(BitString& s, unsigned width);
unsigned read_width_header(BitReader& c);

// Header announcing the payload width needed for k (k >= 1).
void write_unary_header(BitString& s, std::uint64_t k);
unsigned read_unary_header(BitReader& c);

// Self-delimiting integer: width header followed by bit_width(v) payload bits.
void write_varint(BitString& s, std::uint64_t v);
std::uint64_t read_varint(BitReader& c);
// Bits write_varint would emit for v.
unsigned varint_size(std::uint64_t v) noexcept;
unsigned width_header_size(unsigned width) noexcept;

}  // namespace treelabel
