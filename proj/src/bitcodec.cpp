#include "treelabel/bitcodec.hpp"

#include <string>

namespace treelabel {

BitString BitString::from_string(std::string_view bits) {
  BitString s;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw DecodeError("bit string contains a character other than 0/1");
    }
    s.push_back(ch == '1');
  }
  return s;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bits) {
  if (hex.size() != 2 * ((bits + 7) / 8)) {
    throw DecodeError("hex length " + std::to_string(hex.size()) +
                      " does not match bit length " + std::to_string(bits));
  }
  BitString s;
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char ch = hex[i];
    unsigned nibble;
    if (ch >= '0' && ch <= '9') {
      nibble = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      nibble = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw DecodeError("invalid hex digit in label");
    }
    for (int b = 3; b >= 0; --b) {
      const bool bit = (nibble >> b) & 1u;
      if (s.size() < bits) {
        s.push_back(bit);
      } else if (bit) {
        throw DecodeError("non-zero padding bits in hex label");
      }
    }
  }
  return s;
}

void BitString::push_back(bool bit) {
  if ((size_ & 63) == 0) words_.push_back(0);
  if (bit) words_.back() |= std::uint64_t{1} << (63 - (size_ & 63));
  ++size_;
}

void BitString::append_bits(std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) push_back((value >> i) & 1u);
}

void BitString::append(const BitString& other) {
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

std::uint64_t BitString::extract(std::size_t pos, unsigned width) const noexcept {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | (*this)[pos + i];
  return v;
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back((*this)[i] ? '1' : '0');
  return out;
}

std::string BitString::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t bytes = (size_ + 7) / 8;
  std::string out;
  out.reserve(2 * bytes);
  for (std::size_t nib = 0; nib < 2 * bytes; ++nib) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * nib + b;
      v = (v << 1) | (i < size_ && (*this)[i] ? 1u : 0u);
    }
    out.push_back(kDigits[v]);
  }
  return out;
}

bool operator==(const BitString& a, const BitString& b) noexcept {
  // Unused tail bits are always zero, so word comparison is exact.
  return a.size_ == b.size_ && a.words_ == b.words_;
}

BitReader::BitReader(const BitString& bits, std::size_t position)
    : bits_(&bits), position_(position) {
  if (position > bits.size()) throw DecodeError("cursor beyond end of bit string");
}

bool BitReader::read_bit() {
  if (position_ >= bits_->size()) throw DecodeError("read past end of label");
  return (*bits_)[position_++];
}

std::uint64_t BitReader::read(unsigned width) {
  if (width > 64) throw DecodeError("field wider than 64 bits");
  if (width > remaining()) throw DecodeError("read past end of label");
  const std::uint64_t v = bits_->extract(position_, width);
  position_ += width;
  return v;
}

void write_fixed(BitString& s, std::uint64_t value, unsigned width) {
  if (width > 64 || (width < 64 && (value >> width) != 0)) {
    throw EncodeError("value " + std::to_string(value) + " does not fit in " +
                      std::to_string(width) + " bits");
  }
  s.append_bits(value, width);
}

std::uint64_t read_fixed(BitReader& c, unsigned width) { return c.read(width); }

void write_width_header(BitString& s, unsigned width) {
  const unsigned z = bit_width(width);
  for (unsigned i = 0; i < z; ++i) s.push_back(false);
  s.push_back(true);
  s.append_bits(width, z);
}

unsigned read_width_header(BitReader& c) {
  unsigned z = 0;
  while (!c.read_bit()) {
    // A width field of more than 7 bits would announce payloads > 127 bits.
    if (++z > 7) throw DecodeError("malformed length header");
  }
  return static_cast<unsigned>(c.read(z));
}

void write_unary_header(BitString& s, std::uint64_t k) {
  if (k == 0) throw EncodeError("unary header requires k >= 1");
  write_width_header(s, bit_width(k));
}

unsigned read_unary_header(BitReader& c) { return read_width_header(c); }

void write_varint(BitString& s, std::uint64_t v) {
  const unsigned w = bit_width(v);
  write_width_header(s, w);
  s.append_bits(v, w);
}

std::uint64_t read_varint(BitReader& c) {
  const unsigned w = read_width_header(c);
  if (w > 64) throw DecodeError("varint wider than 64 bits");
  return c.read(w);
}

unsigned width_header_size(unsigned width) noexcept { return 2 * bit_width(width) + 1; }

unsigned varint_size(std::uint64_t v) noexcept {
  const unsigned w = bit_width(v);
  return width_header_size(w) + w;
}

}  // namespace treelabel
