#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "auh/error.hpp"

namespace auh {

/// MSB-first packed bits.
class BitBuffer {
 public:
  BitBuffer() = default;
  BitBuffer(std::vector<std::uint8_t> bytes, std::size_t bit_count) : bytes_(std::move(bytes)), bits_(bit_count) {
    if (bit_count > bytes_.size() * 8) throw TruncatedStream("bit count exceeds buffer size");
  }

  static BitBuffer from_bits(std::initializer_list<int> bits) {
    BitBuffer b;
    for (int bit : bits) b.push(bit != 0);
    return b;
  }

  void push(bool bit) {
    if (bits_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80U >> (bits_ % 8));
    ++bits_;
  }

  void push_run(bool bit, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) push(bit);
  }

  [[nodiscard]] bool operator[](std::size_t i) const { return ((bytes_[i / 8] >> (7 - i % 8)) & 1U) != 0; }
  [[nodiscard]] std::size_t size() const { return bits_; }
  [[nodiscard]] std::span<const std::uint8_t> bytes() const { return bytes_; }

  friend bool operator==(const BitBuffer&, const BitBuffer&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bits_ = 0;
};

namespace detail {

inline void check_alphabet(std::size_t n) {
  if (n < 2) throw InvalidSymbol("alphabet size must be at least 2, got " + std::to_string(n));
}

}  // namespace detail

/// Anti-uniform codeword of symbol i (1-based): i-1 ones then a zero, except
/// symbol n which is n-1 ones.
inline void append_codeword(BitBuffer& out, std::uint32_t symbol, std::size_t n) {
  if (symbol < 1 || symbol > n) {
    throw InvalidSymbol("symbol " + std::to_string(symbol) + " outside 1.." + std::to_string(n));
  }
  out.push_run(true, symbol - 1);
  if (symbol < n) out.push(false);
}

inline BitBuffer encode(std::span<const std::uint32_t> symbols, std::size_t n) {
  detail::check_alphabet(n);
  BitBuffer out;
  for (auto s : symbols) append_codeword(out, s, n);
  return out;
}

namespace detail {

// Reads one codeword starting at `pos`; advances pos.
inline std::uint32_t read_codeword(const BitBuffer& bits, std::size_t& pos, std::size_t n) {
  std::uint32_t ones = 0;
  while (true) {
    if (ones + 1 == n) return static_cast<std::uint32_t>(n);
    if (pos >= bits.size()) throw TruncatedStream("bitstream ends inside a codeword at bit " + std::to_string(pos));
    if (!bits[pos++]) return ones + 1;
    ++ones;
  }
}

}  // namespace detail

/// Decodes every bit of the buffer.
inline std::vector<std::uint32_t> decode(const BitBuffer& bits, std::size_t n) {
  detail::check_alphabet(n);
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos < bits.size()) out.push_back(detail::read_codeword(bits, pos, n));
  return out;
}

/// Decodes exactly `count` symbols, ignoring any trailing padding.
inline std::vector<std::uint32_t> decode(const BitBuffer& bits, std::size_t n, std::uint64_t count) {
  detail::check_alphabet(n);
  std::vector<std::uint32_t> out;
  // Every codeword is at least one bit long.
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(count, bits.size())));
  std::size_t pos = 0;
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(detail::read_codeword(bits, pos, n));
  return out;
}

inline constexpr std::size_t kStreamHeaderBytes = 8;

/// Stream file: 8-byte little-endian symbol count, then the packed bits.
inline std::vector<std::uint8_t> pack_stream(const BitBuffer& bits, std::uint64_t symbol_count) {
  std::vector<std::uint8_t> out;
  out.reserve(kStreamHeaderBytes + bits.bytes().size());
  for (std::size_t i = 0; i < kStreamHeaderBytes; ++i) out.push_back(static_cast<std::uint8_t>(symbol_count >> (8 * i)));
  out.insert(out.end(), bits.bytes().begin(), bits.bytes().end());
  return out;
}

inline std::vector<std::uint8_t> encode_stream(std::span<const std::uint32_t> symbols, std::size_t n) {
  return pack_stream(encode(symbols, n), symbols.size());
}

inline std::vector<std::uint32_t> decode_stream(std::span<const std::uint8_t> data, std::size_t n) {
  if (data.size() < kStreamHeaderBytes) throw TruncatedStream("stream shorter than its 8-byte header");
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < kStreamHeaderBytes; ++i) count |= static_cast<std::uint64_t>(data[i]) << (8 * i);
  std::vector<std::uint8_t> payload(data.begin() + kStreamHeaderBytes, data.end());
  const std::size_t bit_count = payload.size() * 8;
  return decode(BitBuffer(std::move(payload), bit_count), n, count);
}

}  // namespace auh
