#pragma once

#include <cstdint>
#include <vector>

namespace ccsim {

// Payloads are bit strings: fragment boundaries land on arbitrary bit
// offsets, so byte-granular storage would not do. Bit i lives in word i/64
// at position i%64; tail bits of the last word are kept zero.
class BitBuffer {
 public:
  BitBuffer() = default;
  explicit BitBuffer(std::int64_t bit_count);

  std::int64_t size() const { return bit_count_; }
  bool empty() const { return bit_count_ == 0; }

  bool get(std::int64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::int64_t i, bool value) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  /// XOR `other` into the front of this buffer; other.size() <= size()
  /// (shorter operands act as if zero-padded).
  void xor_with(const BitBuffer& other);

  /// Bits [offset, offset+length) as a new buffer.
  BitBuffer slice(std::int64_t offset, std::int64_t length) const;

  /// Copies `piece` into bits [offset, offset+piece.size()).
  void overwrite(std::int64_t offset, const BitBuffer& piece);

  /// Keeps the first bit_count bits (bit_count <= size()).
  void truncate(std::int64_t bit_count);

  /// Bits at the given ascending positions, packed into a new buffer.
  BitBuffer gather(const std::vector<std::int64_t>& positions) const;

  /// Inverse of gather: bit j goes to positions[j].
  void scatter(const std::vector<std::int64_t>& positions, const BitBuffer& piece);

  /// Packed little-endian bytes (LSB-first within each byte), tail zero-padded.
  std::vector<std::uint8_t> packed_bytes() const;

  bool operator==(const BitBuffer& other) const;

 private:
  std::int64_t bit_count_ = 0;
  std::vector<std::uint64_t> words_;

  void clear_tail();
};

}  // namespace ccsim
