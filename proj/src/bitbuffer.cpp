#include "ccsim/bitbuffer.hpp"

#include <stdexcept>

namespace ccsim {

BitBuffer::BitBuffer(std::int64_t bit_count) : bit_count_(bit_count) {
  if (bit_count < 0) throw std::invalid_argument("BitBuffer: negative size");
  words_.assign(static_cast<std::size_t>((bit_count + 63) / 64), 0);
}

void BitBuffer::clear_tail() {
  int tail = static_cast<int>(bit_count_ & 63);
  if (tail != 0 && !words_.empty()) words_.back() &= (~std::uint64_t{0}) >> (64 - tail);
}

void BitBuffer::xor_with(const BitBuffer& other) {
  if (other.bit_count_ > bit_count_) throw std::invalid_argument("xor_with: operand too long");
  for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
}

BitBuffer BitBuffer::slice(std::int64_t offset, std::int64_t length) const {
  if (offset < 0 || length < 0 || offset + length > bit_count_)
    throw std::out_of_range("slice: bad range");
  BitBuffer out(length);
  std::int64_t word_shift = offset >> 6;
  int bit_shift = static_cast<int>(offset & 63);
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    std::uint64_t lo = words_[w + word_shift] >> bit_shift;
    std::uint64_t hi = 0;
    if (bit_shift != 0 && w + word_shift + 1 < words_.size())
      hi = words_[w + word_shift + 1] << (64 - bit_shift);
    out.words_[w] = lo | hi;
  }
  out.clear_tail();
  return out;
}

void BitBuffer::overwrite(std::int64_t offset, const BitBuffer& piece) {
  if (offset < 0 || offset + piece.bit_count_ > bit_count_)
    throw std::out_of_range("overwrite: bad range");
  for (std::int64_t j = 0; j < piece.bit_count_; ++j) set(offset + j, piece.get(j));
}

void BitBuffer::truncate(std::int64_t bit_count) {
  if (bit_count < 0 || bit_count > bit_count_) throw std::invalid_argument("truncate: bad size");
  bit_count_ = bit_count;
  words_.resize(static_cast<std::size_t>((bit_count + 63) / 64));
  clear_tail();
}

BitBuffer BitBuffer::gather(const std::vector<std::int64_t>& positions) const {
  BitBuffer out(static_cast<std::int64_t>(positions.size()));
  for (std::size_t j = 0; j < positions.size(); ++j)
    if (get(positions[j])) out.set(static_cast<std::int64_t>(j), true);
  return out;
}

void BitBuffer::scatter(const std::vector<std::int64_t>& positions, const BitBuffer& piece) {
  if (piece.size() != static_cast<std::int64_t>(positions.size()))
    throw std::invalid_argument("scatter: size mismatch");
  for (std::size_t j = 0; j < positions.size(); ++j)
    set(positions[j], piece.get(static_cast<std::int64_t>(j)));
}

std::vector<std::uint8_t> BitBuffer::packed_bytes() const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>((bit_count_ + 7) / 8), 0);
  for (std::size_t b = 0; b < out.size(); ++b) {
    std::size_t w = b >> 3;
    out[b] = static_cast<std::uint8_t>(words_[w] >> ((b & 7) * 8));
  }
  return out;
}

bool BitBuffer::operator==(const BitBuffer& other) const {
  return bit_count_ == other.bit_count_ && words_ == other.words_;
}

}  // namespace ccsim
