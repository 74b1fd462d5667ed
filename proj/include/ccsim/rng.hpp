#pragma once

#include <cstdint>
#include <stdexcept>

#include "ccsim/rational.hpp"

namespace ccsim {

// splitmix64: fully specified, platform-independent. All simulation
// randomness flows through this so that a seed pins every result.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for a (seed, a, b) triple; used so that per-entity
  /// draws do not depend on how many other entities exist.
  static Rng substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return Rng(mix64(seed + 0x9e3779b97f4a7c15ull * (a + 1)) ^ mix64(b + 0x632be59bd9b4e019ull));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  /// Uniform in [0, n), unbiased via rejection. n > 0.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    while (true) {
      std::uint64_t u = next_u64();
      if (u >= threshold) return u % n;
    }
  }

  /// True with probability exactly p (rational in [0,1], denominator < 2^63);
  /// one draw consumed.
  bool bernoulli(const Rat& p) {
    if (p < 0 || p > 1 || denominator(p) >= (BigInt(1) << 63))
      throw std::invalid_argument("Rng::bernoulli: bad probability");
    std::uint64_t num = numerator(p).convert_to<std::uint64_t>();
    std::uint64_t den = denominator(p).convert_to<std::uint64_t>();
    unsigned __int128 u = next_u64();
    return u * den < (static_cast<unsigned __int128>(num) << 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace ccsim
