#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccsim/bitbuffer.hpp"
#include "ccsim/rational.hpp"
#include "ccsim/subsets.hpp"

namespace ccsim {

// K users with per-user cache size M (in file units), N equally sized and
// equally popular files of F bits, per-user inactivity probability p. Worst
// case demands require N > K.
struct SystemConfig {
  int user_count;          // K
  int file_count;          // N
  Rat cache_size;          // M, 0 <= M <= N, may be non-integer
  std::int64_t file_bits;  // F
  Rat inactivity_prob;     // p in [0,1]

  SystemConfig(int users, int files, Rat cache, std::int64_t bits, Rat prob = Rat(0));

  /// t = KM/N, the number of users holding each fragment when integral.
  Rat replication() const { return Rat(user_count) * cache_size / file_count; }
};

// The realized set of users that make no request at delivery time.
class InactivityProfile {
 public:
  InactivityProfile(int user_count, UserSet inactive);

  static InactivityProfile none(int user_count) { return {user_count, 0}; }
  /// Deterministic profile with the last `inactive_count` users inactive.
  static InactivityProfile last_users(int user_count, int inactive_count);

  int user_count() const { return user_count_; }
  int inactive_count() const { return set_size(inactive_); }   // I
  int active_count() const { return user_count_ - inactive_count(); }  // J
  UserSet inactive_set() const { return inactive_; }
  UserSet active_set() const { return full_set(user_count_) & ~inactive_; }
  bool is_active(int user) const { return !set_contains(inactive_, user); }

 private:
  int user_count_;
  UserSet inactive_;
};

/// Each user goes inactive independently with probability p; same seed, same
/// profile. I = 0 and I = K can occur and are legal simulation inputs.
InactivityProfile sample_inactivity(const SystemConfig& config, std::uint64_t seed);

// Per-user request: a file index for active users, nothing for inactive ones.
class DemandVector {
 public:
  DemandVector(int user_count, std::vector<std::optional<int>> requests);

  int user_count() const { return static_cast<int>(requests_.size()); }
  std::optional<int> request(int user) const { return requests_[user - 1]; }
  bool is_active(int user) const { return requests_[user - 1].has_value(); }

 private:
  std::vector<std::optional<int>> requests_;
};

/// Worst-case demand: active users get pairwise distinct files 1..J in
/// ascending user order. Throws when N < J.
DemandVector worst_case_demand(const SystemConfig& config, const InactivityProfile& profile);

// Deterministic synthetic file contents for end-to-end simulation; file n is
// a fixed pseudo-random bit string of F bits derived from (seed, n).
class FileLibrary {
 public:
  FileLibrary(int file_count, std::int64_t file_bits, std::uint64_t seed = 0x66696c6573ull);

  int file_count() const { return file_count_; }
  std::int64_t file_bits() const { return file_bits_; }
  BitBuffer file(int n) const;

 private:
  int file_count_;
  std::int64_t file_bits_;
  std::uint64_t seed_;
};

}  // namespace ccsim
