#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ccsim/config.hpp"
#include "ccsim/rational.hpp"
#include "ccsim/subsets.hpp"

namespace ccsim {

// Label of one file fragment: the set of users that cache it.
struct FragmentLabel {
  UserSet members = kEmptySet;
  int cardinality() const { return set_size(members); }
};

// Per-group weights for multi-cardinality subpacketization: beta[l] is the
// fraction of each file assigned to fragments labeled with l-subsets, so a
// single fragment in group l has alpha(l) = beta[l]/C(K,l) of the file.
class WeightVector {
 public:
  /// weights has K+1 entries (l = 0..K), nonnegative, summing to exactly 1.
  explicit WeightVector(std::vector<Rat> weights);

  static WeightVector degenerate(int user_count, int cardinality);

  int user_count() const { return static_cast<int>(weights_.size()) - 1; }
  const std::vector<Rat>& values() const { return weights_; }
  const Rat& beta(int l) const { return weights_.at(l); }
  Rat alpha(int l) const { return weights_.at(l) / rat_of(binomial(user_count(), l)); }

  /// sum_l l*beta[l]; must stay <= t = KM/N for a feasible placement.
  Rat replication_usage() const;

 private:
  std::vector<Rat> weights_;
};

enum class PlanScheme { FixedCardinality, MultiCardinality };

// Raised when F cannot be split into integral fragments; carries the
// smallest file size that would work.
struct PlanDivisibilityError : std::runtime_error {
  PlanDivisibilityError(const std::string& what, std::int64_t minimal)
      : std::runtime_error(what), minimal_file_bits(minimal) {}
  std::int64_t minimal_file_bits;
};

// How each file is cut into labeled fragments and where each fragment lives
// inside the file: groups in ascending cardinality, labels in colex order
// within a group. Never materializes per-label state, so large K is fine.
class SubpacketizationPlan {
 public:
  struct Group {
    int cardinality;
    std::int64_t fragment_bits;
    std::int64_t offset_bits;  // start of this group inside every file
  };

  static SubpacketizationPlan fixed(int user_count, std::int64_t file_bits, int cardinality);
  static SubpacketizationPlan weighted(int user_count, std::int64_t file_bits,
                                       const WeightVector& weights);

  PlanScheme scheme() const { return scheme_; }
  int user_count() const { return user_count_; }
  std::int64_t file_bits() const { return file_bits_; }
  const std::vector<Group>& groups() const { return groups_; }

  /// The single cardinality of a fixed plan.
  int fixed_cardinality() const;

  bool has_group(int cardinality) const;
  std::int64_t fragment_bits(int cardinality) const;
  std::int64_t fragment_offset(FragmentLabel label) const;

 private:
  SubpacketizationPlan(PlanScheme scheme, int user_count, std::int64_t file_bits,
                       std::vector<Group> groups)
      : scheme_(scheme), user_count_(user_count), file_bits_(file_bits),
        groups_(std::move(groups)) {}

  PlanScheme scheme_;
  int user_count_;
  std::int64_t file_bits_;
  std::vector<Group> groups_;
};

/// Smallest F for which every fragment of a fixed-l plan is a whole number
/// of bits, i.e. C(K,l).
std::int64_t minimal_file_bits(int user_count, int cardinality);

/// Smallest F compatible with a weighted plan: lcm of the denominators of
/// all positive alpha(l).
std::int64_t minimal_file_bits(int user_count, const WeightVector& weights);

// Centralized cache contents are fully determined by the plan: user k stores
// exactly the fragments whose label contains k, for every file.
class CentralizedCaches {
 public:
  CentralizedCaches(SubpacketizationPlan plan, int file_count);

  const SubpacketizationPlan& plan() const { return plan_; }
  int file_count() const { return file_count_; }

  bool stores(int user, FragmentLabel label) const {
    return set_contains(label.members, user);
  }

  /// Fragment payload as seen from a user's cache; throws if the user does
  /// not cache that fragment (bit values only ever come from cached state).
  BitBuffer cached_fragment(int user, int file, FragmentLabel label,
                            const FileLibrary& library) const;

 private:
  SubpacketizationPlan plan_;
  int file_count_;
};

struct CentralizedPlacement {
  SubpacketizationPlan plan;
  CentralizedCaches caches;
};

/// Every file split into C(K,l) equal fragments labeled by l-subsets; user k
/// caches the fragments whose label contains k.
CentralizedPlacement man_placement(const SystemConfig& config, int cardinality);

/// Group l holds C(K,l) fragments of alpha(l)*F bits each; same caching rule.
CentralizedPlacement weighted_placement(const SystemConfig& config, const WeightVector& weights);

// Decentralized caches: each user independently stores floor(MF/N) uniformly
// chosen bit positions of every file. Masks are public metadata; bit values
// come from the cached copy. Masks are recomputed on demand from per
// (user,file) substreams, so contents never depend on how many files exist.
class DecentralizedCaches {
 public:
  DecentralizedCaches(const SystemConfig& config, std::uint64_t seed);

  int user_count() const { return user_count_; }
  int file_count() const { return file_count_; }
  std::int64_t file_bits() const { return file_bits_; }
  std::int64_t bits_per_file() const { return bits_per_file_; }  // floor(MF/N)

  /// Cached-position mask for (user, file); exactly bits_per_file() ones.
  BitBuffer mask(int user, int file) const;

  /// Value of one cached bit; throws if the position is not cached.
  bool cached_bit(int user, int file, std::int64_t position, const FileLibrary& library) const;

 private:
  int user_count_;
  int file_count_;
  std::int64_t file_bits_;
  std::int64_t bits_per_file_;
  std::uint64_t seed_;
};

DecentralizedCaches decentralized_placement(const SystemConfig& config, std::uint64_t seed);

/// Exact cached volume of one user in file units; <= M always.
Rat cache_usage(const SubpacketizationPlan& plan, int file_count, int user);
Rat cache_usage(const DecentralizedCaches& caches, int user);

}  // namespace ccsim
