#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccsim {

// A set of users out of [1..K], K <= 63, as a bitmask: bit (u-1) set <=> user u
// is in the set. Fragment labels and multicast groups are all UserSets.
using UserSet = std::uint64_t;

constexpr UserSet kEmptySet = 0;

inline UserSet full_set(int user_count) {
  return user_count == 0 ? 0 : (~std::uint64_t{0} >> (64 - user_count));
}

inline bool set_contains(UserSet set, int user) { return (set >> (user - 1)) & 1u; }

inline UserSet set_with(UserSet set, int user) { return set | (UserSet{1} << (user - 1)); }

inline UserSet set_without(UserSet set, int user) { return set & ~(UserSet{1} << (user - 1)); }

inline int set_size(UserSet set) { return __builtin_popcountll(set); }

inline bool is_subset(UserSet inner, UserSet outer) { return (inner & ~outer) == 0; }

/// Members in ascending order, 1-based.
std::vector<int> set_members(UserSet set);

/// "1.2.5" for {1,2,5}; "-" for the empty set.
std::string set_to_string(UserSet set);

/// Position of `set` in the colexicographic order of all |set|-subsets.
std::uint64_t colex_rank(UserSet set);

/// All subsets of [1..K] of the given cardinality, in colexicographic order.
/// Materializes the whole list; use for_each_subset_colex for large counts.
std::vector<UserSet> subsets_of_size(int user_count, int cardinality);

/// Visits size-`cardinality` subsets of [1..K] in colex order without
/// materializing them. Visitor: void(UserSet).
template <typename Visitor>
void for_each_subset_colex(int user_count, int cardinality, Visitor&& visit) {
  if (cardinality < 0 || cardinality > user_count) return;
  if (cardinality == 0) {
    visit(kEmptySet);
    return;
  }
  std::vector<int> pos(cardinality);  // 0-based ascending element positions
  for (int i = 0; i < cardinality; ++i) pos[i] = i;
  while (true) {
    UserSet set = 0;
    for (int p : pos) set |= UserSet{1} << p;
    visit(set);
    int i = 0;
    while (i + 1 < cardinality && pos[i] + 1 == pos[i + 1]) {
      pos[i] = i;
      ++i;
    }
    ++pos[i];
    if (pos[cardinality - 1] >= user_count) return;
  }
}

/// Visits subsets of an arbitrary ground set in colex order w.r.t. the
/// ascending member list of `ground`.
template <typename Visitor>
void for_each_subset_of_colex(UserSet ground, int cardinality, Visitor&& visit) {
  std::vector<int> members = set_members(ground);
  for_each_subset_colex(static_cast<int>(members.size()), cardinality, [&](UserSet index_set) {
    UserSet set = 0;
    for (int i : set_members(index_set)) set = set_with(set, members[i - 1]);
    visit(set);
  });
}

}  // namespace ccsim
