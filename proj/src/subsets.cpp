#include "ccsim/subsets.hpp"

#include "ccsim/rational.hpp"

namespace ccsim {

std::vector<int> set_members(UserSet set) {
  std::vector<int> members;
  members.reserve(set_size(set));
  while (set) {
    int bit = __builtin_ctzll(set);
    members.push_back(bit + 1);
    set &= set - 1;
  }
  return members;
}

std::string set_to_string(UserSet set) {
  if (set == 0) return "-";
  std::string out;
  for (int u : set_members(set)) {
    if (!out.empty()) out += '.';
    out += std::to_string(u);
  }
  return out;
}

std::uint64_t colex_rank(UserSet set) {
  // Combinadic: rank = sum_i C(e_i, i+1) over 0-based elements e_0 < e_1 < ...
  std::uint64_t rank = 0;
  int i = 1;
  while (set) {
    int bit = __builtin_ctzll(set);
    rank += binomial_u64(bit, i);
    ++i;
    set &= set - 1;
  }
  return rank;
}

std::vector<UserSet> subsets_of_size(int user_count, int cardinality) {
  std::vector<UserSet> out;
  if (cardinality >= 0 && cardinality <= user_count)
    out.reserve(static_cast<std::size_t>(binomial_u64(user_count, cardinality)));
  for_each_subset_colex(user_count, cardinality, [&](UserSet s) { out.push_back(s); });
  return out;
}

}  // namespace ccsim
