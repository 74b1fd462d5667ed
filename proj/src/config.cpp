#include "ccsim/config.hpp"

#include <stdexcept>

#include "ccsim/rng.hpp"

namespace ccsim {

SystemConfig::SystemConfig(int users, int files, Rat cache, std::int64_t bits, Rat prob)
    : user_count(users),
      file_count(files),
      cache_size(std::move(cache)),
      file_bits(bits),
      inactivity_prob(std::move(prob)) {
  if (user_count < 2) throw std::invalid_argument("SystemConfig: need at least two users");
  if (user_count > 63) throw std::invalid_argument("SystemConfig: at most 63 users supported");
  if (file_count <= user_count)
    throw std::invalid_argument("SystemConfig: worst-case demands need more files than users");
  if (cache_size < 0 || cache_size > file_count)
    throw std::invalid_argument("SystemConfig: cache size must be in [0, N]");
  if (file_bits <= 0) throw std::invalid_argument("SystemConfig: file size must be positive");
  if (inactivity_prob < 0 || inactivity_prob > 1)
    throw std::invalid_argument("SystemConfig: inactivity probability must be in [0,1]");
}

InactivityProfile::InactivityProfile(int user_count, UserSet inactive)
    : user_count_(user_count), inactive_(inactive) {
  if (user_count < 1 || user_count > 63)
    throw std::invalid_argument("InactivityProfile: bad user count");
  if (!is_subset(inactive, full_set(user_count)))
    throw std::invalid_argument("InactivityProfile: inactive set out of range");
}

InactivityProfile InactivityProfile::last_users(int user_count, int inactive_count) {
  if (inactive_count < 0 || inactive_count > user_count)
    throw std::invalid_argument("InactivityProfile: bad inactive count");
  UserSet inactive = 0;
  for (int u = user_count - inactive_count + 1; u <= user_count; ++u)
    inactive = set_with(inactive, u);
  return {user_count, inactive};
}

InactivityProfile sample_inactivity(const SystemConfig& config, std::uint64_t seed) {
  Rng rng(mix64(seed ^ 0x696e616374ull));
  UserSet inactive = 0;
  for (int u = 1; u <= config.user_count; ++u)
    if (rng.bernoulli(config.inactivity_prob)) inactive = set_with(inactive, u);
  return {config.user_count, inactive};
}

DemandVector::DemandVector(int user_count, std::vector<std::optional<int>> requests)
    : requests_(std::move(requests)) {
  if (static_cast<int>(requests_.size()) != user_count)
    throw std::invalid_argument("DemandVector: size mismatch");
}

DemandVector worst_case_demand(const SystemConfig& config, const InactivityProfile& profile) {
  if (profile.user_count() != config.user_count)
    throw std::invalid_argument("worst_case_demand: profile/config mismatch");
  int active = profile.active_count();
  if (config.file_count < active)
    throw std::invalid_argument("worst_case_demand: fewer files than active users");
  std::vector<std::optional<int>> requests(config.user_count);
  int next_file = 1;
  for (int u = 1; u <= config.user_count; ++u)
    if (profile.is_active(u)) requests[u - 1] = next_file++;
  return {config.user_count, std::move(requests)};
}

FileLibrary::FileLibrary(int file_count, std::int64_t file_bits, std::uint64_t seed)
    : file_count_(file_count), file_bits_(file_bits), seed_(seed) {
  if (file_count < 1 || file_bits < 1) throw std::invalid_argument("FileLibrary: bad sizes");
}

BitBuffer FileLibrary::file(int n) const {
  if (n < 1 || n > file_count_) throw std::out_of_range("FileLibrary: no such file");
  BitBuffer out(file_bits_);
  Rng rng = Rng::substream(seed_, static_cast<std::uint64_t>(n), 0);
  for (std::int64_t i = 0; i < file_bits_; i += 64) {
    std::uint64_t word = rng.next_u64();
    for (std::int64_t j = i; j < std::min(file_bits_, i + 64); ++j)
      if ((word >> (j - i)) & 1u) out.set(j, true);
  }
  return out;
}

}  // namespace ccsim
