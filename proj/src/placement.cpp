#include "ccsim/placement.hpp"

#include <numeric>

#include "ccsim/rng.hpp"

namespace ccsim {

WeightVector::WeightVector(std::vector<Rat> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw std::invalid_argument("WeightVector: need K+1 entries, K >= 1");
  Rat sum = 0;
  for (const Rat& w : weights_) {
    if (w < 0) throw std::invalid_argument("WeightVector: negative weight");
    sum += w;
  }
  if (sum != 1) throw std::invalid_argument("WeightVector: weights must sum to 1");
}

WeightVector WeightVector::degenerate(int user_count, int cardinality) {
  if (cardinality < 0 || cardinality > user_count)
    throw std::invalid_argument("WeightVector: cardinality out of range");
  std::vector<Rat> weights(user_count + 1, Rat(0));
  weights[cardinality] = 1;
  return WeightVector(std::move(weights));
}

Rat WeightVector::replication_usage() const {
  Rat sum = 0;
  for (int l = 1; l <= user_count(); ++l) sum += Rat(l) * weights_[l];
  return sum;
}

int SubpacketizationPlan::fixed_cardinality() const {
  if (scheme_ != PlanScheme::FixedCardinality)
    throw std::logic_error("fixed_cardinality: not a fixed plan");
  return groups_.front().cardinality;
}

bool SubpacketizationPlan::has_group(int cardinality) const {
  for (const Group& g : groups_)
    if (g.cardinality == cardinality) return true;
  return false;
}

std::int64_t SubpacketizationPlan::fragment_bits(int cardinality) const {
  for (const Group& g : groups_)
    if (g.cardinality == cardinality) return g.fragment_bits;
  throw std::out_of_range("fragment_bits: no such group");
}

std::int64_t SubpacketizationPlan::fragment_offset(FragmentLabel label) const {
  int l = label.cardinality();
  for (const Group& g : groups_)
    if (g.cardinality == l)
      return g.offset_bits + static_cast<std::int64_t>(colex_rank(label.members)) * g.fragment_bits;
  throw std::out_of_range("fragment_offset: label not in plan");
}

std::int64_t minimal_file_bits(int user_count, int cardinality) {
  return to_int64(binomial(user_count, cardinality));
}

std::int64_t minimal_file_bits(int user_count, const WeightVector& weights) {
  BigInt lcm = 1;
  for (int l = 0; l <= user_count; ++l) {
    if (weights.beta(l) == 0) continue;
    BigInt den = denominator(weights.alpha(l));
    lcm = boost::multiprecision::lcm(lcm, den);
  }
  return to_int64(lcm);
}

SubpacketizationPlan SubpacketizationPlan::fixed(int user_count, std::int64_t file_bits,
                                                 int cardinality) {
  if (cardinality < 1 || cardinality > user_count)
    throw std::invalid_argument("fixed plan: cardinality out of range");
  BigInt count = binomial(user_count, cardinality);
  if (file_bits % count != 0) {
    BigInt minimal = count * ((file_bits + count - 1) / count);
    throw PlanDivisibilityError(
        "file size " + std::to_string(file_bits) + " not divisible into " + count.str() +
            " fragments; smallest compatible size is " + minimal.str(),
        to_int64(minimal));
  }
  std::vector<Group> groups{{cardinality, to_int64(BigInt(file_bits) / count), 0}};
  return SubpacketizationPlan(PlanScheme::FixedCardinality, user_count, file_bits,
                              std::move(groups));
}

SubpacketizationPlan SubpacketizationPlan::weighted(int user_count, std::int64_t file_bits,
                                                    const WeightVector& weights) {
  if (weights.user_count() != user_count)
    throw std::invalid_argument("weighted plan: weight length mismatch");
  std::vector<Group> groups;
  std::int64_t offset = 0;
  for (int l = 0; l <= user_count; ++l) {
    if (weights.beta(l) == 0) continue;
    Rat bits = weights.alpha(l) * Rat(file_bits);
    if (!is_integer(bits)) {
      std::int64_t minimal = minimal_file_bits(user_count, weights);
      std::int64_t rounded = ((file_bits + minimal - 1) / minimal) * minimal;
      throw PlanDivisibilityError(
          "file size " + std::to_string(file_bits) +
              " gives a fractional fragment in group " + std::to_string(l) +
              "; smallest compatible size is " + std::to_string(minimal),
          std::max(minimal, rounded));
    }
    std::int64_t frag = to_int64(numerator(bits));
    groups.push_back({l, frag, offset});
    offset += frag * to_int64(binomial(user_count, l));
  }
  if (offset != file_bits) throw std::logic_error("weighted plan: fragments do not cover file");
  return SubpacketizationPlan(PlanScheme::MultiCardinality, user_count, file_bits,
                              std::move(groups));
}

CentralizedCaches::CentralizedCaches(SubpacketizationPlan plan, int file_count)
    : plan_(std::move(plan)), file_count_(file_count) {}

BitBuffer CentralizedCaches::cached_fragment(int user, int file, FragmentLabel label,
                                             const FileLibrary& library) const {
  if (!stores(user, label))
    throw std::logic_error("cached_fragment: user " + std::to_string(user) +
                           " does not cache fragment " + set_to_string(label.members));
  return library.file(file).slice(plan_.fragment_offset(label), plan_.fragment_bits(label.cardinality()));
}

CentralizedPlacement man_placement(const SystemConfig& config, int cardinality) {
  SubpacketizationPlan plan =
      SubpacketizationPlan::fixed(config.user_count, config.file_bits, cardinality);
  CentralizedCaches caches(plan, config.file_count);
  return {std::move(plan), std::move(caches)};
}

CentralizedPlacement weighted_placement(const SystemConfig& config, const WeightVector& weights) {
  if (weights.replication_usage() > config.replication())
    throw std::invalid_argument("weighted_placement: weights exceed cache capacity");
  SubpacketizationPlan plan =
      SubpacketizationPlan::weighted(config.user_count, config.file_bits, weights);
  CentralizedCaches caches(plan, config.file_count);
  return {std::move(plan), std::move(caches)};
}

DecentralizedCaches::DecentralizedCaches(const SystemConfig& config, std::uint64_t seed)
    : user_count_(config.user_count),
      file_count_(config.file_count),
      file_bits_(config.file_bits),
      bits_per_file_(to_int64(floor_rat(config.cache_size * Rat(config.file_bits) /
                                        Rat(config.file_count)))),
      seed_(seed) {}

BitBuffer DecentralizedCaches::mask(int user, int file) const {
  if (user < 1 || user > user_count_ || file < 1 || file > file_count_)
    throw std::out_of_range("DecentralizedCaches::mask");
  BitBuffer out(file_bits_);
  // Floyd's sampling: uniform over all bits_per_file_-subsets of positions.
  Rng rng = Rng::substream(seed_, static_cast<std::uint64_t>(user),
                           static_cast<std::uint64_t>(file));
  for (std::int64_t j = file_bits_ - bits_per_file_; j < file_bits_; ++j) {
    std::int64_t r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j + 1)));
    if (out.get(r))
      out.set(j, true);
    else
      out.set(r, true);
  }
  return out;
}

bool DecentralizedCaches::cached_bit(int user, int file, std::int64_t position,
                                     const FileLibrary& library) const {
  if (!mask(user, file).get(position))
    throw std::logic_error("cached_bit: position not cached at this user");
  return library.file(file).get(position);
}

DecentralizedCaches decentralized_placement(const SystemConfig& config, std::uint64_t seed) {
  return DecentralizedCaches(config, seed);
}

Rat cache_usage(const SubpacketizationPlan& plan, int file_count, int user) {
  if (user < 1 || user > plan.user_count()) throw std::out_of_range("cache_usage: bad user");
  // Per file the user holds C(K-1,l-1) fragments of each group l >= 1.
  Rat total = 0;
  for (const auto& g : plan.groups()) {
    if (g.cardinality == 0) continue;
    total += rat_of(binomial(plan.user_count() - 1, g.cardinality - 1)) * Rat(g.fragment_bits);
  }
  return Rat(file_count) * total / Rat(plan.file_bits());
}

Rat cache_usage(const DecentralizedCaches& caches, int user) {
  if (user < 1 || user > caches.user_count()) throw std::out_of_range("cache_usage: bad user");
  return Rat(caches.file_count()) * Rat(caches.bits_per_file()) / Rat(caches.file_bits());
}

}  // namespace ccsim
