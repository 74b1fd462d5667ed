#include "ccsim/delivery.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <set>

namespace ccsim {

namespace {

void require_consistent(const DemandVector& demand, const InactivityProfile& profile) {
  if (demand.user_count() != profile.user_count())
    throw std::invalid_argument("delivery: demand/profile user count mismatch");
  for (int u = 1; u <= demand.user_count(); ++u)
    if (demand.is_active(u) != profile.is_active(u))
      throw std::invalid_argument("delivery: demand/profile mismatch at user " +
                                  std::to_string(u));
}

std::string sha256_hex(const std::vector<std::uint8_t>& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

// Server-side fragment access for centralized schemes.
BitBuffer plan_fragment(const SubpacketizationPlan& plan, const BitBuffer& file_buf,
                        FragmentLabel label) {
  return file_buf.slice(plan.fragment_offset(label), plan.fragment_bits(label.cardinality()));
}

std::map<int, BitBuffer> fetch_requested_files(const FileLibrary& library,
                                               const DemandVector& demand) {
  std::map<int, BitBuffer> files;
  for (int u = 1; u <= demand.user_count(); ++u)
    if (auto f = demand.request(u); f && !files.count(*f)) files.emplace(*f, library.file(*f));
  return files;
}

}  // namespace

Rat measured_load(const Transcript& transcript, std::int64_t file_bits) {
  if (file_bits <= 0) throw std::invalid_argument("measured_load: bad file size");
  return make_rat(transcript.total_bits(), file_bits);
}

std::string transcript_dump(const Transcript& transcript) {
  std::string out;
  std::vector<std::uint8_t> all_bytes;
  for (const Packet& p : transcript.packets()) {
    out += "S=" + set_to_string(p.group) + ";len=" + std::to_string(p.payload.size()) +
           ";contrib=";
    bool first = true;
    for (const PacketContribution& c : p.contributors) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(c.user) + ":" + std::to_string(c.file) + ":" + set_to_string(c.piece);
    }
    out += '\n';
    auto bytes = p.payload.packed_bytes();
    all_bytes.insert(all_bytes.end(), bytes.begin(), bytes.end());
  }
  out += "sha256=" + sha256_hex(all_bytes) + "\n";
  return out;
}

ReconstructionError::ReconstructionError(int user, std::vector<UserSet> missing)
    : std::runtime_error([&] {
        std::string what = "user " + std::to_string(user) + " cannot reconstruct pieces:";
        for (UserSet s : missing) what += " " + set_to_string(s);
        return what;
      }()),
      missing_pieces(std::move(missing)) {}

Transcript centralized_delivery(const CentralizedCaches& caches, const FileLibrary& library,
                                const DemandVector& demand, const InactivityProfile& profile) {
  require_consistent(demand, profile);
  const SubpacketizationPlan& plan = caches.plan();
  int K = plan.user_count();
  int I = profile.inactive_count();
  auto files = fetch_requested_files(library, demand);

  Transcript transcript;
  const auto& groups = plan.groups();
  for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
    int l = g->cardinality;
    if (l == K) continue;  // the full-set fragment is cached everywhere
    bool restrict_to_mixed = (l + 1 <= I);
    for_each_subset_colex(K, l + 1, [&](UserSet s) {
      if (restrict_to_mixed && is_subset(s, profile.inactive_set())) return;
      Packet packet;
      packet.group = s;
      for (int k : set_members(s & profile.active_set())) {
        int file = *demand.request(k);
        FragmentLabel label{set_without(s, k)};
        packet.contributors.push_back({k, file, label.members});
        BitBuffer frag = plan_fragment(plan, files.at(file), label);
        if (packet.payload.size() == 0) packet.payload = BitBuffer(frag.size());
        packet.payload.xor_with(frag);
      }
      if (packet.contributors.empty()) return;  // nothing to serve for this set
      transcript.append(std::move(packet));
    });
  }
  return transcript;
}

BitBuffer decode(int user, const CentralizedCaches& caches, const FileLibrary& library,
                 const Transcript& transcript, const DemandVector& demand) {
  if (!demand.is_active(user))
    throw std::invalid_argument("decode: user " + std::to_string(user) + " made no request");
  const SubpacketizationPlan& plan = caches.plan();
  int wanted = *demand.request(user);

  // Whole-file buffers; reads below stay within fragments the user caches.
  std::map<int, BitBuffer> files = fetch_requested_files(library, demand);
  if (!files.count(wanted)) files.emplace(wanted, library.file(wanted));
  auto cached_piece = [&](int reader, int file, FragmentLabel label) {
    if (!caches.stores(reader, label))
      throw std::logic_error("decode: fragment not in this user's cache");
    return plan_fragment(plan, files.at(file), label);
  };

  std::unordered_map<UserSet, const Packet*> by_group;
  for (const Packet& p : transcript.packets()) by_group.emplace(p.group, &p);

  BitBuffer out(plan.file_bits());
  std::vector<UserSet> missing;
  for (const auto& g : plan.groups()) {
    for_each_subset_colex(plan.user_count(), g.cardinality, [&](UserSet label_set) {
      FragmentLabel label{label_set};
      if (set_contains(label_set, user)) {
        out.overwrite(plan.fragment_offset(label), cached_piece(user, wanted, label));
        return;
      }
      auto it = by_group.find(set_with(label_set, user));
      if (it == by_group.end()) {
        missing.push_back(label_set);
        return;
      }
      BitBuffer piece = it->second->payload;
      for (const PacketContribution& c : it->second->contributors) {
        if (c.user == user) continue;
        piece.xor_with(cached_piece(user, c.file, FragmentLabel{c.piece}));
      }
      out.overwrite(plan.fragment_offset(label), piece);
    });
  }
  if (!missing.empty()) throw ReconstructionError(user, std::move(missing));
  return out;
}

OwnerPartition OwnerPartition::build(const DecentralizedCaches& caches, int file) {
  OwnerPartition partition;
  std::vector<BitBuffer> masks;
  masks.reserve(caches.user_count());
  for (int u = 1; u <= caches.user_count(); ++u) masks.push_back(caches.mask(u, file));
  for (std::int64_t pos = 0; pos < caches.file_bits(); ++pos) {
    UserSet owners = 0;
    for (int u = 1; u <= caches.user_count(); ++u)
      if (masks[u - 1].get(pos)) owners = set_with(owners, u);
    partition.groups_[owners].push_back(pos);
  }
  return partition;
}

DecentralizedSession DecentralizedSession::build(const DecentralizedCaches& caches,
                                                 const FileLibrary& library, int max_file) {
  DecentralizedSession session;
  session.caches = &caches;
  session.library = &library;
  for (int n = 1; n <= max_file; ++n) {
    session.partitions.emplace(n, OwnerPartition::build(caches, n));
    session.files.emplace(n, library.file(n));
  }
  return session;
}

namespace {

// Builds the packet for user set `enumerated`, labeled `label`; returns false
// when there is nothing to send (no active member or all pieces empty).
bool build_piece_packet(const DecentralizedSession& session, const DemandVector& demand,
                        const InactivityProfile& profile, UserSet enumerated, UserSet label,
                        Packet& packet) {
  UserSet active_members = enumerated & profile.active_set();
  if (active_members == 0) return false;
  std::int64_t len = 0;
  for (int k : set_members(active_members)) {
    UserSet owners = set_without(enumerated, k);
    len = std::max(len, session.partitions.at(*demand.request(k)).piece_bits(owners));
  }
  if (len == 0) return false;
  packet.group = label;
  packet.payload = BitBuffer(len);
  for (int k : set_members(active_members)) {
    int file = *demand.request(k);
    UserSet owners = set_without(enumerated, k);
    packet.contributors.push_back({k, file, owners});
    if (const auto* positions = session.partitions.at(file).piece(owners))
      packet.payload.xor_with(session.files.at(file).gather(*positions));
  }
  return true;
}

void require_session(const DecentralizedSession& session, const DemandVector& demand) {
  for (int u = 1; u <= demand.user_count(); ++u)
    if (auto f = demand.request(u); f && !session.partitions.count(*f))
      throw std::invalid_argument("decentralized session does not cover file " +
                                  std::to_string(*f));
}

}  // namespace

Transcript decentralized_delivery_i(const DecentralizedSession& session,
                                    const DemandVector& demand,
                                    const InactivityProfile& profile) {
  require_consistent(demand, profile);
  require_session(session, demand);
  int K = profile.user_count();
  Transcript transcript;
  for (int s = K; s >= 1; --s) {
    for_each_subset_colex(K, s, [&](UserSet set) {
      if (is_subset(set, profile.inactive_set())) return;
      Packet packet;
      if (build_piece_packet(session, demand, profile, set, set, packet))
        transcript.append(std::move(packet));
    });
  }
  return transcript;
}

Transcript decentralized_delivery_ii(const DecentralizedSession& session,
                                     const DemandVector& demand,
                                     const InactivityProfile& profile) {
  require_consistent(demand, profile);
  require_session(session, demand);
  Transcript transcript;
  UserSet active = profile.active_set();
  UserSet inactive = profile.inactive_set();
  for (int s = profile.active_count(); s >= 1; --s) {
    for_each_subset_of_colex(active, s, [&](UserSet group) {
      for (int u = profile.inactive_count(); u >= 0; --u) {
        for_each_subset_of_colex(inactive, u, [&](UserSet remainder) {
          Packet packet;
          if (build_piece_packet(session, demand, profile, group | remainder, group, packet))
            transcript.append(std::move(packet));
        });
      }
    });
  }
  return transcript;
}

BitBuffer decode_decentralized(int user, const DecentralizedSession& session,
                               const Transcript& transcript, const DemandVector& demand) {
  if (!demand.is_active(user))
    throw std::invalid_argument("decode: user " + std::to_string(user) + " made no request");
  require_session(session, demand);
  const DecentralizedCaches& caches = *session.caches;
  int wanted = *demand.request(user);
  std::int64_t F = caches.file_bits();

  BitBuffer out(F);
  {  // start from the user's own cached copy of the wanted file
    BitBuffer mask = caches.mask(user, wanted);
    const BitBuffer& buf = session.files.at(wanted);
    for (std::int64_t pos = 0; pos < F; ++pos)
      if (mask.get(pos)) out.set(pos, buf.get(pos));
  }

  const OwnerPartition& wanted_partition = session.partitions.at(wanted);
  std::set<UserSet> covered;
  for (const Packet& packet : transcript.packets()) {
    const PacketContribution* mine = nullptr;
    for (const PacketContribution& c : packet.contributors)
      if (c.user == user) mine = &c;
    if (!mine) continue;
    BitBuffer piece = packet.payload;
    for (const PacketContribution& c : packet.contributors) {
      if (c.user == user) continue;
      if (!set_contains(c.piece, user))
        throw std::logic_error("decode: packet XORs a piece this user does not cache");
      if (const auto* positions = session.partitions.at(c.file).piece(c.piece))
        piece.xor_with(session.files.at(c.file).gather(*positions));
    }
    const auto* positions = wanted_partition.piece(mine->piece);
    if (!positions) continue;  // zero-length share of this packet
    piece.truncate(static_cast<std::int64_t>(positions->size()));
    out.scatter(*positions, piece);
    covered.insert(mine->piece);
  }

  std::vector<UserSet> missing;
  for (int size = 0; size < caches.user_count(); ++size) {
    for_each_subset_colex(caches.user_count(), size, [&](UserSet owners) {
      if (set_contains(owners, user)) return;
      if (wanted_partition.piece_bits(owners) == 0) return;
      if (!covered.count(owners)) missing.push_back(owners);
    });
  }
  if (!missing.empty()) throw ReconstructionError(user, std::move(missing));
  return out;
}

Transcript decentralized_delivery_i(const DecentralizedCaches& caches, const FileLibrary& library,
                                    const DemandVector& demand,
                                    const InactivityProfile& profile) {
  auto session = DecentralizedSession::build(caches, library, caches.file_count());
  return decentralized_delivery_i(session, demand, profile);
}

Transcript decentralized_delivery_ii(const DecentralizedCaches& caches,
                                     const FileLibrary& library, const DemandVector& demand,
                                     const InactivityProfile& profile) {
  auto session = DecentralizedSession::build(caches, library, caches.file_count());
  return decentralized_delivery_ii(session, demand, profile);
}

BitBuffer decode_decentralized(int user, const DecentralizedCaches& caches,
                               const FileLibrary& library, const Transcript& transcript,
                               const DemandVector& demand) {
  auto session = DecentralizedSession::build(caches, library, caches.file_count());
  return decode_decentralized(user, session, transcript, demand);
}

}  // namespace ccsim
