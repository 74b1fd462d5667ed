#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccsim/placement.hpp"

namespace ccsim {

// One coded piece XORed into a packet: `piece` identifies which part of
// `file` user `user` is being served (a fragment label for centralized
// schemes, an exact owner set for decentralized ones).
struct PacketContribution {
  int user;
  int file;
  UserSet piece;
};

// One multicast transmission. Contributors are always active users; shorter
// pieces are zero-padded to the payload length.
struct Packet {
  UserSet group;  // multicast label
  BitBuffer payload;
  std::vector<PacketContribution> contributors;
};

class Transcript {
 public:
  void append(Packet packet) {
    total_bits_ += packet.payload.size();
    packets_.push_back(std::move(packet));
  }

  const std::vector<Packet>& packets() const { return packets_; }
  std::int64_t total_bits() const { return total_bits_; }
  Rat load(std::int64_t file_bits) const { return make_rat(total_bits_, file_bits); }

 private:
  std::vector<Packet> packets_;
  std::int64_t total_bits_ = 0;
};

/// Total payload bits divided by the file size, exact.
Rat measured_load(const Transcript& transcript, std::int64_t file_bits);

/// One line per packet, `S=<ids>;len=<bits>;contrib=<user:file:label,...>`,
/// then `sha256=<hex>` over the concatenated packed payloads.
std::string transcript_dump(const Transcript& transcript);

// Raised by decode when the transcript cannot complete a file; names the
// pieces that no packet served (always a delivery bug, never user error).
struct ReconstructionError : std::runtime_error {
  ReconstructionError(int user, std::vector<UserSet> missing);
  std::vector<UserSet> missing_pieces;
};

/// Coded delivery for a fixed-cardinality or weighted plan. Per group l,
/// packets run over label sets of size l+1 (all of them when l+1 > I, only
/// those not inside the inactive set when l+1 <= I), each XORing the
/// fragments W(d_k, S\{k}) over the active members k of S. Groups are
/// emitted in descending cardinality, labels in colex order.
Transcript centralized_delivery(const CentralizedCaches& caches, const FileLibrary& library,
                                const DemandVector& demand, const InactivityProfile& profile);

/// Recovers the user's requested file bit-exactly from its cache and the
/// transcript. Centralized path.
BitBuffer decode(int user, const CentralizedCaches& caches, const FileLibrary& library,
                 const Transcript& transcript, const DemandVector& demand);

// Exact owner bookkeeping for one file under decentralized placement:
// positions grouped by the exact set of users caching them.
class OwnerPartition {
 public:
  static OwnerPartition build(const DecentralizedCaches& caches, int file);

  /// Ascending positions cached by exactly `owners`; null when empty.
  const std::vector<std::int64_t>* piece(UserSet owners) const {
    auto it = groups_.find(owners);
    return it == groups_.end() ? nullptr : &it->second;
  }

  std::int64_t piece_bits(UserSet owners) const {
    const auto* p = piece(owners);
    return p ? static_cast<std::int64_t>(p->size()) : 0;
  }

 private:
  std::unordered_map<UserSet, std::vector<std::int64_t>> groups_;
};

// Shared per-instance state for decentralized delivery and decoding: owner
// partitions (public metadata) and server-side file buffers for files
// 1..max_file. Reusable across inactivity realizations.
struct DecentralizedSession {
  const DecentralizedCaches* caches = nullptr;
  const FileLibrary* library = nullptr;
  std::map<int, OwnerPartition> partitions;
  std::map<int, BitBuffer> files;

  static DecentralizedSession build(const DecentralizedCaches& caches,
                                    const FileLibrary& library, int max_file);
};

/// Loops s = K..1 over all user sets S (skipping S inside the inactive set),
/// XORs the zero-padded exclusive pieces V(k, S\{k}) over active k in S.
/// Zero-length packets are suppressed.
Transcript decentralized_delivery_i(const DecentralizedSession& session,
                                    const DemandVector& demand,
                                    const InactivityProfile& profile);

/// Same transmitted bits as delivery I, regrouped: loops s = J..1 over sets
/// of active users S' and serves each S' with one packet per inactive
/// remainder U, labeled by S'. Enumerates exactly the sets S'∪U of delivery
/// I, so total bits and served pieces match it packet for packet.
Transcript decentralized_delivery_ii(const DecentralizedSession& session,
                                     const DemandVector& demand,
                                     const InactivityProfile& profile);

/// Decentralized decode; pads and truncates pieces around the XOR.
BitBuffer decode_decentralized(int user, const DecentralizedSession& session,
                               const Transcript& transcript, const DemandVector& demand);

// Convenience wrappers that build a one-shot session.
Transcript decentralized_delivery_i(const DecentralizedCaches& caches, const FileLibrary& library,
                                    const DemandVector& demand, const InactivityProfile& profile);
Transcript decentralized_delivery_ii(const DecentralizedCaches& caches, const FileLibrary& library,
                                     const DemandVector& demand, const InactivityProfile& profile);
BitBuffer decode_decentralized(int user, const DecentralizedCaches& caches,
                               const FileLibrary& library, const Transcript& transcript,
                               const DemandVector& demand);

}  // namespace ccsim
