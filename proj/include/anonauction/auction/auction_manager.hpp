#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The anonauction Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "anonauction/auction/bid.hpp"
#include "anonauction/error.hpp"
#include "anonauction/registry/bulletin_board.hpp"
#include "anonauction/registry/registration_manager.hpp"
#include "anonauction/ringsig/scheme.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace anonauction::auction {

enum class AuctionPhase
{
  open,
  closed,
  announced,
};

struct AdmissionOptions
{
  /// Each admitted price must exceed the current high price.
  bool monotonic_prices = true;
};

struct WinnerRecord
{
  Bid                  bid;
  std::optional<Point> traced_key;
  std::optional<Bytes> identity;
};

struct AuctionState
{
  std::uint64_t               auction_id    = 0;
  std::uint32_t               current_round = 1;
  AuctionPhase                phase         = AuctionPhase::open;
  std::vector<Bid>            admitted;
  std::uint64_t               high_price = 0;
  std::optional<WinnerRecord> winner;
  /// Admitted bids whose signature failed at winner determination.
  std::vector<std::uint64_t> rejected_seqs;
};

struct AdmitResult
{
  bool          admitted = false;
  std::uint64_t seq      = 0;
  Errc          reason   = Errc::malformed;
  std::string   detail;
};

enum class OpenPurpose
{
  winner,       ///< identify the winner for AM
  repudiation,  ///< the signer denied the bid or crashed; RM evicts them
};

struct OpenResult
{
  std::size_t            ring_position;
  Point                  pub_key;
  Bytes                  identity;
  registry::RecordStatus status;
  bool                   evicted_now = false;
};

/// Winner-announced payload: auction id, winning seq, the winning bid as
/// posted, and the seqs of admitted bids that failed verification.
/// A bid that failed verification at winner determination, pinned by the
/// SHA-256 digest of its posted payload.
struct RejectedBid
{
  std::uint64_t seq;
  Bytes         digest;

  friend bool operator==(RejectedBid const &, RejectedBid const &) = default;
};

/// winner_seq is 0 and bid_payload empty when no bid verified.
struct WinnerAnnouncement
{
  std::uint64_t            auction_id;
  std::uint64_t            winner_seq;
  Bytes                    bid_payload;
  std::vector<RejectedBid> rejected;

  Bytes                     encode() const;
  static WinnerAnnouncement decode(ByteSpan payload);
};

/// The auction manager. Holds the trace key; never shares it.
///
/// Admission performs only structural and bulletin-board checks. Signatures
/// are checked at winner determination, highest price first.
class AuctionManager
{
public:
  AuctionManager(ringsig::SetupResult setup, registry::BulletinBoard &board,
                 AdmissionOptions options = {});

  std::shared_ptr<ringsig::PublicParams const> params() const noexcept
  {
    return params_;
  }

  /// Posts the public parameters to the board (params-published).
  std::uint64_t publish_params();

  void open_auction(std::uint64_t auction_id);
  void advance_round(std::uint64_t auction_id);
  void close_auction(std::uint64_t auction_id);

  AdmitResult admit_bid(Bid bid);

  /// Highest price first, then lowest seq: the first verifying bid wins and
  /// is posted as winner-announced. Requires a closed auction. When nothing
  /// verifies an empty announcement is still posted, then Error(no_valid_bid)
  /// is thrown.
  Bid const &determine_winner(std::uint64_t auction_id);

  /// Traces the signer with the trace key and resolves the identity with the
  /// RM. Errors: not_verified, untraceable, unknown_key.
  OpenResult open_protocol(registry::RegistrationManager &rm, Bid const &bid, OpenPurpose purpose);

  AuctionState const &state(std::uint64_t auction_id) const;

private:
  AuctionState &mutable_state(std::uint64_t auction_id);

  std::shared_ptr<ringsig::PublicParams const> params_;
  ringsig::TraceKey                            trace_key_;
  registry::BulletinBoard                     &board_;
  AdmissionOptions                             options_;
  std::map<std::uint64_t, AuctionState>        auctions_;
  std::set<Bytes>                              seen_digests_;
};

}  // namespace anonauction::auction
