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

#include "anonauction/auction/auction_manager.hpp"

#include "anonauction/group/hash.hpp"

#include <algorithm>
#include <numeric>

namespace anonauction::auction {

namespace {

constexpr std::size_t kDigestBytes = 32;

}  // namespace

Bytes WinnerAnnouncement::encode() const
{
  ByteWriter out;
  out.u64(auction_id);
  out.u64(winner_seq);
  out.blob(bid_payload);
  out.u32(static_cast<std::uint32_t>(rejected.size()));
  for (auto const &r : rejected)
  {
    out.u64(r.seq);
    out.raw(r.digest);
  }
  return std::move(out).take();
}

WinnerAnnouncement WinnerAnnouncement::decode(ByteSpan payload)
{
  ByteReader         in(payload);
  WinnerAnnouncement a;
  a.auction_id  = in.u64();
  a.winner_seq  = in.u64();
  auto bid      = in.blob();
  a.bid_payload = Bytes(bid.begin(), bid.end());
  std::uint32_t count = in.u32();
  if (count > in.remaining() / (8 + kDigestBytes))
  {
    throw Error(Errc::malformed, "bad rejected-bid count");
  }
  for (std::uint32_t i = 0; i < count; ++i)
  {
    RejectedBid r;
    r.seq     = in.u64();
    auto d    = in.raw(kDigestBytes);
    r.digest  = Bytes(d.begin(), d.end());
    a.rejected.push_back(std::move(r));
  }
  in.expect_end();
  return a;
}

AuctionManager::AuctionManager(ringsig::SetupResult setup, registry::BulletinBoard &board,
                               AdmissionOptions options)
  : params_(std::make_shared<ringsig::PublicParams const>(std::move(setup.params)))
  , trace_key_(std::move(setup.trace_key))
  , board_(board)
  , options_(options)
{}

std::uint64_t AuctionManager::publish_params()
{
  ByteWriter out;
  params_->serialize_to(out);
  return board_.append(registry::EntryKind::params_published, std::move(out).take());
}

void AuctionManager::open_auction(std::uint64_t auction_id)
{
  if (auctions_.contains(auction_id))
  {
    throw Error(Errc::invalid_argument, "auction " + std::to_string(auction_id) + " exists");
  }
  AuctionState state;
  state.auction_id = auction_id;
  auctions_.emplace(auction_id, std::move(state));
}

void AuctionManager::advance_round(std::uint64_t auction_id)
{
  auto &s = mutable_state(auction_id);
  if (s.phase != AuctionPhase::open)
  {
    throw Error(Errc::auction_closed, "auction is not open");
  }
  ++s.current_round;
}

void AuctionManager::close_auction(std::uint64_t auction_id)
{
  auto &s = mutable_state(auction_id);
  if (s.phase != AuctionPhase::open)
  {
    throw Error(Errc::auction_closed, "auction is not open");
  }
  s.phase = AuctionPhase::closed;
}

AuctionState const &AuctionManager::state(std::uint64_t auction_id) const
{
  auto it = auctions_.find(auction_id);
  if (it == auctions_.end())
  {
    throw Error(Errc::invalid_argument, "unknown auction " + std::to_string(auction_id));
  }
  return it->second;
}

AuctionState &AuctionManager::mutable_state(std::uint64_t auction_id)
{
  return const_cast<AuctionState &>(std::as_const(*this).state(auction_id));
}

AdmitResult AuctionManager::admit_bid(Bid bid)
{
  auto reject = [](Errc reason, std::string detail) {
    return AdmitResult{false, 0, reason, std::move(detail)};
  };

  auto it = auctions_.find(bid.auction_id);
  if (it == auctions_.end())
  {
    return reject(Errc::malformed, "unknown auction");
  }
  auto &s = it->second;
  if (s.phase != AuctionPhase::open)
  {
    return reject(Errc::auction_closed, "auction is closed");
  }
  if (bid.round != s.current_round)
  {
    return reject(Errc::malformed, "bid is for round " + std::to_string(bid.round) +
                                       ", current round is " + std::to_string(s.current_round));
  }
  if (bid.price == 0)
  {
    return reject(Errc::malformed, "price must be at least 1");
  }
  auto const &group = params_->group;
  if (bid.signature.members.size() != bid.ring.size())
  {
    return reject(Errc::malformed, "signature does not match ring size");
  }
  for (auto const &enc : bid.ring.encodings())
  {
    if (!board_.is_active(enc))
    {
      return reject(Errc::ring_key_not_on_bbs, "ring key " + to_hex(enc) + " is not active");
    }
  }
  if (options_.monotonic_prices && bid.price <= s.high_price)
  {
    return reject(Errc::price_not_increasing,
                  "price must exceed " + std::to_string(s.high_price));
  }

  Bytes payload = encode_bid_payload(group, bid);
  Bytes digest  = group::sha256(payload);
  if (seen_digests_.contains(digest))
  {
    return reject(Errc::replayed_bid, "identical bid already received");
  }
  seen_digests_.insert(std::move(digest));

  bid.seq      = board_.append(registry::EntryKind::bid_posted, std::move(payload));
  s.high_price = std::max(s.high_price, bid.price);
  std::uint64_t seq = bid.seq;
  s.admitted.push_back(std::move(bid));
  return AdmitResult{true, seq, Errc::malformed, {}};
}

Bid const &AuctionManager::determine_winner(std::uint64_t auction_id)
{
  auto &s = mutable_state(auction_id);
  if (s.phase != AuctionPhase::closed)
  {
    throw Error(Errc::invalid_argument, "winner determination needs a closed auction");
  }

  std::vector<std::size_t> order(s.admitted.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto const &x = s.admitted[a];
    auto const &y = s.admitted[b];
    return x.price != y.price ? x.price > y.price : x.seq < y.seq;
  });

  // Every bid is checked so the announcement can list all rejects; the
  // winner is still the first verifying bid in ranking order.
  std::optional<std::size_t> winner;
  std::vector<RejectedBid>   rejected;
  for (auto idx : order)
  {
    auto const &bid = s.admitted[idx];
    if (ringsig::verify(*params_, bid.ring, bid.message(), bid.signature).accepted())
    {
      if (!winner)
      {
        winner = idx;
      }
    }
    else
    {
      rejected.push_back({bid.seq, group::sha256(encode_bid_payload(params_->group, bid))});
    }
  }
  std::sort(rejected.begin(), rejected.end(),
            [](RejectedBid const &a, RejectedBid const &b) { return a.seq < b.seq; });
  s.rejected_seqs.clear();
  for (auto const &r : rejected)
  {
    s.rejected_seqs.push_back(r.seq);
  }
  s.phase = AuctionPhase::announced;
  if (!winner)
  {
    board_.append(registry::EntryKind::winner_announced,
                  WinnerAnnouncement{auction_id, 0, {}, std::move(rejected)}.encode());
    throw Error(Errc::no_valid_bid, "no admitted bid verifies");
  }

  auto const        &bid = s.admitted[*winner];
  WinnerAnnouncement announcement{auction_id, bid.seq, encode_bid_payload(params_->group, bid),
                                  std::move(rejected)};
  board_.append(registry::EntryKind::winner_announced, announcement.encode());
  s.winner = WinnerRecord{bid, std::nullopt, std::nullopt};
  return s.winner->bid;
}

OpenResult AuctionManager::open_protocol(registry::RegistrationManager &rm, Bid const &bid,
                                         OpenPurpose purpose)
{
  // trace() re-verifies and raises not_verified itself.
  auto traced = ringsig::trace(trace_key_, *params_, bid.ring, bid.message(), bid.signature);

  // Only the published key crosses to the RM.
  auto const &record = rm.lookup_identity(traced.published_key);
  OpenResult  result{traced.index, traced.published_key, record.identity, record.status};

  if (purpose == OpenPurpose::repudiation && record.status == registry::RecordStatus::active)
  {
    rm.evict(traced.published_key);
    result.status      = registry::RecordStatus::evicted;
    result.evicted_now = true;
  }
  if (purpose == OpenPurpose::winner)
  {
    auto it = auctions_.find(bid.auction_id);
    if (it != auctions_.end() && it->second.winner && it->second.winner->bid.seq == bid.seq)
    {
      it->second.winner->traced_key = traced.published_key;
      it->second.winner->identity   = record.identity;
    }
  }
  return result;
}

}  // namespace anonauction::auction
