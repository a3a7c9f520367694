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
#include "anonauction/auction/bidder.hpp"
#include "anonauction/auction/messages.hpp"
#include "anonauction/error.hpp"
#include "anonauction/group/hash.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <memory>

namespace {

using namespace anonauction;
using namespace anonauction::auction;
using anonauction::testing::cached_group;
using registry::RecordStatus;

/// AM, RM, board and a set of registered bidders.
struct Market
{
  explicit Market(std::size_t bidders, AdmissionOptions options = {}, std::uint64_t seed = 1)
    : rng(seed)
    , am(make_setup(rng), board, options)
    , rm(am.params()->group, board)
  {
    am.publish_params();
    for (std::size_t i = 0; i < bidders; ++i)
    {
      people.emplace_back(am.params(), to_bytes("bidder-" + std::to_string(i)), rng);
      rm.enroll(people.back().registration_request(rng));
    }
  }

  static ringsig::SetupResult make_setup(Rng &rng)
  {
    return ringsig::setup(cached_group(16, 16, 1), 16, rng);
  }

  Ring ring_all() const
  {
    return Ring(am.params()->group, rm.active_keys());
  }

  Bid bid(std::size_t who, std::uint64_t auction, std::uint64_t price, std::uint32_t round = 1)
  {
    return people[who].place_bid(auction, round, price, ring_all(), board, rng);
  }

  Bid corrupt(Bid b)
  {
    b.signature.masked_key = am.params()->group.add(b.signature.masked_key, am.params()->group.g());
    return b;
  }

  Rng                     rng;
  registry::BulletinBoard board;
  AuctionManager          am;
  registry::RegistrationManager rm;
  std::vector<Bidder>     people;
};

Errc error_of(auto &&fn)
{
  try
  {
    fn();
  }
  catch (Error const &e)
  {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::invalid_argument;
}

TEST(Bid, PayloadRoundTripAndFixedWidthMessage)
{
  Market m(3);
  auto   b = m.bid(1, 7, 42);
  EXPECT_EQ(b.message().size(), 8u + 4u + 8u);
  EXPECT_EQ(b.message(), canonical_bid_bytes(7, 1, 42));
  auto back = decode_bid_payload(m.am.params()->group, encode_bid_payload(m.am.params()->group, b));
  EXPECT_EQ(back.auction_id, 7u);
  EXPECT_EQ(back.price, 42u);
  EXPECT_EQ(back.ring, b.ring);
  EXPECT_EQ(back.signature, b.signature);
}

TEST(PlaceBid, HonestBidIsAdmittedAndPosted)
{
  Market m(3);
  m.am.open_auction(1);
  auto before = m.board.size();
  auto r      = m.am.admit_bid(m.bid(0, 1, 10));
  ASSERT_TRUE(r.admitted) << r.detail;
  EXPECT_EQ(r.seq, before + 1);
  EXPECT_EQ(m.board.entries().back().kind, registry::EntryKind::bid_posted);
  EXPECT_EQ(m.am.state(1).admitted.size(), 1u);
}

TEST(PlaceBid, RingWithoutOwnKeyRefused)
{
  Market m(3);
  Ring   others(m.am.params()->group, {m.people[1].published_key(), m.people[2].published_key()});
  EXPECT_EQ(error_of([&] { m.people[0].place_bid(1, 1, 10, others, m.board, m.rng); }),
            Errc::own_key_not_in_ring);
}

TEST(PlaceBid, EvictedKeyInRingRejected)
{
  Market m(3);
  m.am.open_auction(1);
  Ring with_evicted = m.ring_all();
  m.rm.evict(m.people[2].published_key());
  EXPECT_EQ(error_of([&] { m.people[0].place_bid(1, 1, 10, with_evicted, m.board, m.rng); }),
            Errc::ring_key_not_on_bbs);
  auto r = m.am.admit_bid(m.people[0].sign_bid(1, 1, 10, with_evicted, m.rng));
  EXPECT_FALSE(r.admitted);
  EXPECT_EQ(r.reason, Errc::ring_key_not_on_bbs);
}

TEST(AdmitBid, InvalidSignatureAdmittedLazily)
{
  Market m(3);
  m.am.open_auction(1);
  EXPECT_TRUE(m.am.admit_bid(m.corrupt(m.bid(0, 1, 10))).admitted);
}

TEST(AdmitBid, ClosedAuctionWrongRoundAndReplay)
{
  Market m(3);
  m.am.open_auction(1);
  auto b = m.bid(0, 1, 10);
  EXPECT_TRUE(m.am.admit_bid(b).admitted);
  auto replay = m.am.admit_bid(b);
  EXPECT_FALSE(replay.admitted);
  // The monotonic rule would also refuse it; check replay detection alone.
  Market loose(3, AdmissionOptions{false});
  loose.am.open_auction(1);
  auto lb = loose.bid(0, 1, 10);
  EXPECT_TRUE(loose.am.admit_bid(lb).admitted);
  EXPECT_EQ(loose.am.admit_bid(lb).reason, Errc::replayed_bid);

  EXPECT_EQ(m.am.admit_bid(m.bid(1, 1, 20, 2)).reason, Errc::malformed);  // future round
  m.am.close_auction(1);
  EXPECT_EQ(m.am.admit_bid(m.bid(1, 1, 30)).reason, Errc::auction_closed);
}

TEST(AdmitBid, MonotonicPricesEnforcedByDefault)
{
  Market m(3);
  m.am.open_auction(1);
  EXPECT_TRUE(m.am.admit_bid(m.bid(0, 1, 20)).admitted);
  EXPECT_EQ(m.am.admit_bid(m.bid(1, 1, 15)).reason, Errc::price_not_increasing);
  EXPECT_EQ(m.am.admit_bid(m.bid(1, 1, 20)).reason, Errc::price_not_increasing);
  EXPECT_TRUE(m.am.admit_bid(m.bid(1, 1, 21)).admitted);
}

TEST(DetermineWinner, HighestPriceWins)
{
  Market m(3, AdmissionOptions{false});
  m.am.open_auction(1);
  for (auto [who, price] : {std::pair{0, 10}, {1, 20}, {2, 15}})
  {
    ASSERT_TRUE(m.am.admit_bid(m.bid(who, 1, price)).admitted);
  }
  m.am.close_auction(1);
  EXPECT_EQ(m.am.determine_winner(1).price, 20u);
  EXPECT_EQ(m.am.state(1).phase, AuctionPhase::announced);
  EXPECT_EQ(m.board.entries().back().kind, registry::EntryKind::winner_announced);
}

TEST(DetermineWinner, InvalidTopBidSkipped)
{
  Market m(3, AdmissionOptions{false});
  m.am.open_auction(1);
  m.am.admit_bid(m.bid(0, 1, 10));
  auto bad = m.am.admit_bid(m.corrupt(m.bid(1, 1, 20)));
  m.am.admit_bid(m.bid(2, 1, 15));
  m.am.close_auction(1);
  EXPECT_EQ(m.am.determine_winner(1).price, 15u);
  EXPECT_EQ(m.am.state(1).rejected_seqs, std::vector<std::uint64_t>{bad.seq});
  auto ann = WinnerAnnouncement::decode(m.board.entries().back().payload);
  ASSERT_EQ(ann.rejected.size(), 1u);
  EXPECT_EQ(ann.rejected[0].seq, bad.seq);
  EXPECT_EQ(ann.rejected[0].digest, group::sha256(m.board.entries()[bad.seq - 1].payload));
}

TEST(DetermineWinner, TieGoesToEarlierSeq)
{
  Market m(2, AdmissionOptions{false});
  m.am.open_auction(1);
  auto first  = m.am.admit_bid(m.bid(1, 1, 20));
  auto second = m.am.admit_bid(m.bid(0, 1, 20));
  ASSERT_LT(first.seq, second.seq);
  m.am.close_auction(1);
  EXPECT_EQ(m.am.determine_winner(1).seq, first.seq);
}

TEST(DetermineWinner, NoValidBidAndOpenAuction)
{
  Market m(2);
  m.am.open_auction(1);
  m.am.admit_bid(m.corrupt(m.bid(0, 1, 10)));
  EXPECT_EQ(error_of([&] { m.am.determine_winner(1); }), Errc::invalid_argument);
  m.am.close_auction(1);
  EXPECT_EQ(error_of([&] { m.am.determine_winner(1); }), Errc::no_valid_bid);
  auto ann = WinnerAnnouncement::decode(m.board.entries().back().payload);
  EXPECT_EQ(ann.winner_seq, 0u);
  EXPECT_EQ(ann.rejected.size(), 1u);
}

TEST(OpenProtocol, WinnerIdentifiedForEveryRingPosition)
{
  Market m(4, AdmissionOptions{false});
  Ring   ring = m.ring_all();
  for (std::size_t pos = 0; pos < 4; ++pos)
  {
    std::size_t who = 0;
    while (m.people[who].published_key() != ring[pos])
    {
      ++who;
    }
    std::uint64_t auction = 10 + pos;
    m.am.open_auction(auction);
    m.am.admit_bid(m.bid(who, auction, 100));
    m.am.close_auction(auction);
    auto const &winner = m.am.determine_winner(auction);
    auto        opened = m.am.open_protocol(m.rm, winner, OpenPurpose::winner);
    EXPECT_EQ(opened.ring_position, pos);
    EXPECT_EQ(opened.pub_key, m.people[who].published_key());
    EXPECT_EQ(opened.identity, m.people[who].identity());
    EXPECT_FALSE(opened.evicted_now);
    auto const &state = m.am.state(auction);
    ASSERT_TRUE(state.winner->identity.has_value());
    EXPECT_EQ(*state.winner->identity, m.people[who].identity());
  }
}

TEST(OpenProtocol, RepudiationEvictsAndAuditStillResolves)
{
  Market m(4);
  m.am.open_auction(1);
  auto b = m.bid(3, 1, 10);
  ASSERT_TRUE(m.am.admit_bid(b).admitted);

  auto opened = m.am.open_protocol(m.rm, b, OpenPurpose::repudiation);
  EXPECT_TRUE(opened.evicted_now);
  EXPECT_EQ(opened.identity, m.people[3].identity());
  auto active = m.rm.active_keys();
  EXPECT_EQ(std::count(active.begin(), active.end(), m.people[3].published_key()), 0);
  EXPECT_EQ(active.size(), 3u);

  auto again = m.am.open_protocol(m.rm, b, OpenPurpose::repudiation);
  EXPECT_EQ(again.status, RecordStatus::evicted);
  EXPECT_FALSE(again.evicted_now);
  EXPECT_EQ(again.identity, m.people[3].identity());
}

TEST(OpenProtocol, UnverifiedBidRefused)
{
  Market m(2);
  m.am.open_auction(1);
  auto b = m.corrupt(m.bid(0, 1, 10));
  EXPECT_EQ(error_of([&] { m.am.open_protocol(m.rm, b, OpenPurpose::winner); }),
            Errc::not_verified);
}

TEST(Properties, EvictionNeedsNoKeyRenewal)
{
  Market m(4);
  std::vector<ringsig::BidderKeyPair> before;
  for (auto const &p : m.people)
  {
    before.push_back(p.keys());
  }
  m.am.open_auction(1);
  auto b = m.bid(1, 1, 10);
  m.am.admit_bid(b);
  m.am.open_protocol(m.rm, b, OpenPurpose::repudiation);

  Ring stale_ring(m.am.params()->group,
                  {m.people[0].published_key(), m.people[1].published_key()});
  auto r = m.am.admit_bid(m.people[0].sign_bid(1, 1, 50, stale_ring, m.rng));
  EXPECT_EQ(r.reason, Errc::ring_key_not_on_bbs);
  // Remaining bidders keep their keys and still bid with fresh rings.
  for (std::size_t i = 0; i < m.people.size(); ++i)
  {
    EXPECT_EQ(m.people[i].keys().published_key, before[i].published_key);
    EXPECT_EQ(m.people[i].keys().signing_key, before[i].signing_key);
  }
  EXPECT_TRUE(m.am.admit_bid(m.bid(2, 1, 60)).admitted);
}

TEST(Properties, ConditionalAnonymity)
{
  Market      m(4);
  auto const &pp   = *m.am.params();
  auto const &g    = pp.group;
  Ring        ring = m.ring_all();
  for (std::size_t who = 0; who < 4; ++who)
  {
    auto b = m.bid(who, 1, 10);
    // Public view: every position passes the same per-member check, so the
    // public equations single out nobody.
    for (std::size_t i = 0; i < ring.size(); ++i)
    {
      auto const &mp    = b.signature.members[i];
      Point       other = g.sub(mp.commitment, g.sub(ring[i], pp.offset));
      EXPECT_EQ(g.pair(mp.commitment, other), g.pair(g.h(), mp.proof));
    }
    EXPECT_TRUE(ringsig::verify(pp, ring, b.message(), b.signature).accepted());
    // With the trace key exactly one position is singled out.
    auto opened = m.am.open_protocol(m.rm, b, OpenPurpose::winner);
    EXPECT_EQ(opened.pub_key, m.people[who].published_key());
  }
}

TEST(Properties, SignaturesShareNoComponents)
{
  Market m(3);
  Ring   ring = m.ring_all();
  for (int i = 0; i < 100; ++i)
  {
    auto a = m.people[0].sign_bid(1, 1, 10 + i, ring, m.rng);
    auto b = m.people[0].sign_bid(2, 1, 10 + i, ring, m.rng);
    ASSERT_NE(a.signature.masked_key, b.signature.masked_key);
    ASSERT_NE(a.signature.randomizer, b.signature.randomizer);
    for (std::size_t j = 0; j < ring.size(); ++j)
    {
      ASSERT_NE(a.signature.members[j].commitment, b.signature.members[j].commitment);
      ASSERT_NE(a.signature.members[j].proof, b.signature.members[j].proof);
    }
  }
}

TEST(Properties, WinnerIsMaximalAmongVerifyingBids)
{
  Rng prices(77);
  for (int trial = 0; trial < 5; ++trial)
  {
    Market m(4, AdmissionOptions{false}, 100 + trial);
    m.am.open_auction(1);
    for (int i = 0; i < 6; ++i)
    {
      std::size_t   who   = prices.next_u64() % 4;
      std::uint64_t price = 1 + prices.next_u64() % 5;
      auto          b     = m.bid(who, 1, price);
      if (prices.next_u64() % 3 == 0)
      {
        b = m.corrupt(b);
      }
      m.am.admit_bid(b);
    }
    m.am.close_auction(1);
    Bid const *winner = nullptr;
    try
    {
      winner = &m.am.determine_winner(1);
    }
    catch (Error const &)
    {
      continue;
    }
    for (auto const &b : m.am.state(1).admitted)
    {
      if (!ringsig::verify(*m.am.params(), b.ring, b.message(), b.signature).accepted())
      {
        continue;
      }
      EXPECT_LE(b.price, winner->price);
      if (b.price == winner->price)
      {
        EXPECT_GE(b.seq, winner->seq);
      }
    }
  }
}

TEST(CountMessages, OneRegistrationPlusOneBidPerRound)
{
  MessageTranscript t;
  for (std::string who : {"a", "b", "c"})
  {
    t.push_back({who, MessageKind::registration});
  }
  for (std::string who : {"a", "b", "c"})
  {
    t.push_back({who, MessageKind::bid, 1, 1});
  }
  auto c = count_messages(t);
  ASSERT_EQ(c.size(), 3u);
  for (auto const &[who, n] : c)
  {
    EXPECT_EQ(n.registration, 1u);
    EXPECT_EQ(n.bidding, 1u);
    EXPECT_EQ(n.total(), 2u);
  }
  // A second auction adds bids only.
  for (std::string who : {"a", "b", "c"})
  {
    t.push_back({who, MessageKind::bid, 2, 1});
  }
  for (auto const &[who, n] : count_messages(t))
  {
    EXPECT_EQ(n.registration, 1u);
    EXPECT_EQ(n.bidding, 2u);
  }
  EXPECT_TRUE(count_messages({}).empty());
}

TEST(CountMessages, BidBeforeRegistrationIsMalformed)
{
  MessageTranscript t{{"a", MessageKind::bid, 1, 1}};
  EXPECT_EQ(error_of([&] { count_messages(t); }), Errc::malformed_transcript);
}

}  // namespace
