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

#include "anonauction/harness/transcript.hpp"

#include "anonauction/auction/auction_manager.hpp"
#include "anonauction/error.hpp"
#include "anonauction/group/hash.hpp"
#include "anonauction/group/op_counter.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace anonauction::harness {

namespace {

using auction::RejectedBid;
using group::Point;
using group::PublicGroup;
using auction::WinnerAnnouncement;
using registry::Entry;
using registry::EntryKind;

/// Raised inside the replay; carries the seq being checked.
struct Failure
{
  std::uint64_t seq;
  std::string   reason;
};

struct PostedBid
{
  std::uint64_t seq;
  std::uint64_t price;
  bool          verified;
  Bytes         payload;
};

struct AuctionReplay
{
  std::vector<PostedBid> bids;
  std::uint32_t          last_round = 0;
  bool                   announced  = false;
};

std::uint64_t parse_seq(std::string_view s, bool &ok)
{
  std::uint64_t v   = 0;
  auto          res = std::from_chars(s.data(), s.data() + s.size(), v);
  ok                = res.ec == std::errc{} && res.ptr == s.data() + s.size();
  return v;
}

/// Splits the text into entries. Stops at the first line that does not parse
/// and records it in `failure`.
std::vector<Entry> split_records(std::string_view text, std::optional<Failure> &failure)
{
  std::vector<Entry> out;
  std::uint64_t      expected = 1;
  while (!text.empty())
  {
    auto nl   = text.find('\n');
    auto line = text.substr(0, nl);
    text      = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() && text.empty())
    {
      break;
    }

    auto sp1 = line.find(' ');
    auto sp2 = sp1 == std::string_view::npos ? sp1 : line.find(' ', sp1 + 1);
    bool ok  = false;
    auto seq = sp1 == std::string_view::npos ? 0 : parse_seq(line.substr(0, sp1), ok);
    if (!ok || sp2 == std::string_view::npos || seq != expected)
    {
      failure = Failure{expected, "record header is malformed or out of sequence"};
      return out;
    }
    auto kind = registry::parse_entry_kind(line.substr(sp1 + 1, sp2 - sp1 - 1));
    if (!kind)
    {
      failure = Failure{seq, "unknown record kind"};
      return out;
    }
    try
    {
      out.push_back(Entry{seq, *kind, from_hex(line.substr(sp2 + 1))});
    }
    catch (Error const &)
    {
      failure = Failure{seq, "payload is not hex"};
      return out;
    }
    ++expected;
  }
  return out;
}

class Replay
{
public:
  explicit Replay(std::vector<Entry> const &entries)
  {
    // Announcements are read ahead so a bid that fails verification can be
    // matched against the rejection list published later.
    for (auto const &e : entries)
    {
      if (e.kind != EntryKind::winner_announced)
      {
        continue;
      }
      try
      {
        auto a = WinnerAnnouncement::decode(e.payload);
        for (auto const &r : a.rejected)
        {
          listed_rejects_[r.seq] = {a.auction_id, r.digest};
        }
      }
      catch (Error const &)
      {
        // Reported when the replay reaches this record.
      }
    }
  }

  void apply(Entry const &e, TranscriptReport &report)
  {
    if (e.seq == 1)
    {
      if (e.kind != EntryKind::params_published)
      {
        fail(e, "transcript must start with the public parameters");
      }
      load_params(e);
      return;
    }
    switch (e.kind)
    {
    case EntryKind::params_published:
      fail(e, "public parameters published twice");
    case EntryKind::key_published:
      publish_key(e);
      return;
    case EntryKind::key_evicted:
      evict_key(e);
      return;
    case EntryKind::bid_posted:
      post_bid(e);
      return;
    case EntryKind::winner_announced:
      report.winners.push_back(announce(e));
      return;
    }
  }

private:
  [[noreturn]] static void fail(Entry const &e, std::string reason)
  {
    throw Failure{e.seq, std::move(reason)};
  }

  PublicGroup const &pub_group() const
  {
    return params_->group;
  }

  void load_params(Entry const &e)
  {
    try
    {
      ByteReader in(e.payload);
      params_.emplace(ringsig::PublicParams::deserialize(in));
      in.expect_end();
    }
    catch (Error const &err)
    {
      fail(e, std::string("public parameters do not decode: ") + err.what());
    }
    if (!ringsig::check_public_params(*params_))
    {
      fail(e, "public parameters are inconsistent");
    }
  }

  Point decode_key(Entry const &e)
  {
    try
    {
      Point p = pub_group().decode(e.payload);
      if (p.is_identity() || !pub_group().in_group(p))
      {
        fail(e, "key is not a non-identity group element");
      }
      return p;
    }
    catch (Error const &err)
    {
      fail(e, std::string("key does not decode: ") + err.what());
    }
  }

  void publish_key(Entry const &e)
  {
    decode_key(e);
    if (!ever_published_.insert(e.payload).second)
    {
      fail(e, "key published twice");
    }
    board_.append(e.kind, e.payload);
  }

  void evict_key(Entry const &e)
  {
    decode_key(e);
    if (!board_.is_active(e.payload))
    {
      fail(e, "evicted key is not active");
    }
    board_.append(e.kind, e.payload);
  }

  void post_bid(Entry const &e)
  {
    auction::Bid bid = [&] {
      try
      {
        return auction::decode_bid_payload(pub_group(), e.payload);
      }
      catch (Error const &err)
      {
        fail(e, std::string("bid does not decode: ") + err.what());
      }
    }();
    auto &a = auctions_[bid.auction_id];
    if (a.announced)
    {
      fail(e, "bid posted after the winner was announced");
    }
    if (bid.round < a.last_round || bid.price == 0)
    {
      fail(e, "bid round or price is out of range");
    }
    for (auto const &enc : bid.ring.encodings())
    {
      if (!board_.is_active(enc))
      {
        fail(e, "ring holds a key that is not active");
      }
    }
    a.last_round  = bid.round;
    bool verified = ringsig::verify(*params_, bid.ring, bid.message(), bid.signature).accepted();
    if (!verified)
    {
      auto it = listed_rejects_.find(e.seq);
      if (it == listed_rejects_.end() || it->second.first != bid.auction_id ||
          it->second.second != group::sha256(e.payload))
      {
        fail(e, "bid signature does not verify");
      }
    }
    a.bids.push_back(PostedBid{e.seq, bid.price, verified, e.payload});
  }

  AnnouncedWinner announce(Entry const &e)
  {
    WinnerAnnouncement ann = [&] {
      try
      {
        return WinnerAnnouncement::decode(e.payload);
      }
      catch (Error const &err)
      {
        fail(e, std::string("announcement does not decode: ") + err.what());
      }
    }();
    auto it = auctions_.find(ann.auction_id);
    if (it == auctions_.end() || it->second.announced)
    {
      fail(e, "announcement for an unknown or already announced auction");
    }
    auto &a = it->second;

    PostedBid const         *best = nullptr;
    std::vector<RejectedBid> rejected;
    for (auto const &b : a.bids)
    {
      if (!b.verified)
      {
        rejected.push_back({b.seq, group::sha256(b.payload)});
      }
      else if (best == nullptr || b.price > best->price)
      {
        best = &b;
      }
    }
    if (rejected != ann.rejected)
    {
      fail(e, "rejected bid list does not match the replay");
    }
    std::uint64_t seq = best ? best->seq : 0;
    if (ann.winner_seq != seq || (best && ann.bid_payload != best->payload) ||
        (!best && !ann.bid_payload.empty()))
    {
      fail(e, "announced winner is not the highest verifying bid");
    }
    a.announced = true;
    return AnnouncedWinner{ann.auction_id, seq, best ? best->price : 0};
  }

  std::optional<ringsig::PublicParams>                          params_;
  registry::BulletinBoard                                       board_;
  std::set<Bytes>                                               ever_published_;
  std::map<std::uint64_t, AuctionReplay>                        auctions_;
  std::map<std::uint64_t, std::pair<std::uint64_t, Bytes>>      listed_rejects_;
};

}  // namespace

TranscriptReport verify_transcript(std::string_view text)
{
  TranscriptReport       report;
  std::optional<Failure> failure;
  auto                   entries = split_records(text, failure);
  Replay                 replay(entries);
  try
  {
    for (auto const &e : entries)
    {
      replay.apply(e, report);
      ++report.records;
    }
  }
  catch (Failure const &f)
  {
    failure = f;
  }
  if (failure)
  {
    report.valid       = false;
    report.failing_seq = failure->seq;
    report.reason      = failure->reason;
    report.winners.clear();
  }
  return report;
}

ringsig::PublicParams transcript_params(registry::BulletinBoard const &board)
{
  auto entries = board.entries();
  if (entries.empty() || entries.front().kind != EntryKind::params_published)
  {
    throw Error(Errc::malformed_transcript, "transcript does not start with public parameters");
  }
  ByteReader in(entries.front().payload);
  auto       params = ringsig::PublicParams::deserialize(in);
  in.expect_end();
  return params;
}

auction::Bid bid_at(registry::BulletinBoard const &board, ringsig::PublicParams const &params,
                    std::uint64_t seq)
{
  for (auto const &e : board.entries())
  {
    if (e.seq == seq && e.kind == EntryKind::bid_posted)
    {
      auto bid = auction::decode_bid_payload(params.group, e.payload);
      bid.seq  = seq;
      return bid;
    }
  }
  throw Error(Errc::invalid_argument, "no bid posted at seq " + std::to_string(seq));
}

}  // namespace anonauction::harness
