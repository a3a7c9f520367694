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

#include "anonauction/auction/messages.hpp"
#include "anonauction/error.hpp"
#include "anonauction/group/op_counter.hpp"
#include "anonauction/harness/scenario_config.hpp"
#include "anonauction/ringsig/scheme.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace anonauction::harness {

using group::OpCounts;

/// Operation counts per protocol phase. `initial` covers setup and
/// registration, `bidding` covers bid signing only, `winner` covers winner
/// determination and `opening` every trace run by the open protocol.
struct OpCountReport
{
  OpCounts    initial;
  OpCounts    bidding;
  OpCounts    winner;
  OpCounts    opening;
  std::size_t signatures = 0;

  friend bool operator==(OpCountReport const &, OpCountReport const &) = default;
};

struct BidOutcome
{
  std::size_t   bidder;
  std::uint64_t auction_id;
  std::uint32_t round;
  std::uint64_t price;
  std::size_t   ring_size;
  bool          admitted;
  std::uint64_t seq = 0;     ///< board seq when admitted
  Errc          reason{};    ///< rejection reason otherwise
};

struct AuctionOutcome
{
  std::uint64_t              auction_id;
  std::uint64_t              winner_seq = 0;  ///< 0 when no bid verified
  std::uint64_t              price      = 0;
  std::optional<std::size_t> winner;          ///< bidder index resolved by the open protocol
  std::vector<std::uint64_t> rejected_seqs;
};

struct RepudiationOutcome
{
  std::size_t   bidder;
  std::uint64_t seq;
  std::size_t   ring_position;
  bool          evicted;
};

struct ScenarioResult
{
  std::string                     transcript;  ///< bulletin board text
  auction::MessageTranscript      messages;
  OpCountReport                   counts;
  std::vector<BidOutcome>         bids;
  std::vector<AuctionOutcome>     auctions;
  std::vector<RepudiationOutcome> repudiations;
  std::shared_ptr<ringsig::PublicParams const> params;
  ringsig::TraceKey               trace_key;
};

std::string bidder_name(std::size_t index);

/// Runs setup, registration, every auction round, winner determination and
/// the open protocol. Deterministic in the config. With `count_ops` false
/// the operation counters are switched off for the run and the report is
/// all zeros.
ScenarioResult run_scenario(ScenarioConfig const &config, bool count_ops = true);

}  // namespace anonauction::harness
