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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace anonauction::auction {

enum class MessageKind
{
  registration,  ///< bidder → RM, once per bidder
  bid,           ///< bidder → AM
};

/// One protocol message sent by a bidder.
struct Message
{
  std::string   sender;
  MessageKind   kind;
  std::uint64_t auction_id = 0;
  std::uint32_t round      = 0;
};

using MessageTranscript = std::vector<Message>;

struct BidderMessageCount
{
  std::uint64_t registration = 0;
  std::uint64_t bidding      = 0;
  /// Bid messages per (auction, round).
  std::map<std::pair<std::uint64_t, std::uint32_t>, std::uint64_t> per_round;

  std::uint64_t total() const noexcept
  {
    return registration + bidding;
  }
};

using MessageCounter = std::map<std::string, BidderMessageCount>;

/// Tallies messages per bidder. A bid from a sender that has not registered
/// yet makes the transcript malformed (Error(malformed_transcript)).
MessageCounter count_messages(MessageTranscript const &transcript);

}  // namespace anonauction::auction
