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
#include "anonauction/registry/bulletin_board.hpp"
#include "anonauction/ringsig/scheme.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace anonauction::harness {

struct AnnouncedWinner
{
  std::uint64_t auction_id;
  std::uint64_t winner_seq;  ///< 0 when no bid verified
  std::uint64_t price;
};

struct TranscriptReport
{
  bool                         valid       = true;
  std::uint64_t                failing_seq = 0;
  std::string                  reason;
  std::size_t                  records = 0;
  std::vector<AnnouncedWinner> winners;
};

/// Replays a bulletin board transcript using public data only. Checks the
/// record stream, key publications and evictions, ring membership at bid
/// time, every bid signature, and re-derives each announced winner and its
/// list of rejected bids. A bid that fails verification is acceptable only
/// when the auction's announcement lists it with a matching digest.
///
/// A tampered key publication that still decodes to a group element is
/// reported at the first record that depends on it.
TranscriptReport verify_transcript(std::string_view text);

/// Public parameters carried by the first record of a transcript.
ringsig::PublicParams transcript_params(registry::BulletinBoard const &board);

/// Decodes the bid posted at `seq`. Throws Error(invalid_argument) when there
/// is no bid-posted record with that seq.
auction::Bid bid_at(registry::BulletinBoard const &board, ringsig::PublicParams const &params,
                    std::uint64_t seq);

}  // namespace anonauction::harness
