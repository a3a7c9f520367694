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

#include "anonauction/error.hpp"

namespace anonauction {

std::string_view to_string(Errc code) noexcept
{
  switch (code)
  {
  case Errc::invalid_argument:
    return "invalid-argument";
  case Errc::parameter_search_exhausted:
    return "parameter-search-exhausted";
  case Errc::invalid_point:
    return "invalid-point";
  case Errc::not_a_member:
    return "not-a-member";
  case Errc::untraceable:
    return "untraceable";
  case Errc::not_verified:
    return "not-verified";
  case Errc::duplicate_key:
    return "duplicate-key";
  case Errc::invalid_proof:
    return "invalid-proof";
  case Errc::unknown_key:
    return "unknown-key";
  case Errc::already_evicted:
    return "already-evicted";
  case Errc::own_key_not_in_ring:
    return "own-key-not-in-ring";
  case Errc::ring_key_not_on_bbs:
    return "ring-key-not-on-BBS";
  case Errc::auction_closed:
    return "auction-closed";
  case Errc::price_not_increasing:
    return "price-not-increasing";
  case Errc::replayed_bid:
    return "replayed-bid";
  case Errc::malformed:
    return "malformed";
  case Errc::no_valid_bid:
    return "no-valid-bid";
  case Errc::malformed_transcript:
    return "malformed-transcript";
  }
  return "unknown";
}

}  // namespace anonauction
