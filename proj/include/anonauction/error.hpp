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

#include <stdexcept>
#include <string>
#include <string_view>

namespace anonauction {

enum class Errc
{
  invalid_argument,
  parameter_search_exhausted,
  invalid_point,
  not_a_member,
  untraceable,
  not_verified,
  duplicate_key,
  invalid_proof,
  unknown_key,
  already_evicted,
  own_key_not_in_ring,
  ring_key_not_on_bbs,
  auction_closed,
  price_not_increasing,
  replayed_bid,
  malformed,
  no_valid_bid,
  malformed_transcript,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can react without parsing messages.
class Error : public std::runtime_error
{
public:
  Error(Errc code, std::string const &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what)
    , code_(code)
  {}

  Errc code() const noexcept
  {
    return code_;
  }

private:
  Errc code_;
};

}  // namespace anonauction
