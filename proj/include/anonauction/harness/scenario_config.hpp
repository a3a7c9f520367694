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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace anonauction::harness {

enum class Strategy
{
  honest_increment,
  sniper,             ///< bids only in the last round
  invalid_signature,  ///< posts bids whose signature fails verification
  repudiator,         ///< denies its first bid and gets evicted
};

std::string_view to_string(Strategy s) noexcept;

enum class RingPolicy
{
  all_active,
  random_subset,
};

struct ScenarioConfig
{
  unsigned              p_bits = 16;
  unsigned              q_bits = 16;
  std::size_t           k      = 16;
  std::uint64_t         seed   = 1;
  std::vector<Strategy> strategies{3, Strategy::honest_increment};
  std::uint32_t         rounds   = 1;
  std::uint32_t         auctions = 1;
  RingPolicy            ring_policy = RingPolicy::all_active;
  std::size_t           ring_size   = 0;  ///< used by random_subset
  bool                  monotonic   = true;
  std::uint64_t         start_price = 10;
  std::uint64_t         increment   = 5;
  /// Honest valuations are start_price + U[0, spread); 0 means unbounded.
  std::uint64_t valuation_spread = 0;
  bool          concurrent       = false;
  std::uint64_t max_cofactor     = 1u << 16;

  /// Throws Error(invalid_argument) on a broken invariant.
  void validate() const;
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys and bad
/// values throw Error(invalid_argument) naming the line.
ScenarioConfig parse_scenario(std::string_view text);

}  // namespace anonauction::harness
