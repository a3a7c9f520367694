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

#include "anonauction/harness/scenario_config.hpp"

#include "anonauction/error.hpp"

#include <charconv>
#include <optional>

namespace anonauction::harness {

namespace {

std::string_view trim(std::string_view s)
{
  auto const ws    = " \t\r";
  auto       first = s.find_first_not_of(ws);
  if (first == std::string_view::npos)
  {
    return {};
  }
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

std::optional<Strategy> parse_strategy(std::string_view s)
{
  for (auto st : {Strategy::honest_increment, Strategy::sniper, Strategy::invalid_signature,
                  Strategy::repudiator})
  {
    if (s == to_string(st))
    {
      return st;
    }
  }
  return std::nullopt;
}

template <typename T>
T parse_uint(std::string_view value, std::string const &where)
{
  T    out{};
  auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
  {
    throw Error(Errc::invalid_argument, where + ": expected an unsigned integer");
  }
  return out;
}

bool parse_bool(std::string_view value, std::string const &where)
{
  if (value == "true" || value == "on" || value == "1")
  {
    return true;
  }
  if (value == "false" || value == "off" || value == "0")
  {
    return false;
  }
  throw Error(Errc::invalid_argument, where + ": expected true or false");
}

}  // namespace

std::string_view to_string(Strategy s) noexcept
{
  switch (s)
  {
  case Strategy::honest_increment:
    return "honest-increment";
  case Strategy::sniper:
    return "sniper";
  case Strategy::invalid_signature:
    return "invalid-signature";
  case Strategy::repudiator:
    return "repudiator";
  }
  return "unknown";
}

void ScenarioConfig::validate() const
{
  if (strategies.empty())
  {
    throw Error(Errc::invalid_argument, "need at least one bidder");
  }
  if (rounds == 0 || auctions == 0)
  {
    throw Error(Errc::invalid_argument, "rounds and auctions must be at least 1");
  }
  if (k == 0)
  {
    throw Error(Errc::invalid_argument, "k must be at least 1");
  }
  if (increment == 0 || start_price == 0)
  {
    throw Error(Errc::invalid_argument, "start_price and increment must be at least 1");
  }
  if (ring_policy == RingPolicy::random_subset &&
      (ring_size == 0 || ring_size > strategies.size()))
  {
    throw Error(Errc::invalid_argument, "ring size must be between 1 and the bidder count");
  }
}

ScenarioConfig parse_scenario(std::string_view text)
{
  ScenarioConfig cfg;
  std::optional<std::size_t> bidders;
  std::vector<Strategy>      listed;
  std::size_t                line_no = 0;

  while (!text.empty())
  {
    auto        nl   = text.find('\n');
    auto        line = text.substr(0, nl);
    text             = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    std::string where = "line " + std::to_string(line_no);

    line = trim(line.substr(0, line.find('#')));
    if (line.empty())
    {
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
    {
      throw Error(Errc::invalid_argument, where + ": expected key = value");
    }
    auto key   = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    where += " (" + std::string(key) + ")";

    if (key == "p_bits")
    {
      cfg.p_bits = parse_uint<unsigned>(value, where);
    }
    else if (key == "q_bits")
    {
      cfg.q_bits = parse_uint<unsigned>(value, where);
    }
    else if (key == "k")
    {
      cfg.k = parse_uint<std::size_t>(value, where);
    }
    else if (key == "seed")
    {
      cfg.seed = parse_uint<std::uint64_t>(value, where);
    }
    else if (key == "bidders")
    {
      bidders = parse_uint<std::size_t>(value, where);
    }
    else if (key == "strategies")
    {
      listed.clear();
      while (!value.empty())
      {
        auto comma = value.find(',');
        auto name  = trim(value.substr(0, comma));
        value      = comma == std::string_view::npos ? std::string_view{} : value.substr(comma + 1);
        auto st    = parse_strategy(name);
        if (!st)
        {
          throw Error(Errc::invalid_argument, where + ": unknown strategy '" + std::string(name) + "'");
        }
        listed.push_back(*st);
      }
    }
    else if (key == "rounds")
    {
      cfg.rounds = parse_uint<std::uint32_t>(value, where);
    }
    else if (key == "auctions")
    {
      cfg.auctions = parse_uint<std::uint32_t>(value, where);
    }
    else if (key == "ring_policy")
    {
      constexpr std::string_view subset = "random-subset:";
      if (value == "all-active")
      {
        cfg.ring_policy = RingPolicy::all_active;
      }
      else if (value.starts_with(subset))
      {
        cfg.ring_policy = RingPolicy::random_subset;
        cfg.ring_size   = parse_uint<std::size_t>(value.substr(subset.size()), where);
      }
      else
      {
        throw Error(Errc::invalid_argument, where + ": expected all-active or random-subset:N");
      }
    }
    else if (key == "monotonic")
    {
      cfg.monotonic = parse_bool(value, where);
    }
    else if (key == "concurrent")
    {
      cfg.concurrent = parse_bool(value, where);
    }
    else if (key == "start_price")
    {
      cfg.start_price = parse_uint<std::uint64_t>(value, where);
    }
    else if (key == "increment")
    {
      cfg.increment = parse_uint<std::uint64_t>(value, where);
    }
    else if (key == "valuation_spread")
    {
      cfg.valuation_spread = parse_uint<std::uint64_t>(value, where);
    }
    else if (key == "max_cofactor")
    {
      cfg.max_cofactor = parse_uint<std::uint64_t>(value, where);
    }
    else
    {
      throw Error(Errc::invalid_argument, where + ": unknown key");
    }
  }

  // Listed strategies come first; any remaining bidders are honest.
  std::size_t count = bidders.value_or(listed.empty() ? cfg.strategies.size() : listed.size());
  if (listed.size() > count)
  {
    throw Error(Errc::invalid_argument, "more strategies than bidders");
  }
  listed.resize(count, Strategy::honest_increment);
  cfg.strategies = std::move(listed);
  cfg.validate();
  return cfg;
}

}  // namespace anonauction::harness
