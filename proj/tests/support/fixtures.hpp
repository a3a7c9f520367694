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

#include "anonauction/group/group.hpp"
#include "anonauction/ringsig/scheme.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>

namespace anonauction::testing {

/// Group generation dominates small tests, so groups are built once per
/// (p_bits, q_bits, seed) and shared.
inline group::GroupParams const &cached_group(unsigned p_bits, unsigned q_bits, std::uint64_t seed)
{
  using Key = std::tuple<unsigned, unsigned, std::uint64_t>;
  static std::map<Key, group::GroupParams> cache;
  static std::mutex                        mutex;
  std::lock_guard                          lock(mutex);
  Key                                      key{p_bits, q_bits, seed};
  auto                                     it = cache.find(key);
  if (it == cache.end())
  {
    Rng rng(seed);
    it = cache.emplace(key, group::gen_group_params(p_bits, q_bits, rng)).first;
  }
  return it->second;
}

inline group::GroupParams const &tiny_group(std::uint64_t seed = 7)
{
  static std::map<std::uint64_t, group::GroupParams> cache;
  static std::mutex                                   mutex;
  std::lock_guard                                     lock(mutex);
  auto                                                it = cache.find(seed);
  if (it == cache.end())
  {
    Rng rng(seed);
    it = cache.emplace(seed, group::group_from_primes(5, 7, rng)).first;
  }
  return it->second;
}

/// Plain trial division, independent of GMP's primality test.
inline bool trial_division_prime(std::uint64_t v)
{
  if (v < 2)
  {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= v; ++d)
  {
    if (v % d == 0)
    {
      return false;
    }
  }
  return true;
}

}  // namespace anonauction::testing
