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

#include "anonauction/rng.hpp"

#include "anonauction/error.hpp"

namespace anonauction {

mpz_class Rng::random_bits(std::size_t bits)
{
  mpz_class out = 0;
  std::size_t remaining = bits;
  while (remaining > 0)
  {
    std::size_t take  = remaining < 64 ? remaining : 64;
    std::uint64_t word = next_u64();
    if (take < 64)
    {
      word &= (std::uint64_t{1} << take) - 1;
    }
    mpz_class chunk;
    mpz_import(chunk.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
    out <<= take;
    out += chunk;
    remaining -= take;
  }
  return out;
}

mpz_class Rng::uniform_below(mpz_class const &bound)
{
  if (bound <= 0)
  {
    throw Error(Errc::invalid_argument, "uniform_below needs a positive bound");
  }
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  for (;;)
  {
    mpz_class candidate = random_bits(bits);
    if (candidate < bound)
    {
      return candidate;
    }
  }
}

mpz_class Rng::uniform_nonzero_below(mpz_class const &bound)
{
  if (bound <= 1)
  {
    throw Error(Errc::invalid_argument, "uniform_nonzero_below needs bound > 1");
  }
  mpz_class upper = bound - 1;
  return uniform_below(upper) + 1;
}

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t stream)
{
  // splitmix64 over the combined input.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace anonauction
