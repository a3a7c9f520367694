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

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace anonauction {

/// Seedable randomness source threaded through every randomized operation.
///
/// Backed by mt19937_64, whose output sequence is fixed by the standard, so a
/// seed reproduces the same protocol run on every platform. Not a CSPRNG:
/// this library is a desk-scale simulator.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
    : engine_(seed)
  {}

  std::uint64_t next_u64()
  {
    return engine_();
  }

  /// Uniform in [0, bound) by rejection on bitlen(bound) random bits.
  mpz_class uniform_below(mpz_class const &bound);

  /// Uniform in [1, bound).
  mpz_class uniform_nonzero_below(mpz_class const &bound);

  /// Exactly `bits` random bits (top bit may be zero).
  mpz_class random_bits(std::size_t bits);

  /// Independent child stream; used to give each actor its own source so
  /// results do not depend on scheduling order.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

private:
  std::mt19937_64 engine_;
};

}  // namespace anonauction
