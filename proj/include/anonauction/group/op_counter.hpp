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

#include <atomic>
#include <cstdint>

namespace anonauction::group {

/// Plain snapshot of the instrumented operation totals.
struct OpCounts
{
  std::uint64_t exponentiations = 0;  ///< scalar multiplications in G, powers in G_T
  std::uint64_t multiplications = 0;  ///< point additions in G, products in G_T
  std::uint64_t inversions      = 0;  ///< point negations in G, inverses in G_T
  std::uint64_t hashes          = 0;  ///< H_1 / H_2 invocations
  std::uint64_t pairings        = 0;

  OpCounts &operator+=(OpCounts const &o) noexcept;
  friend OpCounts operator-(OpCounts a, OpCounts const &b) noexcept;
  friend bool     operator==(OpCounts const &, OpCounts const &) = default;
};

enum class Op
{
  exponentiation,
  multiplication,
  inversion,
  hash,
  pairing
};

/// Process-wide counters. Updates are relaxed atomics so concurrent signers
/// can share them; the totals are order independent.
class OpCounter
{
public:
  static void     record(Op op) noexcept;
  static OpCounts snapshot() noexcept;
  static void     set_enabled(bool enabled) noexcept;
  static bool     enabled() noexcept;
};

/// Measures the operations performed between construction and `counts()`.
class ScopedOpCount
{
public:
  ScopedOpCount()
    : start_(OpCounter::snapshot())
  {}

  OpCounts counts() const noexcept
  {
    return OpCounter::snapshot() - start_;
  }

private:
  OpCounts start_;
};

}  // namespace anonauction::group
