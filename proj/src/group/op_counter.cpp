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

#include "anonauction/group/op_counter.hpp"

namespace anonauction::group {
namespace {

struct Counters
{
  std::atomic<std::uint64_t> exponentiations{0};
  std::atomic<std::uint64_t> multiplications{0};
  std::atomic<std::uint64_t> inversions{0};
  std::atomic<std::uint64_t> hashes{0};
  std::atomic<std::uint64_t> pairings{0};
  std::atomic<bool>          enabled{true};
};

Counters &counters() noexcept
{
  static Counters instance;
  return instance;
}

}  // namespace

OpCounts &OpCounts::operator+=(OpCounts const &o) noexcept
{
  exponentiations += o.exponentiations;
  multiplications += o.multiplications;
  inversions += o.inversions;
  hashes += o.hashes;
  pairings += o.pairings;
  return *this;
}

OpCounts operator-(OpCounts a, OpCounts const &b) noexcept
{
  a.exponentiations -= b.exponentiations;
  a.multiplications -= b.multiplications;
  a.inversions -= b.inversions;
  a.hashes -= b.hashes;
  a.pairings -= b.pairings;
  return a;
}

void OpCounter::record(Op op) noexcept
{
  auto &c = counters();
  if (!c.enabled.load(std::memory_order_relaxed))
  {
    return;
  }
  switch (op)
  {
  case Op::exponentiation:
    c.exponentiations.fetch_add(1, std::memory_order_relaxed);
    break;
  case Op::multiplication:
    c.multiplications.fetch_add(1, std::memory_order_relaxed);
    break;
  case Op::inversion:
    c.inversions.fetch_add(1, std::memory_order_relaxed);
    break;
  case Op::hash:
    c.hashes.fetch_add(1, std::memory_order_relaxed);
    break;
  case Op::pairing:
    c.pairings.fetch_add(1, std::memory_order_relaxed);
    break;
  }
}

OpCounts OpCounter::snapshot() noexcept
{
  auto const &c = counters();
  OpCounts    out;
  out.exponentiations = c.exponentiations.load(std::memory_order_relaxed);
  out.multiplications = c.multiplications.load(std::memory_order_relaxed);
  out.inversions      = c.inversions.load(std::memory_order_relaxed);
  out.hashes          = c.hashes.load(std::memory_order_relaxed);
  out.pairings        = c.pairings.load(std::memory_order_relaxed);
  return out;
}

void OpCounter::set_enabled(bool enabled) noexcept
{
  counters().enabled.store(enabled, std::memory_order_relaxed);
}

bool OpCounter::enabled() noexcept
{
  return counters().enabled.load(std::memory_order_relaxed);
}

}  // namespace anonauction::group
