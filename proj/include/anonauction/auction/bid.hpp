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

#include "anonauction/bytes.hpp"
#include "anonauction/ringsig/scheme.hpp"

#include <cstdint>

namespace anonauction::auction {

using group::Point;
using group::PublicGroup;
using ringsig::Ring;
using ringsig::RingSignature;

/// be64(auction_id) ∥ be32(round) ∥ be64(price): the signed message M.
Bytes canonical_bid_bytes(std::uint64_t auction_id, std::uint32_t round, std::uint64_t price);

struct Bid
{
  std::uint64_t auction_id;
  std::uint32_t round;
  std::uint64_t price;  ///< minor currency units
  Ring          ring;
  RingSignature signature;
  std::uint64_t seq = 0;  ///< bulletin board sequence, assigned on admission

  Bytes message() const
  {
    return canonical_bid_bytes(auction_id, round, price);
  }
};

/// Bid-posted payload: canonical bid bytes ∥ ring ∥ signature.
Bytes encode_bid_payload(PublicGroup const &group, Bid const &bid);
void  write_bid_payload(ByteWriter &out, PublicGroup const &group, Bid const &bid);

/// Inverse of encode_bid_payload; seq is left at 0. Throws Error(malformed)
/// or Error(invalid_point).
Bid decode_bid_payload(PublicGroup const &group, ByteSpan payload);
Bid read_bid_payload(ByteReader &in, PublicGroup const &group);

}  // namespace anonauction::auction
