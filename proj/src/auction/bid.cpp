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

#include "anonauction/auction/bid.hpp"

#include "anonauction/error.hpp"

namespace anonauction::auction {

Bytes canonical_bid_bytes(std::uint64_t auction_id, std::uint32_t round, std::uint64_t price)
{
  ByteWriter out;
  out.u64(auction_id);
  out.u32(round);
  out.u64(price);
  return std::move(out).take();
}

void write_bid_payload(ByteWriter &out, PublicGroup const &group, Bid const &bid)
{
  out.raw(bid.message());
  bid.ring.serialize_to(out);
  ringsig::write_signature(out, group, bid.signature);
}

Bytes encode_bid_payload(PublicGroup const &group, Bid const &bid)
{
  ByteWriter out;
  write_bid_payload(out, group, bid);
  return std::move(out).take();
}

Bid read_bid_payload(ByteReader &in, PublicGroup const &group)
{
  std::uint64_t auction_id = in.u64();
  std::uint32_t round      = in.u32();
  std::uint64_t price      = in.u64();
  Ring          ring       = Ring::read(group, in);
  RingSignature signature  = ringsig::read_signature(in, group, ring.size());
  return Bid{auction_id, round, price, std::move(ring), std::move(signature)};
}

Bid decode_bid_payload(PublicGroup const &group, ByteSpan payload)
{
  ByteReader in(payload);
  Bid        bid = read_bid_payload(in, group);
  in.expect_end();
  return bid;
}

}  // namespace anonauction::auction
