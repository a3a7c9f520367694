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

#include "anonauction/auction/bidder.hpp"

#include "anonauction/error.hpp"

namespace anonauction::auction {

Bidder::Bidder(std::shared_ptr<ringsig::PublicParams const> params, Bytes identity, Rng &rng)
  : params_(std::move(params))
  , identity_(std::move(identity))
  , keys_(ringsig::keygen(*params_, rng))
{}

registry::RegistrationRequest Bidder::registration_request(Rng &rng) const
{
  return {keys_.published_key, identity_,
          registry::make_registration(keys_.exponent, keys_.published_key, identity_,
                                      params_->group, rng)};
}

Bid Bidder::place_bid(std::uint64_t auction_id, std::uint32_t round, std::uint64_t price,
                      Ring const &ring, registry::BulletinBoard const &board, Rng &rng) const
{
  if (!ring.contains(keys_.published_key))
  {
    throw Error(Errc::own_key_not_in_ring, "the bidder's own key must be in the ring");
  }
  for (auto const &enc : ring.encodings())
  {
    if (!board.is_active(enc))
    {
      throw Error(Errc::ring_key_not_on_bbs, "ring key " + to_hex(enc) + " is not active");
    }
  }
  return sign_bid(auction_id, round, price, ring, rng);
}

Bid Bidder::sign_bid(std::uint64_t auction_id, std::uint32_t round, std::uint64_t price,
                     Ring const &ring, Rng &rng) const
{
  if (price == 0)
  {
    throw Error(Errc::invalid_argument, "price must be at least 1");
  }
  auto position = ring.find(keys_.published_key);
  if (!position)
  {
    throw Error(Errc::own_key_not_in_ring, "the bidder's own key must be in the ring");
  }
  Bytes message = canonical_bid_bytes(auction_id, round, price);
  auto  sig     = ringsig::sign(*params_, ring, *position, keys_, message, rng);
  return Bid{auction_id, round, price, ring, std::move(sig)};
}

}  // namespace anonauction::auction
