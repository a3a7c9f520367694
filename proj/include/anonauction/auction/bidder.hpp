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

#include "anonauction/auction/bid.hpp"
#include "anonauction/registry/bulletin_board.hpp"
#include "anonauction/registry/registration_manager.hpp"
#include "anonauction/rng.hpp"
#include "anonauction/ringsig/scheme.hpp"

#include <memory>
#include <string>

namespace anonauction::auction {

/// A bidder's long-term state: one key pair and one identity, registered
/// once and reused for every auction.
class Bidder
{
public:
  Bidder(std::shared_ptr<ringsig::PublicParams const> params, Bytes identity, Rng &rng);

  registry::RegistrationRequest registration_request(Rng &rng) const;

  /// Signs a bid over `ring`. Errors: own_key_not_in_ring when the ring
  /// lacks this bidder's key; ring_key_not_on_bbs when any ring key is not in
  /// the board's active view; invalid_argument for price 0.
  Bid place_bid(std::uint64_t auction_id, std::uint32_t round, std::uint64_t price,
                Ring const &ring, registry::BulletinBoard const &board, Rng &rng) const;

  /// Same signature without the board check; lets a misbehaving bidder
  /// submit whatever ring it likes.
  Bid sign_bid(std::uint64_t auction_id, std::uint32_t round, std::uint64_t price,
               Ring const &ring, Rng &rng) const;

  ringsig::BidderKeyPair const &keys() const noexcept
  {
    return keys_;
  }
  Point const &published_key() const noexcept
  {
    return keys_.published_key;
  }
  Bytes const &identity() const noexcept
  {
    return identity_;
  }

private:
  std::shared_ptr<ringsig::PublicParams const> params_;
  Bytes                                        identity_;
  ringsig::BidderKeyPair                       keys_;
};

}  // namespace anonauction::auction
