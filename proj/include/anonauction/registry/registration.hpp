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
#include "anonauction/group/group.hpp"
#include "anonauction/rng.hpp"

namespace anonauction::registry {

using group::Point;
using group::PublicGroup;

/// Schnorr-style proof that the registrant knows x with pub_key = [x]g,
/// bound to their identity:
///   challenge = H_1([t]g ∥ ID),  response = t + x·challenge mod n.
struct RegistrationProof
{
  mpz_class challenge;
  mpz_class response;

  friend bool operator==(RegistrationProof const &, RegistrationProof const &) = default;
};

RegistrationProof make_registration(mpz_class const &x, Point const &pub_key, ByteSpan identity,
                                    PublicGroup const &group, Rng &rng);

/// Accepts iff challenge = H_1(([response]g − [challenge]pub_key) ∥ ID) and
/// both values lie in [0, n).
bool verify_registration(Point const &pub_key, ByteSpan identity, RegistrationProof const &proof,
                         PublicGroup const &group);

}  // namespace anonauction::registry
