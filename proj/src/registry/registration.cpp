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

#include "anonauction/registry/registration.hpp"

namespace anonauction::registry {
namespace {

mpz_class challenge_for(Point const &commitment, ByteSpan identity, PublicGroup const &group)
{
  ByteWriter input;
  group.encode_to(input, commitment);
  input.raw(identity);
  return group.hash_to_zn(input.bytes());
}

}  // namespace

RegistrationProof make_registration(mpz_class const &x, Point const &pub_key, ByteSpan identity,
                                    PublicGroup const &group, Rng &rng)
{
  (void)pub_key;  // bound implicitly: the verifier recomputes [t]g from it
  mpz_class t         = rng.uniform_below(group.n());
  mpz_class challenge = challenge_for(group.mul(t, group.g()), identity, group);
  mpz_class response  = (t + x * challenge) % group.n();
  return {challenge, response};
}

bool verify_registration(Point const &pub_key, ByteSpan identity, RegistrationProof const &proof,
                         PublicGroup const &group)
{
  if (proof.challenge < 0 || proof.challenge >= group.n() || proof.response < 0 ||
      proof.response >= group.n() || !group.on_curve(pub_key))
  {
    return false;
  }
  // [b]g − [a]pk = [t]g for an honest proof.
  Point commitment = group.sub(group.mul(proof.response, group.g()),
                               group.mul(proof.challenge, pub_key));
  return challenge_for(commitment, identity, group) == proof.challenge;
}

}  // namespace anonauction::registry
