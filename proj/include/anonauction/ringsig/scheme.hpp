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
#include "anonauction/group/hash.hpp"
#include "anonauction/rng.hpp"
#include "anonauction/ringsig/ring.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace anonauction::ringsig {

/// Values the auction manager publishes after setup.
///
/// The exponents behind signing_base and offset are discarded by setup().
struct PublicParams
{
  PublicGroup           group;
  Point                 signing_base;          ///< [a]g
  Point                 offset;                ///< [b0]g, subtracted from every ring key
  Point                 blinded_signing_base;  ///< [a]h
  Point                 waters_base;           ///< u′
  std::vector<Point>    waters_generators;     ///< u_1 … u_k
  group::HashDescriptor hash;

  std::size_t k() const noexcept
  {
    return waters_generators.size();
  }

  void                serialize_to(ByteWriter &out) const;
  static PublicParams deserialize(ByteReader &in);

  friend bool operator==(PublicParams const &, PublicParams const &) = default;
};

/// The prime q with n = p·q. Raising a commitment to q strips its blinding.
struct TraceKey
{
  mpz_class order_q;
};

struct SetupResult
{
  PublicParams params;
  TraceKey     trace_key;
};

struct BidderKeyPair
{
  mpz_class exponent;       ///< x, never leaves the bidder
  Point     published_key;  ///< [x]g, posted on the bulletin board
  Point     signing_key;    ///< [x]A, secret
};

struct MemberProof
{
  Point commitment;  ///< C_i
  Point proof;       ///< π_i

  friend bool operator==(MemberProof const &, MemberProof const &) = default;
};

struct RingSignature
{
  Point                    masked_key;  ///< S_1
  Point                    randomizer;  ///< S_2 = [r]g
  std::vector<MemberProof> members;     ///< aligned with the ring order

  std::size_t point_count() const noexcept
  {
    return 2 + 2 * members.size();
  }

  friend bool operator==(RingSignature const &, RingSignature const &) = default;
};

/// Per-signature secrets, exposed so tests can check algebraic facts about
/// honest signatures directly.
struct SigningWitness
{
  std::vector<mpz_class>    blinding;   ///< e_i
  std::vector<std::uint8_t> selector;   ///< f_i
  mpz_class                 blinding_sum;
  mpz_class                 randomness;  ///< r
  group::BitString          message_bits;
};

enum class VerifyStatus
{
  accept,
  malformed,
  membership_proof,
  main_equation,
};

struct VerifyResult
{
  VerifyStatus status = VerifyStatus::accept;
  std::size_t  member = 0;  ///< failing index for membership_proof
  std::string  detail;

  bool accepted() const noexcept
  {
    return status == VerifyStatus::accept;
  }
};

struct TraceResult
{
  std::size_t index;
  Point       published_key;
};

/// AM-side setup. Throws Error(invalid_argument) if k == 0.
SetupResult setup(group::GroupParams const &group, std::size_t k, Rng &rng);

/// Checks ê(A, h) = ê(g, Â) and that every published point lies in ⟨g⟩.
bool check_public_params(PublicParams const &params);

using ExponentSampler = std::function<mpz_class(Rng &, mpz_class const &n)>;

/// Draws x uniformly from [0, n) and resamples x = 0, which would give the
/// identity as published key.
BidderKeyPair keygen(PublicParams const &params, Rng &rng, ExponentSampler const &sample = {});

/// Throws Error(invalid_argument) for x ≡ 0 (mod n).
BidderKeyPair keypair_from_exponent(PublicParams const &params, mpz_class const &x);

/// Ring signature on `message`. Throws Error(not_a_member) if signer_index is
/// out of range or ring[signer_index] is not the signer's published key.
RingSignature sign(PublicParams const &params, Ring const &ring, std::size_t signer_index,
                   BidderKeyPair const &keys, ByteSpan message, Rng &rng,
                   SigningWitness *witness = nullptr);

VerifyResult verify(PublicParams const &params, Ring const &ring, ByteSpan message,
                     RingSignature const &signature);

/// Finds the signer: the member i with [q]C_i = [q](pk_i − B0).
///
/// Members whose [q](pk_i − B0) is the identity match every unblinded
/// commitment, so they only count when no other member matches. Throws
/// Error(not_verified) if the signature does not verify and
/// Error(untraceable) if no single member matches.
TraceResult trace(TraceKey const &key, PublicParams const &params, Ring const &ring,
                  ByteSpan message, RingSignature const &signature);

/// H_2 bits of the signed message: hash_to_bits(canonical_encode(m, ring), k).
group::BitString message_bits(PublicParams const &params, ByteSpan message, Ring const &ring);

/// S_1 ∥ S_2 ∥ C_1 ∥ π_1 ∥ … ∥ C_ℓ ∥ π_ℓ.
Bytes         serialize_signature(PublicGroup const &group, RingSignature const &signature);
void          write_signature(ByteWriter &out, PublicGroup const &group,
                              RingSignature const &signature);
RingSignature read_signature(ByteReader &in, PublicGroup const &group, std::size_t ring_size);

}  // namespace anonauction::ringsig
