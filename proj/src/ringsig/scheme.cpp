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

#include "anonauction/ringsig/scheme.hpp"

#include "anonauction/error.hpp"

using anonauction::group::GtElement;

namespace anonauction::ringsig {
namespace {

Point random_group_element(PublicGroup const &group, Rng &rng)
{
  return group.curve().mul(rng.uniform_below(group.n()), group.g());
}

/// u′ + Σ_{m_j = 1} u_j
Point waters_hash(PublicParams const &params, group::BitString const &bits)
{
  Point acc = params.waters_base;
  for (std::size_t j = 0; j < bits.size(); ++j)
  {
    if (bits[j])
    {
      acc = params.group.add(acc, params.waters_generators[j]);
    }
  }
  return acc;
}

}  // namespace

SetupResult setup(group::GroupParams const &group, std::size_t k, Rng &rng)
{
  if (k == 0)
  {
    throw Error(Errc::invalid_argument, "k must be at least 1");
  }
  auto const &pub = group.pub;

  mpz_class a  = rng.uniform_below(pub.n());
  mpz_class b0 = rng.uniform_below(pub.n());

  PublicParams params{pub,
                      pub.mul(a, pub.g()),
                      pub.mul(b0, pub.g()),
                      pub.mul(a, pub.h()),
                      random_group_element(pub, rng),
                      {},
                      group::HashDescriptor{"sha256-ctr", k}};
  params.waters_generators.reserve(k);
  for (std::size_t j = 0; j < k; ++j)
  {
    params.waters_generators.push_back(random_group_element(pub, rng));
  }
  // a and b0 go out of scope here; only q is retained.
  return {std::move(params), TraceKey{group.q}};
}

bool check_public_params(PublicParams const &params)
{
  auto const &g = params.group;
  if (params.waters_generators.empty() || params.hash.k != params.waters_generators.size())
  {
    return false;
  }
  for (auto const *p : {&params.signing_base, &params.offset, &params.blinded_signing_base,
                        &params.waters_base})
  {
    if (!g.in_group(*p))
    {
      return false;
    }
  }
  for (auto const &u : params.waters_generators)
  {
    if (!g.in_group(u))
    {
      return false;
    }
  }
  return g.pair(params.signing_base, g.h()) == g.pair(g.g(), params.blinded_signing_base);
}

BidderKeyPair keypair_from_exponent(PublicParams const &params, mpz_class const &x)
{
  auto const &g       = params.group;
  mpz_class   reduced = x % g.n();
  if (reduced < 0)
  {
    reduced += g.n();
  }
  if (reduced == 0)
  {
    throw Error(Errc::invalid_argument, "key exponent must be non-zero mod n");
  }
  return BidderKeyPair{reduced, g.mul(reduced, g.g()), g.mul(reduced, params.signing_base)};
}

BidderKeyPair keygen(PublicParams const &params, Rng &rng, ExponentSampler const &sample)
{
  for (;;)
  {
    mpz_class x = sample ? sample(rng, params.group.n()) : rng.uniform_below(params.group.n());
    if (x % params.group.n() != 0)
    {
      return keypair_from_exponent(params, x);
    }
  }
}

group::BitString message_bits(PublicParams const &params, ByteSpan message, Ring const &ring)
{
  return group::hash_to_bits(canonical_encode(message, ring), params.k());
}

RingSignature sign(PublicParams const &params, Ring const &ring, std::size_t signer_index,
                   BidderKeyPair const &keys, ByteSpan message, Rng &rng,
                   SigningWitness *witness)
{
  if (signer_index >= ring.size() || ring[signer_index] != keys.published_key)
  {
    throw Error(Errc::not_a_member, "signer key is not at the given ring position");
  }
  auto const &g = params.group;

  group::BitString bits = message_bits(params, message, ring);

  RingSignature sig;
  sig.members.reserve(ring.size());
  std::vector<mpz_class> blinding;
  blinding.reserve(ring.size());

  Point     neg_offset = g.neg(params.offset);
  mpz_class blinding_sum = 0;
  for (std::size_t i = 0; i < ring.size(); ++i)
  {
    bool      is_signer = i == signer_index;
    mpz_class e         = rng.uniform_below(g.n());
    Point     shifted   = g.add(ring[i], neg_offset);  // pk_i − B0
    Point     blind     = g.mul(e, g.h());             // [e_i]h

    // C_i = [f_i](pk_i − B0) + [e_i]h
    Point commitment = is_signer ? g.add(shifted, blind) : blind;
    // π_i = [e_i]([2f_i − 1](pk_i − B0) + [e_i]h)
    Point base  = is_signer ? commitment : g.add(g.neg(shifted), blind);
    Point proof = g.mul(e, base);

    sig.members.push_back({std::move(commitment), std::move(proof)});
    blinding_sum += e;
    blinding.push_back(std::move(e));
  }
  blinding_sum %= g.n();

  mpz_class r      = rng.uniform_below(g.n());
  Point     waters = waters_hash(params, bits);
  sig.masked_key   = g.add(g.add(keys.signing_key, g.mul(r, waters)),
                           g.mul(blinding_sum, params.blinded_signing_base));
  sig.randomizer   = g.mul(r, g.g());

  if (witness != nullptr)
  {
    witness->selector.assign(ring.size(), 0);
    witness->selector[signer_index] = 1;
    witness->blinding               = std::move(blinding);
    witness->blinding_sum           = blinding_sum;
    witness->randomness             = r;
    witness->message_bits           = std::move(bits);
  }
  return sig;
}

VerifyResult verify(PublicParams const &params, Ring const &ring, ByteSpan message,
                    RingSignature const &signature)
{
  auto const &g = params.group;
  if (signature.members.size() != ring.size() || params.waters_generators.empty())
  {
    return {VerifyStatus::malformed, 0, "member count does not match ring size"};
  }
  if (!g.in_group(signature.masked_key) || !g.in_group(signature.randomizer))
  {
    return {VerifyStatus::malformed, 0, "signature point outside the group"};
  }
  for (std::size_t i = 0; i < ring.size(); ++i)
  {
    auto const &m = signature.members[i];
    if (!g.in_group(ring[i]) || !g.in_group(m.commitment) || !g.in_group(m.proof))
    {
      return {VerifyStatus::malformed, i, "member point outside the group"};
    }
  }

  group::BitString bits = message_bits(params, message, ring);

  // ê(C_i, C_i − (pk_i − B0)) = ê(h, π_i) for every member.
  Point commitment_sum = Point::identity();
  for (std::size_t i = 0; i < ring.size(); ++i)
  {
    auto const &m       = signature.members[i];
    Point       shifted = g.sub(ring[i], params.offset);
    Point       other   = g.sub(m.commitment, shifted);
    if (g.pair(m.commitment, other) != g.pair(g.h(), m.proof))
    {
      return {VerifyStatus::membership_proof, i, "membership proof does not verify"};
    }
    commitment_sum = g.add(commitment_sum, m.commitment);
  }

  // ê(A, B0 + C) = ê(S1, g) · ê(−S2, u′ + Σ m_j u_j)
  Point     waters = waters_hash(params, bits);
  GtElement lhs    = g.pair(params.signing_base, g.add(params.offset, commitment_sum));
  GtElement rhs    = g.gt_mul(g.pair(signature.masked_key, g.g()),
                              g.pair(g.neg(signature.randomizer), waters));
  if (lhs != rhs)
  {
    return {VerifyStatus::main_equation, 0, "signature equation does not hold"};
  }
  return {};
}

TraceResult trace(TraceKey const &key, PublicParams const &params, Ring const &ring,
                  ByteSpan message, RingSignature const &signature)
{
  auto result = verify(params, ring, message, signature);
  if (!result.accepted())
  {
    throw Error(Errc::not_verified, result.detail);
  }
  auto const &g = params.group;

  std::vector<std::size_t> strong;
  std::vector<std::size_t> degenerate;
  for (std::size_t i = 0; i < ring.size(); ++i)
  {
    Point stripped = g.mul(key.order_q, signature.members[i].commitment);
    Point expected = g.mul(key.order_q, g.sub(ring[i], params.offset));
    if (stripped != expected)
    {
      continue;
    }
    (expected.is_identity() ? degenerate : strong).push_back(i);
  }

  std::size_t found = 0;
  if (strong.size() == 1)
  {
    found = strong.front();
  }
  else if (strong.empty() && degenerate.size() == 1)
  {
    found = degenerate.front();
  }
  else
  {
    throw Error(Errc::untraceable,
                strong.empty() && degenerate.empty() ? "no ring member matches"
                                                     : "more than one ring member matches");
  }
  return {found, ring[found]};
}

}  // namespace anonauction::ringsig
