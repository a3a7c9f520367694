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

#include "anonauction/error.hpp"
#include "anonauction/ringsig/scheme.hpp"

namespace anonauction::ringsig {

void PublicParams::serialize_to(ByteWriter &out) const
{
  group.serialize_to(out);
  group.encode_to(out, signing_base);
  group.encode_to(out, offset);
  group.encode_to(out, blinded_signing_base);
  group.encode_to(out, waters_base);
  out.u32(static_cast<std::uint32_t>(waters_generators.size()));
  for (auto const &u : waters_generators)
  {
    group.encode_to(out, u);
  }
  out.blob(to_bytes(hash.algorithm));
}

PublicParams PublicParams::deserialize(ByteReader &in)
{
  PublicGroup group = PublicGroup::deserialize(in);
  Point       a     = group.read_point(in);
  Point       b0    = group.read_point(in);
  Point       a_hat = group.read_point(in);
  Point       u0    = group.read_point(in);

  std::uint32_t k = in.u32();
  if (k == 0 || k > in.remaining() / group.point_bytes())
  {
    throw Error(Errc::malformed, "bad generator count");
  }
  std::vector<Point> generators;
  generators.reserve(k);
  for (std::uint32_t j = 0; j < k; ++j)
  {
    generators.push_back(group.read_point(in));
  }
  auto        algo = in.blob();
  std::string algorithm(algo.begin(), algo.end());
  if (algorithm != group::HashDescriptor{}.algorithm)
  {
    throw Error(Errc::malformed, "unsupported hash algorithm " + algorithm);
  }
  return PublicParams{std::move(group),
                      std::move(a),
                      std::move(b0),
                      std::move(a_hat),
                      std::move(u0),
                      std::move(generators),
                      group::HashDescriptor{algorithm, k}};
}

void write_signature(ByteWriter &out, PublicGroup const &group, RingSignature const &signature)
{
  group.encode_to(out, signature.masked_key);
  group.encode_to(out, signature.randomizer);
  for (auto const &m : signature.members)
  {
    group.encode_to(out, m.commitment);
    group.encode_to(out, m.proof);
  }
}

Bytes serialize_signature(PublicGroup const &group, RingSignature const &signature)
{
  ByteWriter out;
  write_signature(out, group, signature);
  return std::move(out).take();
}

RingSignature read_signature(ByteReader &in, PublicGroup const &group, std::size_t ring_size)
{
  RingSignature sig;
  sig.masked_key = group.read_point(in);
  sig.randomizer = group.read_point(in);
  sig.members.reserve(ring_size);
  for (std::size_t i = 0; i < ring_size; ++i)
  {
    Point c  = group.read_point(in);
    Point pi = group.read_point(in);
    sig.members.push_back({std::move(c), std::move(pi)});
  }
  return sig;
}

}  // namespace anonauction::ringsig
