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

#include "anonauction/ringsig/ring.hpp"

#include "anonauction/error.hpp"

#include <algorithm>
#include <numeric>

namespace anonauction::ringsig {

Ring::Ring(PublicGroup const &group, std::vector<Point> keys)
{
  if (keys.empty())
  {
    throw Error(Errc::malformed, "ring must contain at least one key");
  }
  std::vector<Bytes> encoded;
  encoded.reserve(keys.size());
  for (auto const &key : keys)
  {
    if (key.is_identity() || !group.on_curve(key))
    {
      throw Error(Errc::malformed, "ring key must be a non-identity curve point");
    }
    encoded.push_back(group.encode(key));
  }

  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return encoded[a] < encoded[b]; });

  keys_.reserve(keys.size());
  encodings_.reserve(keys.size());
  for (auto idx : order)
  {
    if (!encodings_.empty() && encodings_.back() == encoded[idx])
    {
      throw Error(Errc::malformed, "duplicate key in ring");
    }
    keys_.push_back(std::move(keys[idx]));
    encodings_.push_back(std::move(encoded[idx]));
  }
}

std::optional<std::size_t> Ring::find(Point const &key) const
{
  auto it = std::find(keys_.begin(), keys_.end(), key);
  if (it == keys_.end())
  {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - keys_.begin());
}

void Ring::serialize_to(ByteWriter &out) const
{
  out.u32(static_cast<std::uint32_t>(keys_.size()));
  for (auto const &enc : encodings_)
  {
    out.raw(enc);
  }
}

Ring Ring::read(PublicGroup const &group, ByteReader &in)
{
  std::uint32_t count = in.u32();
  if (count == 0 || count > in.remaining() / group.point_bytes())
  {
    throw Error(Errc::malformed, "bad ring length");
  }
  std::vector<Point> keys;
  keys.reserve(count);
  Bytes previous;
  for (std::uint32_t i = 0; i < count; ++i)
  {
    auto raw = in.raw(group.point_bytes());
    Bytes enc(raw.begin(), raw.end());
    // The wire form must already be canonical.
    if (i > 0 && !(previous < enc))
    {
      throw Error(Errc::malformed, "ring keys are not in canonical order");
    }
    keys.push_back(group.decode(enc));
    previous = std::move(enc);
  }
  return Ring(group, std::move(keys));
}

Bytes canonical_encode(ByteSpan message, Ring const &ring)
{
  ByteWriter out;
  out.u64(message.size());
  out.raw(message);
  ring.serialize_to(out);
  return std::move(out).take();
}

}  // namespace anonauction::ringsig
