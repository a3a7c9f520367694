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

#include <cstddef>
#include <optional>
#include <vector>

namespace anonauction::ringsig {

using group::Point;
using group::PublicGroup;

/// An ordered set of published keys a signer hides among.
///
/// Keys are kept sorted by their canonical point encoding, so the same set
/// of keys always forms the same ring regardless of the order the caller
/// supplied them in.
class Ring
{
public:
  /// Throws Error(malformed) for an empty ring, an identity key, a key
  /// outside the curve, or duplicate keys.
  Ring(PublicGroup const &group, std::vector<Point> keys);

  std::size_t size() const noexcept
  {
    return keys_.size();
  }
  Point const &operator[](std::size_t i) const
  {
    return keys_.at(i);
  }
  std::vector<Point> const &keys() const noexcept
  {
    return keys_;
  }
  /// Canonical encoding of each key, aligned with keys().
  std::vector<Bytes> const &encodings() const noexcept
  {
    return encodings_;
  }

  std::optional<std::size_t> find(Point const &key) const;
  bool contains(Point const &key) const
  {
    return find(key).has_value();
  }

  /// be32(size) ∥ sorted key encodings.
  void        serialize_to(ByteWriter &out) const;
  static Ring read(PublicGroup const &group, ByteReader &in);

  friend bool operator==(Ring const &a, Ring const &b)
  {
    return a.encodings_ == b.encodings_;
  }

private:
  std::vector<Point> keys_;
  std::vector<Bytes> encodings_;
};

/// be64(len) ∥ message ∥ ring serialization. Injective over (message, ring).
Bytes canonical_encode(ByteSpan message, Ring const &ring);

}  // namespace anonauction::ringsig
