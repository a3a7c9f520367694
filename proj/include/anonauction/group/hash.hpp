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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace anonauction::group {

/// Published description of H_1 and H_2.
///
/// Both are SHA-256 in counter mode with a one-byte domain tag:
///   block_i = SHA256(tag ∥ be32(i) ∥ data)
/// H_1 concatenates blocks up to bitlen(n) + 64 bits and reduces mod n, which
/// keeps the bias of the reduction below 2⁻⁶⁴. H_2 keeps the first k bits.
struct HashDescriptor
{
  std::string algorithm = "sha256-ctr";
  std::size_t k         = 160;

  friend bool operator==(HashDescriptor const &, HashDescriptor const &) = default;
};

/// Output of H_2, one entry (0 or 1) per bit, most significant bit first.
using BitString = std::vector<std::uint8_t>;

/// Plain SHA-256, not counted as a protocol hash (bookkeeping only).
Bytes sha256(ByteSpan data);

/// H_1 : {0,1}* → Z_n.
mpz_class hash_to_zn(ByteSpan data, mpz_class const &n);

/// H_2 : {0,1}* → {0,1}^k. Throws Error(invalid_argument) when k == 0.
BitString hash_to_bits(ByteSpan data, std::size_t k);

}  // namespace anonauction::group
