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

#include "anonauction/group/hash.hpp"

#include "anonauction/error.hpp"
#include "anonauction/group/op_counter.hpp"

#include <openssl/evp.h>

#include <array>

namespace anonauction::group {
namespace {

constexpr std::uint8_t kTagH1 = 0x01;
constexpr std::uint8_t kTagH2 = 0x02;

using Digest = std::array<std::uint8_t, 32>;

Digest sha256_block(std::uint8_t tag, std::uint32_t counter, ByteSpan data)
{
  Digest      out{};
  EVP_MD_CTX *ctx = EVP_MD_CTX_new();
  if (ctx == nullptr)
  {
    throw std::bad_alloc();
  }
  std::uint8_t header[5] = {tag, static_cast<std::uint8_t>(counter >> 24),
                            static_cast<std::uint8_t>(counter >> 16),
                            static_cast<std::uint8_t>(counter >> 8),
                            static_cast<std::uint8_t>(counter)};
  unsigned int len       = 0;
  bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
            EVP_DigestUpdate(ctx, header, sizeof(header)) == 1 &&
            EVP_DigestUpdate(ctx, data.data(), data.size()) == 1 &&
            EVP_DigestFinal_ex(ctx, out.data(), &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok)
  {
    throw std::runtime_error("SHA-256 failed");
  }
  return out;
}

/// Concatenated counter-mode blocks, truncated to `bytes`.
Bytes expand(std::uint8_t tag, ByteSpan data, std::size_t bytes)
{
  Bytes         out;
  std::uint32_t counter = 0;
  while (out.size() < bytes)
  {
    auto block = sha256_block(tag, counter++, data);
    out.insert(out.end(), block.begin(), block.end());
  }
  out.resize(bytes);
  return out;
}

}  // namespace

Bytes sha256(ByteSpan data)
{
  Digest       out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1)
  {
    throw std::runtime_error("SHA-256 failed");
  }
  return Bytes(out.begin(), out.end());
}

mpz_class hash_to_zn(ByteSpan data, mpz_class const &n)
{
  if (n <= 0)
  {
    throw Error(Errc::invalid_argument, "hash_to_zn needs a positive modulus");
  }
  OpCounter::record(Op::hash);
  std::size_t bits  = mpz_sizeinbase(n.get_mpz_t(), 2) + 64;
  Bytes       wide  = expand(kTagH1, data, (bits + 7) / 8);
  mpz_class   value;
  mpz_import(value.get_mpz_t(), wide.size(), 1, 1, 1, 0, wide.data());
  mpz_mod(value.get_mpz_t(), value.get_mpz_t(), n.get_mpz_t());
  return value;
}

BitString hash_to_bits(ByteSpan data, std::size_t k)
{
  if (k == 0)
  {
    throw Error(Errc::invalid_argument, "hash_to_bits needs k >= 1");
  }
  OpCounter::record(Op::hash);
  Bytes     raw = expand(kTagH2, data, (k + 7) / 8);
  BitString bits(k);
  for (std::size_t i = 0; i < k; ++i)
  {
    bits[i] = (raw[i / 8] >> (7 - i % 8)) & 1u;
  }
  return bits;
}

}  // namespace anonauction::group
