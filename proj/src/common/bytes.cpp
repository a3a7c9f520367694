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

#include "anonauction/error.hpp"

namespace anonauction {
namespace {

int hex_value(char c)
{
  if (c >= '0' && c <= '9')
  {
    return c - '0';
  }
  if (c >= 'a' && c <= 'f')
  {
    return c - 'a' + 10;
  }
  if (c >= 'A' && c <= 'F')
  {
    return c - 'A' + 10;
  }
  return -1;
}

}  // namespace

std::string to_hex(ByteSpan bytes)
{
  static constexpr char digits[] = "0123456789abcdef";
  std::string           out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes)
  {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0x0f]);
  }
  return out;
}

Bytes from_hex(std::string_view hex)
{
  if (hex.size() % 2 != 0)
  {
    throw Error(Errc::malformed, "odd-length hex string");
  }
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
  {
    int hi = hex_value(hex[i]);
    int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0)
    {
      throw Error(Errc::malformed, "invalid hex digit");
    }
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

Bytes to_bytes(std::string_view text)
{
  return Bytes(text.begin(), text.end());
}

void ByteWriter::u8(std::uint8_t v)
{
  out_.push_back(v);
}

void ByteWriter::u32(std::uint32_t v)
{
  for (int shift = 24; shift >= 0; shift -= 8)
  {
    out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void ByteWriter::u64(std::uint64_t v)
{
  for (int shift = 56; shift >= 0; shift -= 8)
  {
    out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void ByteWriter::raw(ByteSpan bytes)
{
  out_.insert(out_.end(), bytes.begin(), bytes.end());
}

void ByteWriter::blob(ByteSpan bytes)
{
  u32(static_cast<std::uint32_t>(bytes.size()));
  raw(bytes);
}

std::uint8_t ByteReader::u8()
{
  return raw(1)[0];
}

std::uint32_t ByteReader::u32()
{
  auto          b = raw(4);
  std::uint32_t v = 0;
  for (auto x : b)
  {
    v = (v << 8) | x;
  }
  return v;
}

std::uint64_t ByteReader::u64()
{
  auto          b = raw(8);
  std::uint64_t v = 0;
  for (auto x : b)
  {
    v = (v << 8) | x;
  }
  return v;
}

ByteSpan ByteReader::raw(std::size_t len)
{
  if (len > remaining())
  {
    throw Error(Errc::malformed, "truncated input");
  }
  auto out = data_.subspan(pos_, len);
  pos_ += len;
  return out;
}

ByteSpan ByteReader::blob()
{
  return raw(u32());
}

void ByteReader::expect_end() const
{
  if (remaining() != 0)
  {
    throw Error(Errc::malformed, "trailing bytes");
  }
}

}  // namespace anonauction
