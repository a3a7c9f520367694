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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace anonauction {

using Bytes     = std::vector<std::uint8_t>;
using ByteSpan  = std::span<std::uint8_t const>;

std::string to_hex(ByteSpan bytes);

/// Throws Error(malformed) on odd length or a non-hex digit.
Bytes from_hex(std::string_view hex);

Bytes to_bytes(std::string_view text);

/// Append-only big-endian serializer.
class ByteWriter
{
public:
  void u8(std::uint8_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void raw(ByteSpan bytes);
  /// u32 length followed by the bytes.
  void blob(ByteSpan bytes);

  Bytes const &bytes() const &
  {
    return out_;
  }
  Bytes take() &&
  {
    return std::move(out_);
  }

private:
  Bytes out_;
};

/// Bounds-checked reader; every short read throws Error(malformed).
class ByteReader
{
public:
  explicit ByteReader(ByteSpan bytes)
    : data_(bytes)
  {}

  std::uint8_t  u8();
  std::uint32_t u32();
  std::uint64_t u64();
  ByteSpan      raw(std::size_t len);
  ByteSpan      blob();

  std::size_t remaining() const noexcept
  {
    return data_.size() - pos_;
  }
  std::size_t position() const noexcept
  {
    return pos_;
  }
  void expect_end() const;

private:
  ByteSpan    data_;
  std::size_t pos_ = 0;
};

}  // namespace anonauction
