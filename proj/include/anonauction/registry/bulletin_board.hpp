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

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace anonauction::registry {

enum class EntryKind
{
  params_published,
  key_published,
  key_evicted,
  bid_posted,
  winner_announced,
};

std::string_view            to_string(EntryKind kind) noexcept;
std::optional<EntryKind>    parse_entry_kind(std::string_view text) noexcept;

struct Entry
{
  std::uint64_t seq;
  EntryKind     kind;
  Bytes         payload;

  friend bool operator==(Entry const &, Entry const &) = default;
};

/// Public append-only log.
///
/// Key entries carry a canonical point encoding as payload. The board keeps
/// the derived active-key view (published and not yet evicted) in
/// publication order; evicted keys appear only as log entries.
///
/// Text form, one record per line:  <seq> <kind> <hex payload>
class BulletinBoard
{
public:
  BulletinBoard() = default;

  /// Appends and returns the new sequence number (starting at 1). Key
  /// entries update the active view; a key-published for an active key or a
  /// key-evicted for an inactive one throws Error(malformed).
  std::uint64_t append(EntryKind kind, Bytes payload);

  std::vector<Entry> entries() const;
  std::size_t        size() const;

  /// Encodings of active keys, in the order they were published.
  std::vector<Bytes> active_keys() const;
  bool               is_active(ByteSpan key_encoding) const;

  std::string serialize() const;

  /// Rebuilds a board by replaying the text form. Sequence numbers must be
  /// strictly increasing. Throws Error(malformed_transcript) with the line
  /// number on any defect.
  static BulletinBoard parse(std::string_view text);

private:
  void apply_locked(Entry entry);

  std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
  std::vector<Entry>          entries_;
  std::vector<Bytes>          active_;
};

}  // namespace anonauction::registry
