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

#include "anonauction/registry/bulletin_board.hpp"

#include "anonauction/error.hpp"

#include <algorithm>
#include <charconv>

namespace anonauction::registry {

std::string_view to_string(EntryKind kind) noexcept
{
  switch (kind)
  {
  case EntryKind::params_published:
    return "params-published";
  case EntryKind::key_published:
    return "key-published";
  case EntryKind::key_evicted:
    return "key-evicted";
  case EntryKind::bid_posted:
    return "bid-posted";
  case EntryKind::winner_announced:
    return "winner-announced";
  }
  return "unknown";
}

std::optional<EntryKind> parse_entry_kind(std::string_view text) noexcept
{
  for (auto kind : {EntryKind::params_published, EntryKind::key_published, EntryKind::key_evicted,
                    EntryKind::bid_posted, EntryKind::winner_announced})
  {
    if (to_string(kind) == text)
    {
      return kind;
    }
  }
  return std::nullopt;
}

std::uint64_t BulletinBoard::append(EntryKind kind, Bytes payload)
{
  std::lock_guard lock(*mutex_);
  std::uint64_t   seq = entries_.empty() ? 1 : entries_.back().seq + 1;
  apply_locked(Entry{seq, kind, std::move(payload)});
  return seq;
}

void BulletinBoard::apply_locked(Entry entry)
{
  if (!entries_.empty() && entry.seq <= entries_.back().seq)
  {
    throw Error(Errc::malformed, "sequence numbers must increase");
  }
  auto it = std::find(active_.begin(), active_.end(), entry.payload);
  if (entry.kind == EntryKind::key_published)
  {
    if (it != active_.end())
    {
      throw Error(Errc::malformed, "key is already active");
    }
    active_.push_back(entry.payload);
  }
  else if (entry.kind == EntryKind::key_evicted)
  {
    if (it == active_.end())
    {
      throw Error(Errc::malformed, "evicted key is not active");
    }
    active_.erase(it);
  }
  entries_.push_back(std::move(entry));
}

std::vector<Entry> BulletinBoard::entries() const
{
  std::lock_guard lock(*mutex_);
  return entries_;
}

std::size_t BulletinBoard::size() const
{
  std::lock_guard lock(*mutex_);
  return entries_.size();
}

std::vector<Bytes> BulletinBoard::active_keys() const
{
  std::lock_guard lock(*mutex_);
  return active_;
}

bool BulletinBoard::is_active(ByteSpan key_encoding) const
{
  std::lock_guard lock(*mutex_);
  return std::any_of(active_.begin(), active_.end(), [&](Bytes const &k) {
    return std::equal(k.begin(), k.end(), key_encoding.begin(), key_encoding.end());
  });
}

std::string BulletinBoard::serialize() const
{
  std::lock_guard lock(*mutex_);
  std::string     out;
  for (auto const &e : entries_)
  {
    out += std::to_string(e.seq);
    out += ' ';
    out += to_string(e.kind);
    out += ' ';
    out += to_hex(e.payload);
    out += '\n';
  }
  return out;
}

BulletinBoard BulletinBoard::parse(std::string_view text)
{
  BulletinBoard board;
  std::size_t   line_no = 0;
  while (!text.empty())
  {
    auto             nl   = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text                  = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty())
    {
      continue;
    }
    auto fail = [&](std::string const &why) {
      return Error(Errc::malformed_transcript, "line " + std::to_string(line_no) + ": " + why);
    };

    auto s1 = line.find(' ');
    auto s2 = s1 == std::string_view::npos ? s1 : line.find(' ', s1 + 1);
    if (s2 == std::string_view::npos || line.find(' ', s2 + 1) != std::string_view::npos)
    {
      throw fail("expected '<seq> <kind> <payload>'");
    }
    std::uint64_t seq   = 0;
    auto          field = line.substr(0, s1);
    auto [ptr, ec]      = std::from_chars(field.data(), field.data() + field.size(), seq);
    if (ec != std::errc{} || ptr != field.data() + field.size())
    {
      throw fail("bad sequence number");
    }
    auto kind = parse_entry_kind(line.substr(s1 + 1, s2 - s1 - 1));
    if (!kind)
    {
      throw fail("unknown record kind");
    }
    try
    {
      board.apply_locked(Entry{seq, *kind, from_hex(line.substr(s2 + 1))});
    }
    catch (Error const &e)
    {
      throw fail(e.what());
    }
  }
  return board;
}

}  // namespace anonauction::registry
