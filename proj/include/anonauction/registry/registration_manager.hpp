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
#include "anonauction/registry/bulletin_board.hpp"
#include "anonauction/registry/registration.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace anonauction::registry {

enum class RecordStatus
{
  active,
  evicted,
};

struct IdentityRecord
{
  Point        pub_key;
  Bytes        identity;
  RecordStatus status = RecordStatus::active;
};

/// What a bidder sends to the RM over the (assumed) secure channel.
struct RegistrationRequest
{
  Point             pub_key;
  Bytes             identity;
  RegistrationProof proof;
};

/// The registration manager: keeps the secret key → identity table and
/// writes key publications and evictions to the bulletin board.
///
/// Single writer; callers serialize access.
class RegistrationManager
{
public:
  RegistrationManager(PublicGroup group, BulletinBoard &board);

  /// Verifies the possession proof and publishes the key. Errors:
  /// invalid_proof for a failing proof, invalid_point for a key that is the
  /// identity or not annihilated by n, duplicate_key for a key seen before,
  /// already_evicted for an identity that was evicted, malformed for an
  /// empty identity.
  std::uint64_t enroll(RegistrationRequest const &request);

  /// Evicted records remain resolvable; check the status. Throws
  /// Error(unknown_key).
  IdentityRecord const &lookup_identity(Point const &pub_key) const;

  /// Throws Error(unknown_key) or Error(already_evicted).
  std::uint64_t evict(Point const &pub_key);

  std::vector<Point> active_keys() const;

  BulletinBoard const &board() const noexcept
  {
    return board_;
  }
  PublicGroup const &group() const noexcept
  {
    return group_;
  }

private:
  PublicGroup                     group_;
  BulletinBoard                  &board_;
  std::map<Bytes, IdentityRecord> records_;
};

}  // namespace anonauction::registry
