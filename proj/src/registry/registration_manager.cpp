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

#include "anonauction/registry/registration_manager.hpp"

#include "anonauction/error.hpp"

#include <algorithm>

namespace anonauction::registry {

RegistrationManager::RegistrationManager(PublicGroup group, BulletinBoard &board)
  : group_(std::move(group))
  , board_(board)
{}

std::uint64_t RegistrationManager::enroll(RegistrationRequest const &request)
{
  if (request.identity.empty())
  {
    throw Error(Errc::malformed, "identity must be non-empty");
  }
  // Only "order divides n" is checkable here; the exact order needs p, q.
  if (request.pub_key.is_identity() || !group_.in_group(request.pub_key))
  {
    throw Error(Errc::invalid_point, "published key must be a non-identity element of <g>");
  }
  if (!verify_registration(request.pub_key, request.identity, request.proof, group_))
  {
    throw Error(Errc::invalid_proof, "possession proof does not verify");
  }
  Bytes key = group_.encode(request.pub_key);
  if (records_.contains(key))
  {
    throw Error(Errc::duplicate_key, "key already registered");
  }
  bool evicted_identity = std::any_of(records_.begin(), records_.end(), [&](auto const &entry) {
    return entry.second.status == RecordStatus::evicted && entry.second.identity == request.identity;
  });
  if (evicted_identity)
  {
    throw Error(Errc::already_evicted, "identity was evicted");
  }

  std::uint64_t seq = board_.append(EntryKind::key_published, key);
  records_.emplace(std::move(key),
                   IdentityRecord{request.pub_key, request.identity, RecordStatus::active});
  return seq;
}

IdentityRecord const &RegistrationManager::lookup_identity(Point const &pub_key) const
{
  auto it = records_.find(group_.encode(pub_key));
  if (it == records_.end())
  {
    throw Error(Errc::unknown_key, "no record for key");
  }
  return it->second;
}

std::uint64_t RegistrationManager::evict(Point const &pub_key)
{
  Bytes key = group_.encode(pub_key);
  auto  it  = records_.find(key);
  if (it == records_.end())
  {
    throw Error(Errc::unknown_key, "no record for key");
  }
  if (it->second.status == RecordStatus::evicted)
  {
    throw Error(Errc::already_evicted, "key already evicted");
  }
  std::uint64_t seq = board_.append(EntryKind::key_evicted, std::move(key));
  it->second.status = RecordStatus::evicted;
  return seq;
}

std::vector<Point> RegistrationManager::active_keys() const
{
  std::vector<Point> out;
  for (auto const &enc : board_.active_keys())
  {
    out.push_back(group_.decode(enc));
  }
  return out;
}

}  // namespace anonauction::registry
