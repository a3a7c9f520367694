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

#include "anonauction/auction/messages.hpp"

#include "anonauction/error.hpp"

namespace anonauction::auction {

MessageCounter count_messages(MessageTranscript const &transcript)
{
  MessageCounter counter;
  for (auto const &m : transcript)
  {
    if (m.sender.empty())
    {
      throw Error(Errc::malformed_transcript, "message without sender");
    }
    if (m.kind == MessageKind::registration)
    {
      ++counter[m.sender].registration;
      continue;
    }
    auto it = counter.find(m.sender);
    if (it == counter.end() || it->second.registration == 0)
    {
      throw Error(Errc::malformed_transcript, "bid from unregistered sender " + m.sender);
    }
    ++it->second.bidding;
    ++it->second.per_round[{m.auction_id, m.round}];
  }
  return counter;
}

}  // namespace anonauction::auction
