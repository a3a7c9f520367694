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

#include "anonauction/harness/scenario.hpp"

#include "anonauction/auction/auction_manager.hpp"
#include "anonauction/auction/bidder.hpp"
#include "anonauction/registry/bulletin_board.hpp"
#include "anonauction/registry/registration_manager.hpp"
#include "anonauction/rng.hpp"

#include <future>
#include <map>

namespace anonauction::harness {

namespace {

using auction::AuctionManager;
using auction::Bid;
using auction::Bidder;
using auction::MessageKind;
using auction::OpenPurpose;
using group::OpCounter;
using group::Point;
using group::PublicGroup;
using ringsig::Ring;
using group::ScopedOpCount;

constexpr std::uint64_t kGroupStream  = 0;
constexpr std::uint64_t kSetupStream  = 1;
constexpr std::uint64_t kBidderStream = 100;

struct Actor
{
  Strategy            strategy;
  Bidder              bidder;
  Rng                 rng;
  std::uint64_t       valuation = 0;  // 0: unbounded
  bool                evicted   = false;
  bool                repudiated = false;
  std::optional<Ring> last_ring;
};

struct SignJob
{
  std::size_t   actor;
  std::uint64_t price;
  Ring          ring;
};

class CountingGuard
{
public:
  explicit CountingGuard(bool enabled)
    : previous_(OpCounter::enabled())
  {
    OpCounter::set_enabled(enabled);
  }
  ~CountingGuard()
  {
    OpCounter::set_enabled(previous_);
  }
  CountingGuard(CountingGuard const &)            = delete;
  CountingGuard &operator=(CountingGuard const &) = delete;

private:
  bool previous_;
};

Error with_context(std::string const &actor, Error const &e)
{
  return Error(e.code(), actor + ": " + e.what());
}

Ring choose_ring(ScenarioConfig const &cfg, PublicGroup const &group,
                 registry::BulletinBoard const &board, Actor &actor)
{
  std::vector<Point> active;
  for (auto const &enc : board.active_keys())
  {
    active.push_back(group.decode(enc));
  }
  if (cfg.ring_policy == RingPolicy::all_active)
  {
    return Ring(group, std::move(active));
  }

  std::vector<Point> others;
  for (auto const &p : active)
  {
    if (p != actor.bidder.published_key())
    {
      others.push_back(p);
    }
  }
  for (std::size_t i = others.size(); i > 1; --i)
  {
    std::swap(others[i - 1], others[actor.rng.next_u64() % i]);
  }
  std::size_t extra = std::min(cfg.ring_size - 1, others.size());
  others.resize(extra);
  others.push_back(actor.bidder.published_key());
  return Ring(group, std::move(others));
}

}  // namespace

std::string bidder_name(std::size_t index)
{
  return "bidder-" + std::to_string(index);
}

ScenarioResult run_scenario(ScenarioConfig const &cfg, bool count_ops)
{
  cfg.validate();
  CountingGuard counting(count_ops);
  ScenarioResult result{};

  registry::BulletinBoard board;
  std::optional<AuctionManager> am;
  std::vector<Actor>            actors;
  {
    ScopedOpCount scope;
    Rng           group_rng(Rng::derive_seed(cfg.seed, kGroupStream));
    auto gp = group::gen_group_params(cfg.p_bits, cfg.q_bits, group_rng,
                                      group::GroupGenOptions{cfg.max_cofactor});
    Rng  setup_rng(Rng::derive_seed(cfg.seed, kSetupStream));
    auto setup       = ringsig::setup(gp, cfg.k, setup_rng);
    result.trace_key = setup.trace_key;
    am.emplace(std::move(setup), board, auction::AdmissionOptions{cfg.monotonic});
    am->publish_params();
    result.params = am->params();
    result.counts.initial += scope.counts();
  }
  auto const &pp    = *am->params();
  auto const &group = pp.group;
  registry::RegistrationManager rm(group, board);

  {
    ScopedOpCount scope;
    for (std::size_t i = 0; i < cfg.strategies.size(); ++i)
    {
      Rng    rng(Rng::derive_seed(cfg.seed, kBidderStream + i));
      Bidder bidder(am->params(), to_bytes(bidder_name(i)), rng);
      std::uint64_t valuation =
          cfg.valuation_spread == 0 ? 0 : cfg.start_price + rng.next_u64() % cfg.valuation_spread;
      actors.push_back(Actor{cfg.strategies[i], std::move(bidder), rng, valuation, false, false, {}});
      try
      {
        rm.enroll(actors.back().bidder.registration_request(actors.back().rng));
      }
      catch (Error const &e)
      {
        throw with_context(bidder_name(i), e);
      }
      result.messages.push_back({bidder_name(i), MessageKind::registration});
    }
    result.counts.initial += scope.counts();
  }

  auto sign = [&](SignJob const &job, std::uint64_t auction_id, std::uint32_t round) {
    auto &actor = actors[job.actor];
    try
    {
      Bid bid = actor.evicted
                    ? actor.bidder.sign_bid(auction_id, round, job.price, job.ring, actor.rng)
                    : actor.bidder.place_bid(auction_id, round, job.price, job.ring, board, actor.rng);
      if (actor.strategy == Strategy::invalid_signature)
      {
        bid.signature.masked_key = group.curve().add(bid.signature.masked_key, group.g());
      }
      return bid;
    }
    catch (Error const &e)
    {
      throw with_context(bidder_name(job.actor), e);
    }
  };

  for (std::uint64_t auction_id = 1; auction_id <= cfg.auctions; ++auction_id)
  {
    am->open_auction(auction_id);

    for (std::uint32_t round = 1; round <= cfg.rounds; ++round)
    {
      // Prices are planned in roster order against the running high, so the
      // plan does not depend on when signatures finish.
      std::vector<SignJob> jobs;
      std::uint64_t        high = am->state(auction_id).high_price;
      for (std::size_t i = 0; i < actors.size(); ++i)
      {
        auto &actor = actors[i];
        if (actor.strategy == Strategy::sniper && round != cfg.rounds)
        {
          continue;
        }
        std::uint64_t price = high == 0 ? cfg.start_price : high + cfg.increment;
        if (actor.valuation != 0 && price > actor.valuation)
        {
          continue;
        }
        if (actor.evicted)
        {
          // An evicted bidder can only reuse a ring that still holds its key.
          if (actor.last_ring)
          {
            jobs.push_back({i, price, *actor.last_ring});
          }
          continue;
        }
        jobs.push_back({i, price, choose_ring(cfg, group, board, actor)});
        actor.last_ring = jobs.back().ring;
        high            = price;
      }

      std::vector<Bid> bids;
      {
        ScopedOpCount scope;
        if (cfg.concurrent)
        {
          std::vector<std::future<Bid>> pending;
          for (auto const &job : jobs)
          {
            pending.push_back(std::async(std::launch::async, sign, std::cref(job), auction_id, round));
          }
          for (auto &f : pending)
          {
            bids.push_back(f.get());
          }
        }
        else
        {
          for (auto const &job : jobs)
          {
            bids.push_back(sign(job, auction_id, round));
          }
        }
        result.counts.bidding += scope.counts();
        result.counts.signatures += bids.size();
      }

      std::vector<std::pair<std::size_t, Bid>> to_repudiate;
      for (std::size_t j = 0; j < jobs.size(); ++j)
      {
        auto const &job = jobs[j];
        result.messages.push_back({bidder_name(job.actor), MessageKind::bid, auction_id, round});
        auto admit = am->admit_bid(bids[j]);
        result.bids.push_back(BidOutcome{job.actor, auction_id, round, job.price, job.ring.size(),
                                         admit.admitted, admit.seq,
                                         admit.admitted ? Errc{} : admit.reason});
        auto &actor = actors[job.actor];
        if (admit.admitted && actor.strategy == Strategy::repudiator && !actor.repudiated)
        {
          bids[j].seq = admit.seq;
          to_repudiate.emplace_back(job.actor, bids[j]);
          actor.repudiated = true;
        }
      }

      for (auto const &[who, bid] : to_repudiate)
      {
        ScopedOpCount scope;
        auto          opened = am->open_protocol(rm, bid, OpenPurpose::repudiation);
        actors[who].evicted  = true;
        result.repudiations.push_back({who, bid.seq, opened.ring_position, opened.evicted_now});
        result.counts.opening += scope.counts();
      }

      if (round < cfg.rounds)
      {
        am->advance_round(auction_id);
      }
    }
    am->close_auction(auction_id);

    AuctionOutcome outcome{auction_id, 0, 0, std::nullopt, {}};
    std::optional<Bid> winner;
    {
      ScopedOpCount scope;
      try
      {
        winner = am->determine_winner(auction_id);
      }
      catch (Error const &e)
      {
        if (e.code() != Errc::no_valid_bid)
        {
          throw;
        }
      }
      result.counts.winner += scope.counts();
    }
    outcome.rejected_seqs = am->state(auction_id).rejected_seqs;
    if (winner)
    {
      outcome.winner_seq = winner->seq;
      outcome.price      = winner->price;
      ScopedOpCount scope;
      auto          opened = am->open_protocol(rm, *winner, OpenPurpose::winner);
      result.counts.opening += scope.counts();
      for (std::size_t i = 0; i < actors.size(); ++i)
      {
        if (opened.identity == actors[i].bidder.identity())
        {
          outcome.winner = i;
        }
      }
    }
    result.auctions.push_back(std::move(outcome));
  }

  result.transcript = board.serialize();
  return result;
}

}  // namespace anonauction::harness
