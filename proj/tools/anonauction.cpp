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

#include "anonauction/error.hpp"
#include "anonauction/harness/efficiency.hpp"
#include "anonauction/harness/scenario.hpp"
#include "anonauction/harness/transcript.hpp"
#include "anonauction/rng.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace anonauction;

constexpr int kSuccess      = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage        = 2;

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw UsageError("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(std::string const &path, std::string const &contents)
{
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents))
  {
    throw UsageError("cannot write " + path);
  }
}

std::string trim_line(std::string s)
{
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
  {
    s.pop_back();
  }
  return s;
}

std::string params_text(ringsig::PublicParams const &pp)
{
  ByteWriter out;
  pp.serialize_to(out);
  return to_hex(out.bytes()) + "\n";
}

ringsig::PublicParams load_params(std::string const &path)
{
  Bytes      raw = from_hex(trim_line(read_file(path)));
  ByteReader in(raw);
  auto       pp = ringsig::PublicParams::deserialize(in);
  in.expect_end();
  return pp;
}

std::string tracekey_text(ringsig::TraceKey const &tk)
{
  return tk.order_q.get_str(16) + "\n";
}

ringsig::TraceKey load_tracekey(std::string const &path)
{
  ringsig::TraceKey tk;
  if (tk.order_q.set_str(trim_line(read_file(path)), 16) != 0 || tk.order_q <= 1)
  {
    throw UsageError(path + " does not hold a trace key");
  }
  return tk;
}

void print_counts(char const *phase, group::OpCounts const &c)
{
  std::printf("  %-8s exp=%llu mul=%llu inv=%llu hash=%llu pairing=%llu\n", phase,
              static_cast<unsigned long long>(c.exponentiations),
              static_cast<unsigned long long>(c.multiplications),
              static_cast<unsigned long long>(c.inversions),
              static_cast<unsigned long long>(c.hashes),
              static_cast<unsigned long long>(c.pairings));
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Anonymous auction protocol simulator"};
  app.require_subcommand(1);

  unsigned      p_bits = 16, q_bits = 16;
  std::size_t   k    = 160;
  std::uint64_t seed = 1;
  std::string   out_path, tracekey_path;
  auto         *setup = app.add_subcommand("setup", "Generate public parameters and a trace key");
  setup->add_option("--p-bits", p_bits, "Bit length of p")->required();
  setup->add_option("--q-bits", q_bits, "Bit length of q")->required();
  setup->add_option("--k", k, "Message hash length in bits")->required();
  setup->add_option("--seed", seed, "RNG seed")->required();
  setup->add_option("--out", out_path, "Public parameters file")->required();
  setup->add_option("--tracekey", tracekey_path, "Trace key file (default: <out>.tracekey)");

  std::string scenario_path, transcript_path, params_out, tracekey_out;
  bool        show_counts = false;
  auto       *run = app.add_subcommand("run", "Run a scenario and write its transcript");
  run->add_option("--scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", transcript_path, "Transcript file")->required();
  run->add_flag("--counts", show_counts, "Print operation counts per phase");
  run->add_option("--params-out", params_out, "Also write the public parameters");
  run->add_option("--tracekey-out", tracekey_out, "Also write the trace key");

  std::string verify_path;
  auto       *verify = app.add_subcommand("verify", "Replay a transcript with public data only");
  verify->add_option("--transcript", verify_path, "Transcript file")->required();

  std::string   trace_transcript, trace_params, trace_key;
  std::uint64_t trace_seq = 0;
  auto         *trace = app.add_subcommand("trace", "Identify the signer of a posted bid");
  trace->add_option("--transcript", trace_transcript, "Transcript file")->required();
  trace->add_option("--seq", trace_seq, "Seq of the bid-posted record")->required();
  trace->add_option("--params", trace_params, "Public parameters file")->required();
  trace->add_option("--tracekey", trace_key, "Trace key file")->required();

  std::size_t eff_k = 160;
  auto       *efficiency = app.add_subcommand("efficiency", "Compare signing costs with the published formula");
  efficiency->add_option("--p-bits", p_bits, "Bit length of p");
  efficiency->add_option("--q-bits", q_bits, "Bit length of q");
  efficiency->add_option("--k", eff_k, "Message hash length in bits");
  efficiency->add_option("--seed", seed, "RNG seed");

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kUsage;
  }

  try
  {
    if (*setup)
    {
      Rng  group_rng(Rng::derive_seed(seed, 0));
      auto gp = group::gen_group_params(p_bits, q_bits, group_rng);
      Rng  setup_rng(Rng::derive_seed(seed, 1));
      auto result = ringsig::setup(gp, k, setup_rng);
      write_file(out_path, params_text(result.params));
      write_file(tracekey_path.empty() ? out_path + ".tracekey" : tracekey_path,
                 tracekey_text(result.trace_key));
      std::printf("n = %s (%zu bits), ell = %s\n", gp.pub.n().get_str().c_str(),
                  mpz_sizeinbase(gp.pub.n().get_mpz_t(), 2), gp.pub.ell().get_str().c_str());
      return kSuccess;
    }

    if (*run)
    {
      auto cfg    = harness::parse_scenario(read_file(scenario_path));
      auto result = harness::run_scenario(cfg);
      write_file(transcript_path, result.transcript);
      if (!params_out.empty())
      {
        write_file(params_out, params_text(*result.params));
      }
      if (!tracekey_out.empty())
      {
        write_file(tracekey_out, tracekey_text(result.trace_key));
      }
      for (auto const &r : result.repudiations)
      {
        std::printf("repudiation: %s (bid seq %llu) %s\n", harness::bidder_name(r.bidder).c_str(),
                    static_cast<unsigned long long>(r.seq), r.evicted ? "evicted" : "already evicted");
      }
      for (auto const &a : result.auctions)
      {
        if (a.winner_seq == 0)
        {
          std::printf("auction %llu: no valid bid\n", static_cast<unsigned long long>(a.auction_id));
          continue;
        }
        std::printf("auction %llu: winner %s at price %llu (seq %llu), %zu rejected\n",
                    static_cast<unsigned long long>(a.auction_id),
                    a.winner ? harness::bidder_name(*a.winner).c_str() : "?",
                    static_cast<unsigned long long>(a.price),
                    static_cast<unsigned long long>(a.winner_seq), a.rejected_seqs.size());
      }
      if (show_counts)
      {
        std::printf("operation counts (%zu signatures):\n", result.counts.signatures);
        print_counts("initial", result.counts.initial);
        print_counts("bidding", result.counts.bidding);
        print_counts("winner", result.counts.winner);
        print_counts("opening", result.counts.opening);
      }
      return kSuccess;
    }

    if (*verify)
    {
      auto report = harness::verify_transcript(read_file(verify_path));
      if (!report.valid)
      {
        std::printf("invalid at seq %llu: %s\n", static_cast<unsigned long long>(report.failing_seq),
                    report.reason.c_str());
        return kVerifyFailed;
      }
      std::printf("valid (%zu records)\n", report.records);
      for (auto const &w : report.winners)
      {
        std::printf("auction %llu: winner seq %llu at price %llu\n",
                    static_cast<unsigned long long>(w.auction_id),
                    static_cast<unsigned long long>(w.winner_seq),
                    static_cast<unsigned long long>(w.price));
      }
      return kSuccess;
    }

    if (*trace)
    {
      auto board  = registry::BulletinBoard::parse(read_file(trace_transcript));
      auto params = load_params(trace_params);
      if (!(harness::transcript_params(board) == params))
      {
        std::printf("parameters do not match the transcript\n");
        return kVerifyFailed;
      }
      auto tk  = load_tracekey(trace_key);
      auto bid = harness::bid_at(board, params, trace_seq);
      try
      {
        auto t = ringsig::trace(tk, params, bid.ring, bid.message(), bid.signature);
        std::printf("seq %llu: ring position %zu, published key %s\n",
                    static_cast<unsigned long long>(trace_seq), t.index,
                    to_hex(params.group.encode(t.published_key)).c_str());
      }
      catch (Error const &e)
      {
        std::printf("seq %llu: %s (%s)\n", static_cast<unsigned long long>(trace_seq),
                    std::string(to_string(e.code())).c_str(), e.what());
        return kVerifyFailed;
      }
      return kSuccess;
    }

    if (*efficiency)
    {
      Rng                                    rng(seed);
      auto                                   gp = group::gen_group_params(p_bits, q_bits, rng);
      std::map<std::size_t, group::OpCounts> measured;
      for (std::size_t l : {1, 2, 4, 8})
      {
        measured[l] = harness::measure_signing(gp, l, eff_k, Rng::derive_seed(seed, l));
      }
      std::fputs(harness::report_efficiency(measured, eff_k).table().c_str(), stdout);
      return kSuccess;
    }
  }
  catch (UsageError const &e)
  {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  catch (Error const &e)
  {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == Errc::invalid_argument ? kUsage : kVerifyFailed;
  }
  return kUsage;
}
