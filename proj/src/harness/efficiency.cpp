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

#include "anonauction/harness/efficiency.hpp"

#include "anonauction/error.hpp"
#include "anonauction/rng.hpp"
#include "anonauction/ringsig/scheme.hpp"

#include <cmath>
#include <cstdio>

namespace anonauction::harness {

namespace {

using group::Point;
using ringsig::Ring;

void compare(std::vector<std::string> &out, char const *name, std::size_t l,
             std::uint64_t measured, std::uint64_t published)
{
  if (measured != published)
  {
    out.push_back("l=" + std::to_string(l) + " " + name + ": measured " +
                  std::to_string(measured) + ", published " + std::to_string(published));
  }
}

}  // namespace

OpCounts published_signing_cost(std::size_t l, std::size_t k)
{
  OpCounts c;
  c.exponentiations = 5 * l + k + 2;
  c.multiplications = 5 * l + k + 1;
  c.inversions      = 2 * l;
  c.hashes          = 1;
  return c;
}

AffineFit fit_line(std::vector<double> const &x, std::vector<double> const &y)
{
  if (x.size() != y.size() || x.size() < 2)
  {
    throw Error(Errc::invalid_argument, "need at least two points to fit a line");
  }
  double n  = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
  {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  AffineFit fit;
  fit.slope     = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  for (std::size_t i = 0; i < x.size(); ++i)
  {
    fit.max_residual = std::max(fit.max_residual, std::abs(y[i] - fit.slope * x[i] - fit.intercept));
  }
  return fit;
}

EfficiencyReport report_efficiency(std::map<std::size_t, OpCounts> const &measured, std::size_t k)
{
  EfficiencyReport report;
  report.k            = k;
  report.within_bound = true;
  report.single_hash  = true;
  std::vector<double> ls, exps;
  for (auto const &[l, counts] : measured)
  {
    auto published = published_signing_cost(l, k);
    report.rows.push_back({l, counts, published});
    report.within_bound = report.within_bound && counts.exponentiations <= published.exponentiations;
    report.single_hash  = report.single_hash && counts.hashes == 1;
    compare(report.discrepancies, "exponentiations", l, counts.exponentiations, published.exponentiations);
    compare(report.discrepancies, "multiplications", l, counts.multiplications, published.multiplications);
    compare(report.discrepancies, "inversions", l, counts.inversions, published.inversions);
    compare(report.discrepancies, "hashes", l, counts.hashes, published.hashes);
    ls.push_back(static_cast<double>(l));
    exps.push_back(static_cast<double>(counts.exponentiations));
  }
  if (ls.size() >= 2)
  {
    report.exponentiation_fit = fit_line(ls, exps);
    double slope              = report.exponentiation_fit.slope;
    report.affine = std::abs(slope - std::round(slope)) <= 0.01 &&
                    report.exponentiation_fit.max_residual <= 0.01;
  }
  return report;
}

std::string EfficiencyReport::table() const
{
  std::string out;
  char        line[160];
  std::snprintf(line, sizeof line, "%4s  %9s %9s  %9s %9s  %6s %6s  %5s %5s  %8s\n", "l", "T_e", "(pub)",
                "T_m", "(pub)", "T_i", "(pub)", "T_h", "(pub)", "pairings");
  out += line;
  for (auto const &r : rows)
  {
    std::snprintf(line, sizeof line, "%4zu  %9llu %9llu  %9llu %9llu  %6llu %6llu  %5llu %5llu  %8llu\n",
                  r.l, static_cast<unsigned long long>(r.measured.exponentiations),
                  static_cast<unsigned long long>(r.published.exponentiations),
                  static_cast<unsigned long long>(r.measured.multiplications),
                  static_cast<unsigned long long>(r.published.multiplications),
                  static_cast<unsigned long long>(r.measured.inversions),
                  static_cast<unsigned long long>(r.published.inversions),
                  static_cast<unsigned long long>(r.measured.hashes),
                  static_cast<unsigned long long>(r.published.hashes),
                  static_cast<unsigned long long>(r.measured.pairings));
    out += line;
  }
  std::snprintf(line, sizeof line, "k=%zu  T_e fit: %.4f*l + %.4f (max residual %.4f)\n", k,
                exponentiation_fit.slope, exponentiation_fit.intercept, exponentiation_fit.max_residual);
  out += line;
  out += std::string("T_e within published bound: ") + (within_bound ? "yes" : "no") + "\n";
  out += std::string("T_e affine in l: ") + (affine ? "yes" : "no") + "\n";
  out += std::string("one hash per signature: ") + (single_hash ? "yes" : "no") + "\n";
  if (!discrepancies.empty())
  {
    out += "differs from the published formula:\n";
    for (auto const &d : discrepancies)
    {
      out += "  " + d + "\n";
    }
  }
  return out;
}

OpCounts measure_signing(group::GroupParams const &group, std::size_t l, std::size_t k,
                         std::uint64_t seed)
{
  Rng  rng(seed);
  auto setup = ringsig::setup(group, k, rng);
  auto const &pp = setup.params;
  std::vector<ringsig::BidderKeyPair> keys;
  std::vector<Point>                  published;
  for (std::size_t i = 0; i < l; ++i)
  {
    keys.push_back(ringsig::keygen(pp, rng));
    published.push_back(keys.back().published_key);
  }
  Ring        ring(pp.group, published);
  auto const &signer = keys.front();
  auto        index  = *ring.find(signer.published_key);
  Bytes       msg    = to_bytes("efficiency probe");

  group::ScopedOpCount scope;
  ringsig::sign(pp, ring, index, signer, msg, rng);
  return scope.counts();
}

}  // namespace anonauction::harness
