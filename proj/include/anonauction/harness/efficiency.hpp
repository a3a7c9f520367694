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

#include "anonauction/group/group.hpp"
#include "anonauction/group/op_counter.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace anonauction::harness {

using group::OpCounts;

/// Published bidding-phase cost for a ring of l members and k message bits:
/// T_h + (5l+k+2) T_e + (5l+k+1) T_m + 2l T_i.
OpCounts published_signing_cost(std::size_t l, std::size_t k);

struct EfficiencyRow
{
  std::size_t l;
  OpCounts    measured;
  OpCounts    published;
};

struct AffineFit
{
  double slope        = 0;
  double intercept    = 0;
  double max_residual = 0;
};

/// Least-squares line through (x, y).
AffineFit fit_line(std::vector<double> const &x, std::vector<double> const &y);

struct EfficiencyReport
{
  std::size_t                k = 0;
  std::vector<EfficiencyRow> rows;
  AffineFit                  exponentiation_fit;
  bool                       within_bound  = false;  ///< measured T_e <= published, every l
  bool                       affine        = false;  ///< slope within 0.01 of an integer, exact fit
  bool                       single_hash   = false;  ///< one hash per signing, every l
  std::vector<std::string>   discrepancies;          ///< coefficients that differ from the published formula

  std::string table() const;
};

/// Compares measured per-signature counts (keyed by ring size) with the
/// published formula.
EfficiencyReport report_efficiency(std::map<std::size_t, OpCounts> const &measured, std::size_t k);

/// Counts the operations of one signing over a ring of `l` fresh keys.
OpCounts measure_signing(group::GroupParams const &group, std::size_t l, std::size_t k,
                         std::uint64_t seed);

}  // namespace anonauction::harness
