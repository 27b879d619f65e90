// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SHOI_BRANCH_AND_PRICE_H_
#define SHOI_BRANCH_AND_PRICE_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shoi/linear_program.h"

namespace shoi {

// A master-problem column: cost and 0/1 coefficients on the master rows.
struct PricedColumn {
  Rational cost;
  std::vector<std::pair<int, Rational>> coeffs;
  std::string label;
  // Opaque pricer payload (the PP solution that produced the column).
  std::vector<int> pattern;
};

struct PricingResult {
  // Optimal value of cost_weight·cost − Σ duals·a over all columns the
  // pricer can produce.
  Rational objective;
  PricedColumn column;
};

class Pricer {
 public:
  virtual ~Pricer() = default;
  // duals has one entry per master row.
  virtual std::optional<PricingResult> Price(const std::vector<Rational>& duals,
                                             const Rational& cost_weight) = 0;
  // Excludes a column from every later Price() call.
  virtual void Forbid(const PricedColumn& column) = 0;
};

struct MasterSeed {
  std::vector<Relation> relations;
  std::vector<Rational> rhs;
  std::vector<std::string> row_names;
  // Cost of the artificial variable attached to each row.
  Rational artificial_cost;
  // Columns in the RMP before the first pricing round.
  std::vector<PricedColumn> initial_columns;
  // An artificial cost no integral optimum can prefer over a feasible
  // solution. When the root relaxation keeps an artificial, phase 1 decides
  // LP feasibility and, if feasible, the root is re-solved with this cost.
  std::optional<Rational> safe_artificial_cost;
};

struct BpOptions {
  int64_t max_nodes = 10000;
  int64_t max_iterations = 1000000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct BpIteration {
  int bp_node = 0;
  int iteration = 0;
  Rational rmp_objective;
  std::vector<Rational> duals;
  Rational pp_objective;
  // Column added after this iteration, if any.
  std::optional<PricedColumn> entering;
};

using BpTraceFn = std::function<void(const BpIteration&)>;

struct BpResult {
  // False when no integral solution exists even with artificials, which
  // only happens if branching bounds conflict everywhere.
  bool found = false;
  Rational objective;
  // Pool index and value of every column at a positive value.
  std::vector<std::pair<int, Rational>> selected;
  std::vector<Rational> artificials;
  bool artificial_positive = false;
  // Phase 1 proved the LP relaxation infeasible; nothing was branched.
  bool lp_infeasible = false;
  Rational artificial_cost;
  std::vector<PricedColumn> pool;
  int bp_nodes = 0;
  int iterations = 0;
};

// Branch-and-price on min Σ M·h_i + Σ cost_p·x_p subject to the seed rows,
// with one artificial h_i per row. Columns come from the pricer. Branching
// picks the most fractional x_p (lowest index on ties) and explores the
// x_p ≥ ⌈v⌉ side first. Throws BudgetExceeded.
// An integral solution with a positive artificial under the safe cost means
// the master has no integral solution.
BpResult BranchAndPrice(const MasterSeed& seed, Pricer& pricer,
                        const BpOptions& options, const BpTraceFn& trace = {});

// Column generation for min Σ h_i with columns at cost 0: the optimum is 0
// iff the LP relaxation of the master is feasible. When pool is given it
// receives every column the run ends with, seed columns included.
Rational MinimizeArtificials(const MasterSeed& seed, Pricer& pricer,
                             const BpOptions& options,
                             std::vector<PricedColumn>* pool = nullptr);

}  // namespace shoi

#endif  // SHOI_BRANCH_AND_PRICE_H_
