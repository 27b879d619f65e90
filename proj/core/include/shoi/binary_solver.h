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

#ifndef SHOI_BINARY_SOLVER_H_
#define SHOI_BINARY_SOLVER_H_

#include <cstdint>
#include <vector>

#include "shoi/linear_program.h"

namespace shoi {

struct BinaryOptions {
  // Tie-breaking among optimal solutions: the one whose sorted list of
  // lex_vars set to 1 is lexicographically smallest wins (a proper prefix
  // is smaller). Indices must be increasing.
  std::vector<int> lex_vars;
  // Search-tree node budget, 0 for none. Exceeding it throws
  // BudgetExceeded.
  int64_t node_limit = 0;
};

// Exact 0/1 minimization by depth-first branch and bound. Rows must have
// integral coefficients and right-hand sides; the objective may be any
// rational. Bounds in lp are ignored, every variable is binary.
LpOutcome SolveBinary(const LinearProgram& lp, const BinaryOptions& options = {});

// Generic integer program by LP-based branch and bound, most fractional
// variable first. Small instances only.
LpOutcome SolveIlp(const LinearProgram& lp, int64_t node_limit = 0);

}  // namespace shoi

#endif  // SHOI_BINARY_SOLVER_H_
