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

#ifndef SHOI_SIMPLEX_H_
#define SHOI_SIMPLEX_H_

#include <set>
#include <utility>
#include <vector>

#include "shoi/linear_program.h"

namespace shoi {

// Dense exact-rational tableau simplex with Bland's rule. Upper bounds and
// nonzero lower bounds become explicit rows. A row whose structural column
// is a unit vector starts with that column basic; other rows without a
// slack of the right sign get an artificial and go through phase 1.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp);

  // Optimizes from the current basis.
  LpStatus Solve();

  // Appends a structural variable with lower bound 0 and no upper bound.
  // coeffs index the rows of the original program. The current basis stays
  // primal feasible, so a following Solve() continues from it.
  int AddColumn(const Rational& cost,
                const std::vector<std::pair<int, Rational>>& coeffs);

  // Valid after Solve(). Duals cover the original rows only.
  LpOutcome Outcome() const;

  int num_rows() const { return num_orig_rows_; }
  int num_structural() const { return num_struct_; }

 private:
  enum class ColKind { kStructural, kSlack, kArtificial };
  struct ColInfo {
    ColKind kind;
    int index;  // structural var, or row for slack/artificial
  };

  long long BlandKey(int col) const;
  void AppendColumn(const ColInfo& info, const Rational& cost,
                    const std::vector<Rational>& dense);
  void ComputeReducedCosts(const std::vector<Rational>& costs);
  LpStatus Iterate(const std::vector<Rational>& costs, bool allow_artificial);
  void Pivot(int row, int col);
  bool HasPositiveArtificial() const;
  void DriveOutArtificials();
  void Verify(const LpOutcome& out) const;

  int num_orig_rows_ = 0;
  int num_struct_ = 0;
  int m_ = 0;
  std::vector<bool> flipped_;
  std::vector<Rational> internal_rhs_;
  std::vector<Rational> lower_;
  std::vector<LpRow> orig_rows_;
  Rational objective_offset_;

  std::vector<ColInfo> cols_;
  std::vector<Rational> cost_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<int> init_col_;
  std::vector<Rational> reduced_;
  LpStatus status_ = LpStatus::kInfeasible;
  int pivots_ = 0;
  std::set<std::vector<int>> seen_bases_;
};

LpOutcome SolveLp(const LinearProgram& lp);

}  // namespace shoi

#endif  // SHOI_SIMPLEX_H_
