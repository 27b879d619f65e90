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

#include <random>

#include <gtest/gtest.h>

#include "shoi/binary_solver.h"
#include "shoi/branch_and_price.h"

namespace shoi {
namespace {

// Prices over an explicit column list.
class ListPricer : public Pricer {
 public:
  explicit ListPricer(std::vector<PricedColumn> columns)
      : columns_(std::move(columns)), forbidden_(columns_.size(), false) {}

  std::optional<PricingResult> Price(const std::vector<Rational>& duals,
                                     const Rational& cost_weight) override {
    std::optional<PricingResult> best;
    for (size_t i = 0; i < columns_.size(); ++i) {
      if (forbidden_[i]) continue;
      Rational rc = cost_weight * columns_[i].cost;
      for (const auto& [row, a] : columns_[i].coeffs) rc -= duals[row] * a;
      if (!best || rc < best->objective) best = PricingResult{rc, columns_[i]};
    }
    return best;
  }

  void Forbid(const PricedColumn& column) override {
    for (size_t i = 0; i < columns_.size(); ++i) {
      if (columns_[i].coeffs == column.coeffs) forbidden_[i] = true;
    }
  }

 private:
  std::vector<PricedColumn> columns_;
  std::vector<bool> forbidden_;
};

TEST(BranchAndPriceTest, MatchesIlpOnRandomCoveringMasters) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    int m = 1 + static_cast<int>(rng() % 4);
    MasterSeed seed;
    seed.artificial_cost = 50;
    for (int i = 0; i < m; ++i) {
      seed.relations.push_back(rng() % 3 ? Relation::kGe : Relation::kEq);
      seed.rhs.push_back(1 + static_cast<int>(rng() % 2));
    }
    std::vector<PricedColumn> columns;
    for (int mask = 1; mask < (1 << m); ++mask) {
      if (rng() % 3 == 0) continue;
      PricedColumn col;
      col.cost = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < m; ++i) {
        if ((mask >> i) & 1) col.coeffs.push_back({i, Rational(1)});
      }
      col.label = "c" + std::to_string(mask);
      columns.push_back(col);
    }
    LinearProgram ilp;
    for (int i = 0; i < m; ++i) ilp.AddVariable("h" + std::to_string(i), 50, true);
    for (const PricedColumn& c : columns) ilp.AddVariable(c.label, c.cost, true);
    for (int i = 0; i < m; ++i) {
      std::vector<std::pair<int, Rational>> row = {{i, 1}};
      for (size_t p = 0; p < columns.size(); ++p) {
        for (const auto& [r, a] : columns[p].coeffs) {
          if (r == i) row.push_back({m + static_cast<int>(p), a});
        }
      }
      ilp.AddRow(row, seed.relations[i], seed.rhs[i]);
    }
    LpOutcome expected = SolveIlp(ilp);
    ASSERT_EQ(expected.status, LpStatus::kOptimal);

    ListPricer pricer(columns);
    BpResult res = BranchAndPrice(seed, pricer, BpOptions{});
    ASSERT_TRUE(res.found);
    EXPECT_EQ(res.objective, expected.objective) << "trial " << trial;
  }
}

TEST(BranchAndPriceTest, TraceReportsIterations) {
  MasterSeed seed;
  seed.artificial_cost = 10;
  seed.relations = {Relation::kGe, Relation::kGe};
  seed.rhs = {1, 1};
  PricedColumn both{3, {{0, 1}, {1, 1}}, "both", {}};
  PricedColumn first{2, {{0, 1}}, "first", {}};
  PricedColumn second{2, {{1, 1}}, "second", {}};
  ListPricer pricer({both, first, second});
  std::vector<Rational> rmp;
  BpResult res = BranchAndPrice(seed, pricer, BpOptions{},
                                [&](const BpIteration& it) { rmp.push_back(it.rmp_objective); });
  ASSERT_TRUE(res.found);
  EXPECT_EQ(res.objective, 3);
  ASSERT_GE(rmp.size(), 2u);
  EXPECT_EQ(rmp.front(), 20);
  EXPECT_EQ(rmp.back(), 3);
}

}  // namespace
}  // namespace shoi
