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

#include "shoi/simplex.h"

namespace shoi {
namespace {

// Beale's cycling example; Bland's rule has to terminate on it.
TEST(SimplexTest, BealeExampleTerminates) {
  LinearProgram lp;
  int x4 = lp.AddVariable("x4", Rational(-3, 4));
  int x5 = lp.AddVariable("x5", 20);
  int x6 = lp.AddVariable("x6", Rational(-1, 2));
  int x7 = lp.AddVariable("x7", 6);
  lp.AddRow({{x4, Rational(1, 4)}, {x5, -8}, {x6, -1}, {x7, 9}}, Relation::kLe, 0);
  lp.AddRow({{x4, Rational(1, 2)}, {x5, -12}, {x6, Rational(-1, 2)}, {x7, 3}},
            Relation::kLe, 0);
  lp.AddRow({{x6, 1}}, Relation::kLe, 1);
  SetBasisSignatureChecks(true);
  int64_t repeats = GlobalSolverStats().basis_repeats;
  LpOutcome out = SolveLp(lp);
  EXPECT_EQ(GlobalSolverStats().basis_repeats, repeats);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.objective, Rational(-5, 4));
}

TEST(SimplexTest, DualsCertifyOptimum) {
  // min x + 2y, x + y >= 3, y >= 1, x <= 5.
  LinearProgram lp;
  int x = lp.AddVariable("x", 1);
  int y = lp.AddVariable("y", 2);
  lp.AddRow({{x, 1}, {y, 1}}, Relation::kGe, 3);
  lp.AddRow({{y, 1}}, Relation::kGe, 1);
  lp.AddRow({{x, 1}}, Relation::kLe, 5);
  LpOutcome out = SolveLp(lp);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.objective, 4);
  EXPECT_EQ(out.primal[x], 2);
  EXPECT_EQ(out.primal[y], 1);
  Rational dual_obj = 3 * out.duals[0] + 1 * out.duals[1] + 5 * out.duals[2];
  EXPECT_EQ(dual_obj, out.objective);
}

TEST(SimplexTest, DetectsInfeasibleAndUnbounded) {
  LinearProgram inf;
  int x = inf.AddVariable("x", 1);
  inf.AddRow({{x, 1}}, Relation::kGe, 2);
  inf.AddRow({{x, 1}}, Relation::kLe, 1);
  EXPECT_EQ(SolveLp(inf).status, LpStatus::kInfeasible);

  LinearProgram unb;
  int y = unb.AddVariable("y", -1);
  unb.AddRow({{y, 1}}, Relation::kGe, 1);
  EXPECT_EQ(SolveLp(unb).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, AddColumnContinuesFromBasis) {
  LinearProgram lp;
  int h = lp.AddVariable("h", 100);
  lp.AddRow({{h, 1}}, Relation::kGe, 1);
  Simplex s(lp);
  ASSERT_EQ(s.Solve(), LpStatus::kOptimal);
  EXPECT_EQ(s.Outcome().objective, 100);
  s.AddColumn(3, {{0, 1}});
  ASSERT_EQ(s.Solve(), LpStatus::kOptimal);
  EXPECT_EQ(s.Outcome().objective, 3);
}

// Two-variable programs in a box, against vertex enumeration.
TEST(SimplexTest, MatchesVertexEnumeration) {
  std::mt19937 rng(21);
  auto coef = [&] { return Rational(static_cast<int>(rng() % 11) - 5); };
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp;
    lp.AddVariable("x", coef());
    lp.AddVariable("y", coef());
    struct Half {
      Rational a, b, c;  // a x + b y >= c
    };
    std::vector<Half> hs = {{1, 0, 0}, {0, 1, 0}, {-1, 0, -10}, {0, -1, -10}};
    lp.AddRow({{0, 1}}, Relation::kLe, 10);
    lp.AddRow({{1, 1}}, Relation::kLe, 10);
    int extra = static_cast<int>(rng() % 4);
    for (int i = 0; i < extra; ++i) {
      Half h{coef(), coef(), coef()};
      bool ge = rng() % 2;
      lp.AddRow({{0, h.a}, {1, h.b}}, ge ? Relation::kGe : Relation::kLe, h.c);
      hs.push_back(ge ? h : Half{-h.a, -h.b, -h.c});
    }
    std::optional<Rational> best;
    for (size_t i = 0; i < hs.size(); ++i) {
      for (size_t j = i + 1; j < hs.size(); ++j) {
        Rational det = hs[i].a * hs[j].b - hs[i].b * hs[j].a;
        if (det == 0) continue;
        Rational x = (hs[i].c * hs[j].b - hs[i].b * hs[j].c) / det;
        Rational y = (hs[i].a * hs[j].c - hs[i].c * hs[j].a) / det;
        bool ok = true;
        for (const Half& h : hs) ok = ok && h.a * x + h.b * y >= h.c;
        if (!ok) continue;
        Rational v = lp.objective[0] * x + lp.objective[1] * y;
        if (!best || v < *best) best = v;
      }
    }
    LpOutcome out;
    try {
      out = SolveLp(lp);
    } catch (const std::exception& e) {
      FAIL() << e.what() << "\n" << DumpLp(lp);
    }
    if (!best) {
      EXPECT_EQ(out.status, LpStatus::kInfeasible) << DumpLp(lp);
    } else {
      ASSERT_EQ(out.status, LpStatus::kOptimal) << DumpLp(lp);
      EXPECT_EQ(out.objective, *best) << DumpLp(lp);
    }
  }
}

}  // namespace
}  // namespace shoi
