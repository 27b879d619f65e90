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

#include <gtest/gtest.h>

#include "shoi/oracle.h"
#include "shoi/parser.h"

namespace shoi {
namespace {

KnowledgeBase Kb(const std::string& text) {
  return BuildKnowledgeBase(ParseOntology(text));
}

TEST(OracleTest, ExtensionOfConstructors) {
  FiniteInterpretation m;
  m.size = 3;
  m.concepts["A"] = {0, 1};
  m.roles["R"] = {{0, 2}, {1, 1}};
  m.nominals["o"] = 2;
  Role r("R");
  EXPECT_EQ(Extension(Concept::Some(r, Concept::Nominal("o")), m), (std::set<int>{0}));
  EXPECT_EQ(Extension(Concept::All(r, Concept::Atom("A")), m), (std::set<int>{1, 2}));
  EXPECT_EQ(Extension(Concept::Some(r.Inv(), Concept::Atom("A")), m),
            (std::set<int>{1, 2}));
  EXPECT_EQ(Extension(Concept::Not(Concept::Atom("A")), m), (std::set<int>{2}));
}

TEST(OracleTest, IsModelChecksAxioms) {
  KnowledgeBase kb = Kb("(transitive R)\n(implies A (some R B))\n(instance a A)\n");
  FiniteInterpretation m;
  m.size = 2;
  m.concepts["A"] = {0};
  m.concepts["B"] = {1};
  m.roles["R"] = {{0, 1}};
  m.nominals["a"] = 0;
  std::string why;
  EXPECT_TRUE(IsModel(kb, m, &why)) << why;
  m.roles["R"].insert({1, 0});
  EXPECT_FALSE(IsModel(kb, m, &why));
  EXPECT_FALSE(why.empty());
}

TEST(OracleTest, FindsSmallModels) {
  KnowledgeBase kb = Kb("(implies A (some R B))\n(disjoint A B)\n(instance a A)\n");
  OracleResult r = BruteForceConsistency(kb, 4);
  ASSERT_EQ(r.status, OracleStatus::kConsistent);
  EXPECT_EQ(r.k, 2);
  EXPECT_TRUE(IsModel(kb, r.model));
}

TEST(OracleTest, NominalsBoundTheDomain) {
  KnowledgeBase kb = Kb("(implies top (oneof o))\n(instance a A)\n(instance b (not A))\n");
  EXPECT_EQ(BruteForceConsistency(kb, 4).status, OracleStatus::kNoModelUpTo);
}

TEST(OracleTest, DecisionBudgetThrows) {
  KnowledgeBase kb = Kb("(implies A (some R B))\n(implies B (some R C))\n"
                        "(implies C (some R D))\n(disjoint A B C D)\n(instance a A)\n");
  OracleOptions opts;
  opts.max_decisions = 1;
  EXPECT_THROW(BruteForceConsistency(kb, 4, opts), BudgetExceeded);
}

}  // namespace
}  // namespace shoi
