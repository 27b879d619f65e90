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

#include "corpus.h"
#include "shoi/concept.h"
#include "shoi/parser.h"

namespace shoi {
namespace {

TEST(ConceptTest, AndFlattensSortsAndDeduplicates) {
  Concept a = Concept::Atom("A");
  Concept b = Concept::Atom("B");
  Concept nested = Concept::And({b, Concept::And({a, b})});
  EXPECT_EQ(nested, Concept::And({a, b}));
  EXPECT_EQ(Concept::And({}), Concept::Top());
  EXPECT_EQ(Concept::Or({a}), a);
}

TEST(ConceptTest, NnfPushesNegationInward) {
  Role r("R");
  Concept c = Concept::Not(Concept::Some(r, Concept::And({Concept::Atom("A"),
                                                          Concept::Atom("B")})));
  Concept expected = Concept::All(
      r, Concept::Or({Concept::Not(Concept::Atom("A")), Concept::Not(Concept::Atom("B"))}));
  EXPECT_EQ(Nnf(c), expected);
  EXPECT_TRUE(IsNnf(Nnf(c)));
  EXPECT_FALSE(IsNnf(c));
  EXPECT_EQ(Nnf(Concept::Not(Concept::Top())), Concept::Bottom());
}

TEST(ConceptTest, NnfIsIdempotentOnRandomConcepts) {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Concept c = corpus::RandomConcept(rng, 6);
    Concept n = Nnf(c);
    ASSERT_EQ(Nnf(n), n) << c.ToString();
    ASSERT_TRUE(IsNnf(n)) << c.ToString();
    ASSERT_EQ(Negate(Negate(n)), n) << c.ToString();
  }
}

TEST(ConceptTest, OneOfIsANominalSet) {
  Concept c = Concept::OneOf({"o2", "o1"});
  EXPECT_TRUE(c.IsNominalSet());
  EXPECT_EQ(c.NominalNames(), (std::vector<std::string>{"o1", "o2"}));
  EXPECT_FALSE(Concept::Atom("A").IsNominalSet());
}

TEST(ConceptTest, ClosureContainsSubconcepts) {
  Role r("R");
  Concept c = Concept::Some(r, Concept::And({Concept::Atom("A"), Concept::Nominal("o")}));
  ConceptSet cl = Closure(c);
  EXPECT_TRUE(cl.count(c));
  EXPECT_TRUE(cl.count(Concept::Atom("A")));
  EXPECT_TRUE(cl.count(Concept::Nominal("o")));
}

TEST(ConceptTest, RoleInverseIsInvolution) {
  Role r("R");
  EXPECT_EQ(r.Inv().Inv(), r);
  EXPECT_NE(r.Inv(), r);
}

}  // namespace
}  // namespace shoi
