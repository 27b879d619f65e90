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
#include "shoi/parser.h"

namespace shoi {
namespace {

TEST(ParserTest, RoundTripsRandomConcepts) {
  std::mt19937 rng(12);
  for (int i = 0; i < 1000; ++i) {
    Concept c = corpus::RandomConcept(rng, 6);
    std::string text = RenderConcept(c);
    ASSERT_EQ(ParseConcept(text), c) << text;
  }
}

TEST(ParserTest, ParsesStatementsAndIndividuals) {
  OntologyDocument doc = ParseOntology(
      "; comment\n"
      "(transitive T)\n"
      "(subrole R S)\n"
      "(implies A (some R B))\n"
      "(related a b R)\n"
      "(instance b (oneof o1))\n");
  ASSERT_EQ(doc.statements.size(), 5u);
  EXPECT_EQ(doc.statements[0].kind, Statement::Kind::kTransitive);
  EXPECT_EQ(doc.asserted_individuals, (std::vector<std::string>{"a", "b"}));
}

TEST(ParserTest, DocumentRenderingReparses) {
  const char* text =
      "(subrole R S)\n(implies A (and (some R B) (all (inv S) (oneof o1 o2))))\n"
      "(disjoint B o1)\n(instance a A)\n";
  OntologyDocument doc = ParseOntology(text);
  OntologyDocument again = ParseOntology(RenderDocument(doc));
  EXPECT_EQ(RenderDocument(again), RenderDocument(doc));
}

TEST(ParserTest, RejectsMalformedInput) {
  EXPECT_THROW(ParseOntology("(implies A"), ParseError);
  EXPECT_THROW(ParseOntology("(frobnicate A B)"), ParseError);
  EXPECT_THROW(ParseConcept("(some R)"), ParseError);
  EXPECT_THROW(ParseConcept(")"), ParseError);
}

TEST(ParserTest, ErrorCarriesPosition) {
  try {
    ParseOntology("(implies A B)\n  (bogus)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GE(e.column(), 3);
  }
}

}  // namespace
}  // namespace shoi
