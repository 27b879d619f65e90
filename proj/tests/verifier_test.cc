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

#include "shoi/parser.h"
#include "shoi/tableau.h"
#include "shoi/verifier.h"

namespace shoi {
namespace {

const PropertyResult& Prop(const VerificationReport& r, const std::string& name) {
  for (const PropertyResult& p : r.properties) {
    if (p.name == name) return p;
  }
  throw std::out_of_range(name);
}

struct Fixture {
  KnowledgeBase kb;
  CompletionGraph graph;
};

Fixture Consistent(const std::string& text) {
  Fixture f;
  f.kb = BuildKnowledgeBase(ParseOntology(text));
  TableauResult r = CheckConsistency(f.kb);
  EXPECT_EQ(r.verdict, Verdict::kConsistent);
  f.graph = r.graph;
  return f;
}

TEST(VerifierTest, ReportsTenProperties) {
  Fixture f = Consistent("(implies A (some R B))\n(instance a A)\n");
  VerificationReport rep = VerifyTableauProperties(f.graph, f.kb.tbox, f.kb.rbox);
  EXPECT_EQ(rep.properties.size(), 10u);
  EXPECT_TRUE(rep.AllPassed()) << rep.ToString();
}

TEST(VerifierTest, DetectsClashInLabel) {
  Fixture f = Consistent("(instance a A)\n");
  f.graph.node(0).label.insert(Concept::Not(Concept::Atom("A")));
  VerificationReport rep = VerifyTableauProperties(f.graph, f.kb.tbox, f.kb.rbox);
  EXPECT_FALSE(Prop(rep, "P1").passed);
  EXPECT_FALSE(rep.AllPassed());
}

TEST(VerifierTest, DetectsMissingWitness) {
  Fixture f = Consistent("(instance a A)\n(implies B (some R C))\n");
  f.graph.node(0).label.insert(Concept::Some(Role("R"), Concept::Atom("C")));
  VerificationReport rep = VerifyTableauProperties(f.graph, f.kb.tbox, f.kb.rbox);
  EXPECT_FALSE(Prop(rep, "P5").passed);
}

TEST(VerifierTest, DetectsDuplicatedNominal) {
  Fixture f = Consistent("(instance a (oneof o))\n(instance b B)\n");
  int b = -1;
  for (int x : f.graph.LiveNodes()) {
    if (f.graph.node(x).name == "b") b = x;
  }
  ASSERT_GE(b, 0);
  f.graph.node(b).label.insert(Concept::Nominal("o"));
  VerificationReport rep = VerifyTableauProperties(f.graph, f.kb.tbox, f.kb.rbox);
  EXPECT_FALSE(Prop(rep, "P9").passed);
  EXPECT_FALSE(Prop(rep, "P10").passed);
}

TEST(VerifierTest, DetectsNominalCardinality) {
  Fixture f = Consistent("(instance a (oneof o))\n");
  f.graph.node(0).cardinality = 2;
  VerificationReport rep = VerifyTableauProperties(f.graph, f.kb.tbox, f.kb.rbox);
  EXPECT_FALSE(Prop(rep, "P10").passed);
}

TEST(VerifierTest, DetectsBrokenInverseEdge) {
  Fixture f = Consistent("(instance a (some R B))\n");
  int a = 0;
  ASSERT_FALSE(f.graph.node(a).edges.empty());
  int y = f.graph.node(a).edges.begin()->first;
  f.graph.node(y).edges[a].clear();
  VerificationReport rep = VerifyTableauProperties(f.graph, f.kb.tbox, f.kb.rbox);
  EXPECT_FALSE(Prop(rep, "P8").passed);
}

}  // namespace
}  // namespace shoi
