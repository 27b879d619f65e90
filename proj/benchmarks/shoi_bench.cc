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

#include <fstream>
#include <sstream>

#include <benchmark/benchmark.h>

#include "shoi/algebraic.h"
#include "shoi/generators.h"
#include "shoi/parser.h"
#include "shoi/tableau.h"

namespace {

void CheckGenerated(benchmark::State& state, const shoi::GeneratedOntology& gen,
                    shoi::Verdict expected) {
  shoi::KnowledgeBase kb = shoi::BuildKnowledgeBase(gen.doc);
  for (auto _ : state) {
    shoi::TableauResult r = shoi::CheckConsistency(kb);
    if (r.verdict != expected) state.SkipWithError("unexpected verdict");
    state.counters["nodes"] = static_cast<double>(r.stats.nodes_created);
    state.counters["am"] = static_cast<double>(r.stats.am_invocations);
  }
  state.counters["axioms"] = gen.metrics.axioms;
  state.counters["individuals"] = gen.metrics.individuals;
}

void BM_TestOntCons(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  CheckGenerated(state, shoi::GenTestOnt(n, shoi::TestOntVariant::kCons),
                 shoi::Verdict::kConsistent);
}
BENCHMARK(BM_TestOntCons)->Arg(5)->Arg(7)->Arg(10)->Arg(20)->Arg(40)
    ->Unit(benchmark::kMillisecond);

void BM_TestOntIncons(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  CheckGenerated(state, shoi::GenTestOnt(n, shoi::TestOntVariant::kIncons),
                 shoi::Verdict::kInconsistent);
}
BENCHMARK(BM_TestOntIncons)->Arg(5)->Arg(7)->Arg(10)->Arg(20)->Arg(40)
    ->Unit(benchmark::kMillisecond);

void BM_Members(benchmark::State& state) {
  auto family = state.range(0) == 0 ? shoi::MembersFamily::kCaProvinces
                                    : shoi::MembersFamily::kEuMembers;
  int extra = static_cast<int>(state.range(1));
  CheckGenerated(state, shoi::GenMembers(extra, family),
                 extra == 0 ? shoi::Verdict::kConsistent : shoi::Verdict::kInconsistent);
}
BENCHMARK(BM_Members)->Args({0, 0})->Args({0, 1})->Args({1, 0})->Args({1, 1})
    ->Unit(benchmark::kMillisecond);

void BM_WorkedExampleRootNode(benchmark::State& state) {
  std::ifstream in(std::string(SHOI_DATA_DIR) + "/worked_example.shoi");
  std::stringstream ss;
  ss << in.rdbuf();
  shoi::KnowledgeBase kb = shoi::BuildKnowledgeBase(shoi::ParseOntology(ss.str()));
  shoi::Role r("R");
  shoi::ConceptSet label = {shoi::Concept::Atom("A"),
                            shoi::Concept::Some(r, shoi::Concept::Atom("B")),
                            shoi::Concept::Some(r, shoi::Concept::OneOf({"o1"}))};
  shoi::DecompositionSet q = shoi::BuildDecomposition(label, {});
  shoi::PricingProblem pp = shoi::BuildPp(q, kb.tbox, kb.rbox);
  shoi::NodeSolveOptions opts;
  opts.paper_m = true;
  for (auto _ : state) {
    shoi::NodeSolution sol = shoi::SolveNode(q, pp, opts);
    benchmark::DoNotOptimize(sol.objective);
  }
}
BENCHMARK(BM_WorkedExampleRootNode)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
