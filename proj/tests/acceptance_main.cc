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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.h"
#include "shoi/algebraic.h"
#include "shoi/generators.h"
#include "shoi/oracle.h"
#include "shoi/parser.h"
#include "shoi/tableau.h"
#include "shoi/trace.h"
#include "shoi/verifier.h"

namespace {

using shoi::Rational;
using Clock = std::chrono::steady_clock;
using Json = nlohmann::json;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

shoi::KnowledgeBase LoadWorkedExample() {
  std::ifstream in(std::string(SHOI_DATA_DIR) + "/worked_example.shoi");
  std::stringstream ss;
  ss << in.rdbuf();
  return shoi::BuildKnowledgeBase(shoi::ParseOntology(ss.str()));
}

struct TracedRun {
  shoi::KnowledgeBase kb;
  shoi::TableauResult result;
  std::vector<Json> records;
  double seconds = 0;
};

// Runs the worked example with M pinned to 10 and reads the trace back
// through the versioned line format.
TracedRun RunWorkedExample() {
  TracedRun run;
  run.kb = LoadWorkedExample();
  std::stringstream lines;
  shoi::TraceWriter writer(lines);
  shoi::TableauOptions opts;
  opts.paper_m = true;
  opts.big_m = Rational(10);
  opts.trace = writer.AsFn();
  auto start = Clock::now();
  run.result = shoi::CheckConsistency(run.kb, opts);
  run.seconds = Seconds(start);
  run.records = shoi::ReadTrace(lines);
  return run;
}

const Json* FirstAm(const std::vector<Json>& records, const std::string& node) {
  for (const Json& r : records) {
    if (r.value("event", "") == "am" && r["node"] == node) return &r;
  }
  return nullptr;
}

std::vector<std::string> Sequence(const Json& am, const char* field) {
  std::vector<std::string> out;
  for (const Json& it : am["iterations"]) out.push_back(it[field].get<std::string>());
  return out;
}

std::string Show(const std::vector<std::string>& v) {
  std::string out;
  for (const std::string& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::multiset<std::string> Columns(const Json& am) {
  std::multiset<std::string> out;
  for (const Json& c : am["columns"]) {
    out.insert(c["label"].get<std::string>() + "=" + std::to_string(c["value"].get<int>()));
  }
  return out;
}

std::set<std::string> Sigma(const Json& am) {
  std::set<std::string> out;
  for (const Json& t : am["sigma"]) out.insert(t.get<std::string>());
  return out;
}

Outcome Criterion1() {
  Outcome o;
  TracedRun run = RunWorkedExample();
  const Json* am = FirstAm(run.records, "a");
  o.Require(am != nullptr, "no AM record for the root node");
  if (!am) return o;
  auto rmp = Sequence(*am, "rmp_objective");
  auto pp = Sequence(*am, "pp_objective");
  o.Require(rmp == std::vector<std::string>{"30", "11", "2"}, "RMP " + Show(rmp));
  o.Require(pp == std::vector<std::string>{"-19", "-9", "0"}, "PP " + Show(pp));
  o.Require(Columns(*am) == std::multiset<std::string>{"x[R_o1,I_o1]=1", "x[R_B]=1"},
            "columns differ");
  o.Require(Sigma(*am) == std::set<std::string>{"<{R},{(oneof o1)},1>", "<{R},{B},1>"},
            "sigma differs");
  o.Require(run.seconds < 1.0, "runtime " + std::to_string(run.seconds) + " s");
  if (o.pass) {
    o.detail = "RMP " + Show(rmp) + ", PP " + Show(pp) + ", " +
               std::to_string(run.seconds * 1000).substr(0, 5) + " ms";
  }
  return o;
}

Outcome Criterion2() {
  Outcome o;
  TracedRun run = RunWorkedExample();
  const Json* x2 = FirstAm(run.records, "x2");
  const Json* x3 = FirstAm(run.records, "x3");
  o.Require(x2 && x3, "missing AM records for x2 or x3");
  if (!x2 || !x3) return o;
  auto rmp2 = Sequence(*x2, "rmp_objective");
  auto rmp3 = Sequence(*x3, "rmp_objective");
  o.Require((*x2)["objective"] == "4", "x2 objective " + (*x2)["objective"].dump());
  o.Require(Columns(*x2) ==
                std::multiset<std::string>{"x[R_C]=1", "x[R-_D,R-_X@a,I_o2]=1"},
            "x2 columns differ");
  bool reuse = false;
  for (const std::string& t : Sigma(*x2)) {
    if (t.size() > 5 && t.compare(t.size() - 5, 5, ",{a}>") == 0) reuse = true;
  }
  o.Require(reuse, "no reuse tuple with V={a} in sigma(x2)");
  o.Require((*x3)["objective"] == "1", "x3 objective " + (*x3)["objective"].dump());
  o.Require(rmp2 == std::vector<std::string>{"40", "13", "13", "4", "4"},
            "x2 RMP sequence " + Show(rmp2) + " (expected 40,13,13,4,4)");
  o.Require(rmp3 == std::vector<std::string>{"10", "1"}, "x3 RMP sequence " + Show(rmp3));
  if (o.pass) o.detail = "x2 " + Show(rmp2) + ", x3 " + Show(rmp3);
  return o;
}

Outcome Criterion3() {
  Outcome o;
  TracedRun run = RunWorkedExample();
  o.Require(run.result.verdict == shoi::Verdict::kConsistent,
            std::string("verdict ") + shoi::VerdictName(run.result.verdict));
  shoi::VerificationReport report =
      shoi::VerifyTableauProperties(run.result.graph, run.kb.tbox, run.kb.rbox);
  o.Require(report.AllPassed(), "property check: " + report.ToString());
  bool merged = false;
  for (const Json& r : run.records) {
    if (r.value("rule", "") == "nom_merge" && r["from"] == "x3" && r["into"] == "x1") {
      merged = true;
    }
  }
  o.Require(merged, "no nom_merge of x3 into x1 in the trace");
  o.Require(run.seconds < 1.0, "runtime " + std::to_string(run.seconds) + " s");
  if (o.pass) o.detail = "CONSISTENT, P1-P10 pass, nom_merge x3 -> x1";
  return o;
}

Outcome Criterion4() {
  Outcome o;
  struct Case {
    std::string name;
    shoi::GeneratedOntology gen;
    shoi::Verdict expected;
  };
  std::vector<Case> cases;
  cases.push_back({"ca_provinces(extra=1)",
                   shoi::GenMembers(1, shoi::MembersFamily::kCaProvinces),
                   shoi::Verdict::kInconsistent});
  cases.push_back({"eu_members(extra=1)",
                   shoi::GenMembers(1, shoi::MembersFamily::kEuMembers),
                   shoi::Verdict::kInconsistent});
  for (int n : {5, 7, 10, 20, 40}) {
    cases.push_back({"TestOnt-Cons(" + std::to_string(n) + ")",
                     shoi::GenTestOnt(n, shoi::TestOntVariant::kCons),
                     shoi::Verdict::kConsistent});
    cases.push_back({"TestOnt-InCons(" + std::to_string(n) + ")",
                     shoi::GenTestOnt(n, shoi::TestOntVariant::kIncons),
                     shoi::Verdict::kInconsistent});
  }
  double slowest = 0;
  for (const Case& c : cases) {
    shoi::KnowledgeBase kb = shoi::BuildKnowledgeBase(c.gen.doc);
    shoi::TableauOptions opts;
    auto start = Clock::now();
    opts.deadline = start + std::chrono::seconds(60);
    shoi::TableauResult r = shoi::CheckConsistency(kb, opts);
    double s = Seconds(start);
    slowest = std::max(slowest, s);
    std::printf("    %-24s %-12s %8.3f s\n", c.name.c_str(), shoi::VerdictName(r.verdict), s);
    o.Require(r.verdict == c.expected,
              c.name + " gave " + shoi::VerdictName(r.verdict));
    o.Require(s < 60.0, c.name + " took " + std::to_string(s) + " s");
  }
  if (o.pass) {
    o.detail = std::to_string(cases.size()) + " verdicts, slowest " +
               std::to_string(slowest).substr(0, 5) + " s";
  }
  return o;
}

Outcome Criterion5() {
  Outcome o;
  std::mt19937 rng(5001);
  int feasible = 0;
  for (int i = 0; i < 500; ++i) {
    shoi::corpus::AlgebraicInstance inst = shoi::corpus::RandomAlgebraicInstance(rng);
    shoi::DecompositionSet q = shoi::BuildDecomposition(inst.label, inst.back);
    shoi::PricingProblem pp = shoi::BuildPp(q, inst.tbox, inst.rbox);
    shoi::NodeSolution bp = shoi::SolveNode(q, pp, {});
    shoi::FullMasterResult full = shoi::FullMasterSolve(q, pp);
    if (bp.feasible != full.feasible ||
        (bp.feasible && bp.objective != full.objective)) {
      o.Require(false, "algebraic instance " + std::to_string(i) + ": B&P " +
                           (bp.feasible ? bp.objective.get_str() : "infeasible") +
                           " vs full " +
                           (full.feasible ? full.objective.get_str() : "infeasible"));
    }
    feasible += bp.feasible ? 1 : 0;
  }
  std::printf("    500 algebraic instances, %d feasible\n", feasible);

  std::mt19937 rng2(5002);
  int guaranteed = 0;
  int consistent = 0;
  for (int i = 0; i < 200; ++i) {
    shoi::corpus::SmallOntology ont = shoi::corpus::RandomSmallOntology(rng2);
    shoi::KnowledgeBase kb = shoi::BuildKnowledgeBase(shoi::ParseOntology(ont.text));
    shoi::TableauOptions opts;
    opts.deadline = Clock::now() + std::chrono::seconds(30);
    shoi::TableauResult r = shoi::CheckConsistency(kb, opts);
    if (!ont.small_model_guaranteed) continue;
    ++guaranteed;
    if (r.verdict != shoi::Verdict::kConsistent) {
      o.Require(false, "ontology " + std::to_string(i) + " has a planted model but got " +
                           shoi::VerdictName(r.verdict));
      continue;
    }
    ++consistent;
    shoi::OracleResult oracle = shoi::BruteForceConsistency(kb, 4);
    o.Require(oracle.status == shoi::OracleStatus::kConsistent,
              "ontology " + std::to_string(i) + ": oracle found no model up to 4");
  }
  std::printf("    200 small ontologies, %d small-model-guaranteed, %d consistent\n",
              guaranteed, consistent);
  if (o.pass) o.detail = "B&P = full master on 500, oracle models on all consistent";
  return o;
}

Outcome Criterion6() {
  Outcome o;
  std::mt19937 rng(6001);
  for (int i = 0; i < 1000; ++i) {
    shoi::Concept c = shoi::corpus::RandomConcept(rng, 6);
    shoi::Concept n = shoi::Nnf(c);
    if (!(shoi::Nnf(n) == n) || !shoi::IsNnf(n)) {
      o.Require(false, "NNF not idempotent on " + c.ToString());
      break;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    shoi::Concept c = shoi::corpus::RandomConcept(rng, 6);
    std::string text = shoi::RenderConcept(c);
    if (!(shoi::ParseConcept(text) == c)) {
      o.Require(false, "round trip failed on " + text);
      break;
    }
  }
  const shoi::SolverStats& s = shoi::GlobalSolverStats();
  o.Require(s.strong_duality_checks > 0, "no LP duality checks ran");
  o.Require(s.strong_duality_failures == 0,
            std::to_string(s.strong_duality_failures.load()) + " duality failures");
  o.Require(s.basis_signature_checks > 0, "basis signature checks disabled");
  o.Require(s.basis_repeats == 0, std::to_string(s.basis_repeats.load()) + " basis repeats");
  std::printf("    %lld LP solves, %lld duality checks, %lld basis signatures\n",
              static_cast<long long>(s.lp_solves.load()),
              static_cast<long long>(s.strong_duality_checks.load()),
              static_cast<long long>(s.basis_signature_checks.load()));
  if (o.pass) o.detail = "duality, anti-cycling, NNF and round trip hold";
  return o;
}

}  // namespace

int main() {
  shoi::SetBasisSignatureChecks(true);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 worked example root node trace", Criterion1},
      {"2 worked example nodes x2 and x3", Criterion2},
      {"3 worked example end to end", Criterion3},
      {"4 benchmark verdicts", Criterion4},
      {"5 oracle equivalence", Criterion5},
      {"6 solver properties", Criterion6},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
