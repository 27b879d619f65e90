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

#include "shoi/generators.h"

#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace shoi {

namespace {

const char* const kProvinces[] = {
    "Ontario",      "Quebec",          "NovaScotia",
    "NewBrunswick", "Manitoba",        "BritishColumbia",
    "PrinceEdwardIsland", "Saskatchewan", "NewfoundlandAndLabrador",
    "Alberta",
};

std::string Seq(const std::string& prefix, int from, int to) {
  std::string out;
  for (int i = from; i <= to; ++i) out += " " + prefix + std::to_string(i);
  return out;
}

GeneratedOntology Finish(std::string text) {
  GeneratedOntology g;
  g.doc = ParseOntology(text);
  g.text = std::move(text);
  g.metrics = ComputeMetrics(g.doc);
  return g;
}

}  // namespace

GenMetrics ComputeMetrics(const OntologyDocument& doc) {
  GenMetrics m;
  m.axioms = static_cast<int>(doc.statements.size());
  std::set<std::string> atoms;
  for (const Statement& s : doc.statements) {
    for (const Concept& c : {s.lhs, s.rhs}) CollectNames(c, &atoms, nullptr);
    for (const Concept& c : s.members) CollectNames(c, &atoms, nullptr);
  }
  m.concepts = static_cast<int>(atoms.size());
  m.individuals = static_cast<int>(doc.individuals.size());
  return m;
}

GeneratedOntology GenTestOnt(int n, TestOntVariant variant) {
  if (n < 1) throw std::invalid_argument("testont needs n >= 1");
  std::ostringstream out;
  out << "; TestOnt-" << (variant == TestOntVariant::kCons ? "Cons" : "InCons")
      << " n=" << n << "\n";
  out << "(implies C (some (inv R) A))\n";
  out << "(implies A (and";
  for (int i = 1; i <= n; ++i) out << " (some R X" << i << ")";
  out << " (all R (oneof" << Seq("o", 1, n) << "))))\n";
  out << "(disjoint" << Seq("o", 1, n) << ")\n";
  out << "(disjoint" << Seq("X", 1, n) << ")\n";
  int last = variant == TestOntVariant::kCons ? n - 1 : n;
  if (last >= 1) out << "(disjoint C" << Seq("X", 1, last) << ")\n";
  out << "(instance c C)\n";
  return Finish(out.str());
}

GeneratedOntology GenMembers(int extra, MembersFamily family) {
  if (extra < 0) throw std::invalid_argument("extra must be >= 0");
  std::vector<std::string> members;
  std::string cls;
  std::string extra_prefix;
  if (family == MembersFamily::kCaProvinces) {
    cls = "CA_Province";
    extra_prefix = "ExtraProvince";
    for (const char* p : kProvinces) members.push_back(p);
  } else {
    // Synthetic member names.
    cls = "EU_Member";
    extra_prefix = "ExtraMember";
    for (int i = 1; i <= 28; ++i) {
      members.push_back("EU" + std::string(i < 10 ? "0" : "") +
                        std::to_string(i));
    }
  }
  std::ostringstream out;
  out << "(equivalent " << cls << " (oneof";
  for (const std::string& m : members) out << " " << m;
  out << "))\n";
  std::vector<std::string> all = members;
  for (int i = 1; i <= extra; ++i) {
    all.push_back(extra_prefix + std::to_string(i));
  }
  out << "(disjoint";
  for (const std::string& m : all) out << " " << m;
  out << ")\n";
  for (int i = 1; i <= extra; ++i) {
    out << "(instance " << extra_prefix << i << " " << cls << ")\n";
  }
  return Finish(out.str());
}

}  // namespace shoi
