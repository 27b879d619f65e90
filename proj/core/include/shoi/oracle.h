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

#ifndef SHOI_ORACLE_H_
#define SHOI_ORACLE_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shoi/algebraic.h"
#include "shoi/parser.h"

namespace shoi {

struct FiniteInterpretation {
  int size = 0;
  std::map<std::string, std::set<int>> concepts;
  // Extensions of role names; inverses are read as the converse.
  std::map<std::string, std::set<std::pair<int, int>>> roles;
  std::map<std::string, int> nominals;

  std::string ToString() const;
};

// Evaluates c over the interpretation. Atoms and roles missing from the maps
// have empty extensions.
std::set<int> Extension(const Concept& c, const FiniteInterpretation& m);

// Direct model check of every axiom, assertion, disjointness group, role
// inclusion and transitivity declaration. Fills why with the first
// violated item.
bool IsModel(const KnowledgeBase& kb, const FiniteInterpretation& m,
             std::string* why = nullptr);

enum class OracleStatus { kConsistent, kNoModelUpTo };

struct OracleResult {
  OracleStatus status = OracleStatus::kNoModelUpTo;
  // Domain size of the model found, or the largest size searched.
  int k = 0;
  FiniteInterpretation model;
};

struct OracleOptions {
  // DPLL decision budget across all domain sizes, 0 for none. Exceeding it
  // throws BudgetExceeded.
  int64_t max_decisions = 0;
};

// Searches domains of size 1..max_domain. Nominal placements are
// enumerated as restricted-growth strings; each placement is encoded to CNF
// and decided by DPLL. NoModelUpTo is not a proof of inconsistency.
OracleResult BruteForceConsistency(const KnowledgeBase& kb, int max_domain,
                                   const OracleOptions& options = {});

struct FullMasterResult {
  bool feasible = false;
  Rational objective;
  // Coverage rows of each selected partition element and its multiplicity.
  std::vector<std::pair<std::vector<int>, int>> assignment;
  int valid_columns = 0;
};

// Enumerates every non-empty subset of the coverage rows (Q∃ then Qo),
// keeps those the PP constraints admit at their least concept count, and
// solves the full master ILP exactly. Throws std::length_error when there
// are more than max_rows coverage rows.
FullMasterResult FullMasterSolve(const DecompositionSet& q,
                                 const PricingProblem& pp, int max_rows = 12);

}  // namespace shoi

#endif  // SHOI_ORACLE_H_
