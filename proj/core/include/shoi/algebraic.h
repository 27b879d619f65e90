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

#ifndef SHOI_ALGEBRAIC_H_
#define SHOI_ALGEBRAIC_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shoi/binary_solver.h"
#include "shoi/branch_and_price.h"
#include "shoi/concept.h"
#include "shoi/linear_program.h"
#include "shoi/rolebox.h"
#include "shoi/tbox.h"

namespace shoi {

// An existing neighbour v of the node, recorded in B(x) by the inverse
// rule.
struct BackEdge {
  int node = -1;
  std::string node_name;
  // L(x, v).
  RoleSet roles;
  ConceptSet node_label;
};

// One element R_q of Q∃ or Q∀.
struct QElement {
  // The restriction's role; for a reuse element, L(x, v).
  RoleSet roles;
  // Qualification name: an atom, a nominal or a fresh name.
  std::string name;
  Concept filler;
  // Q∀ elements with a nominal-set filler list each nominal here; every
  // other element lists its own name.
  std::vector<std::string> names;
  int reuse_node = -1;
  ConceptSet reuse_label;
  std::string label;
};

struct DecompositionSet {
  std::vector<QElement> exists;
  std::vector<QElement> forall;
  std::vector<std::string> nominals;
  // N: every name that gets a b variable, in variable order.
  std::vector<std::string> names;
  // Concept each name stands for; fresh names map to their definition,
  // reuse names to Top.
  std::map<std::string, Concept> meaning;
  std::set<std::string> fresh;
  std::set<std::string> reuse_names;

  size_t size() const {
    return exists.size() + forall.size() + nominals.size();
  }
  // True if some element of Q∃ is not a reuse element.
  bool HasNewSuccessors() const;
};

// Q∃ follows the label's canonical order with reuse elements last; Q∀
// likewise; Qo lists nominals from the closures of all fillers in order
// of first occurrence.
DecompositionSet BuildDecomposition(const ConceptSet& label,
                                    const std::vector<BackEdge>& back_edges);

struct PricingProblem {
  // Objective coefficients are filled in per pricing call.
  LinearProgram lp;
  std::vector<int> r_exists;
  std::vector<int> r_nominal;
  std::map<Role, int> r_top;
  std::vector<int> b;
  // Every r variable, in index order.
  std::vector<int> lex_vars;
};

PricingProblem BuildPp(const DecompositionSet& q, const Tbox& tbox,
                       const RoleBox& rbox);

// A partition element read off a PP solution.
struct Column {
  std::vector<int> exists;    // indices into q.exists
  std::vector<int> nominals;  // indices into q.nominals
  std::vector<std::string> concepts;  // names with b = 1
  RoleSet top_roles;          // roles with r⊤ = 1
  Rational cost;
  std::string label;
};

Column ColumnFromPp(const DecompositionSet& q, const PricingProblem& pp,
                    const std::vector<Rational>& values);

// ⟨roles, concepts, n, V⟩.
struct SolutionTuple {
  RoleSet roles;
  ConceptSet concepts;
  int n = 1;
  std::set<int> reuse;

  std::string ToString() const;
};

struct NodeSolveOptions {
  // Pin M to 10 regardless of |Q|.
  bool paper_m = false;
  std::optional<Rational> big_m;
  BpOptions bp;
  int64_t pp_node_limit = 0;
  // Coverage patterns (indices of Q∃ then Qo rows) no column may have.
  std::vector<std::vector<int>> excluded;
};

struct NodeSolution {
  bool feasible = false;
  Rational objective;
  Rational big_m;
  std::vector<Column> columns;
  std::vector<int> values;
  // Row coverage of each selected column, for later exclusion.
  std::vector<std::vector<int>> patterns;
  std::vector<SolutionTuple> tuples;
  int iterations = 0;
  int bp_nodes = 0;
  int columns_generated = 0;
};

Rational DefaultBigM(const DecompositionSet& q, bool paper_m);

// Column generation with branch-and-price on the master problem. Throws
// BudgetExceeded.
NodeSolution SolveNode(const DecompositionSet& q, const PricingProblem& pp,
                       const NodeSolveOptions& options,
                       const BpTraceFn& trace = {});

std::vector<std::string> MasterRowNames(const DecompositionSet& q);

}  // namespace shoi

#endif  // SHOI_ALGEBRAIC_H_
