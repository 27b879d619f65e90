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

#ifndef SHOI_TBOX_H_
#define SHOI_TBOX_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shoi/concept.h"
#include "shoi/rolebox.h"

namespace shoi {

// lhs ⊑ rhs, or lhs ≡ rhs when stored as an equivalence.
struct Gci {
  Concept lhs;
  Concept rhs;
};

struct Assertion {
  enum class Kind { kConcept, kRole };
  Kind kind = Kind::kConcept;
  std::string a;
  std::string b;
  Concept cls;
  Role role;
};

struct Axioms {
  std::vector<Gci> gcis;
  std::vector<Gci> equivalences;
  // Each group lists atoms and nominals that are pairwise disjoint.
  std::vector<std::vector<Concept>> disjoint;
};

struct InternalizeOptions {
  bool lazy_unfolding = true;
};

struct Tbox {
  std::vector<Gci> gcis;
  std::vector<Gci> equivalences;
  std::vector<std::vector<Concept>> disjoint;
  // Inclusions after splitting equivalences and disjunctive left sides, in
  // NNF. Table-style PP rows are read from here.
  std::vector<Gci> inclusions;
  // Atom or nominal -> conjunction added whenever the name enters a label.
  std::map<Concept, Concept> unfold;
  Concept internal = Concept::Top();
  std::set<std::string> atoms;
  std::set<std::string> nominals;
  // Ordered pairs (a, b) and (b, a) from the disjointness groups.
  std::set<std::pair<Concept, Concept>> disjoint_pairs;

  // Looks up the unfolding of a name; nullptr if none.
  const Concept* Unfolding(const Concept& name) const;
  // True when a and b are declared disjoint by some group.
  bool DeclaredDisjoint(const Concept& a, const Concept& b) const;
};

// a:C becomes {a} ⊑ C and (a,b):R becomes {a} ⊑ ∃R.{b}.
std::vector<Gci> AboxToTbox(const std::vector<Assertion>& assertions);

Tbox Internalize(const Axioms& axioms, const RoleBox& rbox,
                 const InternalizeOptions& options = {});

}  // namespace shoi

#endif  // SHOI_TBOX_H_
