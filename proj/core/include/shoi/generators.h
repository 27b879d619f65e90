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

#ifndef SHOI_GENERATORS_H_
#define SHOI_GENERATORS_H_

#include <string>

#include "shoi/parser.h"

namespace shoi {

struct GenMetrics {
  int axioms = 0;
  // Distinct atomic concept names.
  int concepts = 0;
  int individuals = 0;
};

struct GeneratedOntology {
  std::string text;
  OntologyDocument doc;
  GenMetrics metrics;
};

enum class TestOntVariant { kCons, kIncons };

// C ⊑ ∃R⁻.A, A ⊑ ∃R.X1 ⊓ … ⊓ ∃R.Xn ⊓ ∀R.{o1..on}, with the o's and the X's
// pairwise disjoint, C disjoint with X1..X(n-1) (cons) or X1..Xn (incons),
// and an individual c asserted to be a C.
GeneratedOntology GenTestOnt(int n, TestOntVariant variant);

enum class MembersFamily { kCaProvinces, kEuMembers };

// The class is defined as the enumeration of its base members (10 Canadian
// provinces or 28 EU members), all pairwise distinct. Each extra member is
// distinct from every other member and asserted to be in the class.
GeneratedOntology GenMembers(int extra, MembersFamily family);

GenMetrics ComputeMetrics(const OntologyDocument& doc);

}  // namespace shoi

#endif  // SHOI_GENERATORS_H_
