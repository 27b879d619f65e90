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

#ifndef SHOI_VERIFIER_H_
#define SHOI_VERIFIER_H_

#include <string>
#include <vector>

#include "shoi/graph.h"
#include "shoi/rolebox.h"
#include "shoi/tbox.h"

namespace shoi {

struct PropertyResult {
  std::string name;  // "P1" .. "P10"
  bool passed = true;
  // First violation found, empty when passed.
  std::string witness;
};

struct VerificationReport {
  std::vector<PropertyResult> properties;

  bool AllPassed() const;
  std::string ToString() const;
};

// Checks the ten tableau properties on the live, not indirectly blocked
// nodes of a complete graph. P2 also requires C_T and the lazy unfolding of
// every name to be present.
VerificationReport VerifyTableauProperties(const CompletionGraph& graph,
                                           const Tbox& tbox,
                                           const RoleBox& rbox);

}  // namespace shoi

#endif  // SHOI_VERIFIER_H_
