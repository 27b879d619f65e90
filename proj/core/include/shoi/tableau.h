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

#ifndef SHOI_TABLEAU_H_
#define SHOI_TABLEAU_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shoi/graph.h"
#include "shoi/linear_program.h"
#include "shoi/parser.h"
#include "shoi/rolebox.h"
#include "shoi/tbox.h"

namespace shoi {

enum class Verdict { kConsistent, kInconsistent, kGaveUp };

const char* VerdictName(Verdict v);

// Receives one record per rule application, AM invocation, clash and
// backtrack.
using TraceFn = std::function<void(const nlohmann::json&)>;

struct TableauOptions {
  // Pin the master problem's M to 10.
  bool paper_m = false;
  std::optional<Rational> big_m;
  int64_t max_nodes = 100000;
  int64_t max_bp_nodes = 10000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  TraceFn trace;
};

struct TableauStats {
  int64_t nodes_created = 0;
  std::map<std::string, int64_t> rules;
  int64_t am_invocations = 0;
  int64_t columns_generated = 0;
  int64_t bp_nodes = 0;
  int64_t branch_points = 0;
  int64_t backtracks = 0;

  nlohmann::json ToJson() const;
};

struct TableauResult {
  Verdict verdict = Verdict::kGaveUp;
  // Complete clash-free graph when consistent.
  CompletionGraph graph;
  TableauStats stats;
  std::string gave_up_reason;
};

// Initial nodes are the asserted individuals in order; without any, a root
// node x holding a fresh nominal is created. Every node label receives C_T.
TableauResult CheckConsistency(const Tbox& tbox, const RoleBox& rbox,
                               const std::vector<std::string>& individuals,
                               const TableauOptions& options = {});

TableauResult CheckConsistency(const KnowledgeBase& kb,
                               const TableauOptions& options = {});

}  // namespace shoi

#endif  // SHOI_TABLEAU_H_
