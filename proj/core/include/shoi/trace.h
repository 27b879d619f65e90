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

#ifndef SHOI_TRACE_H_
#define SHOI_TRACE_H_

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shoi/tableau.h"

namespace shoi {

inline constexpr int kTraceVersion = 1;

// Writes the "trace_version: 1" header line followed by one JSON object per
// line.
class TraceWriter {
 public:
  explicit TraceWriter(std::ostream& out);

  void Write(const nlohmann::json& record);
  TraceFn AsFn();

 private:
  std::ostream& out_;
};

// Parses a trace stream. Throws std::runtime_error on a missing or
// unsupported header, or on a malformed line.
std::vector<nlohmann::json> ReadTrace(std::istream& in);

// Per-node ILP iteration tables followed by the rule events.
std::string HumanSummary(const std::vector<nlohmann::json>& records);

}  // namespace shoi

#endif  // SHOI_TRACE_H_
