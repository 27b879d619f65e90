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

#include "shoi/trace.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shoi {

TraceWriter::TraceWriter(std::ostream& out) : out_(out) {
  out_ << "trace_version: " << kTraceVersion << '\n';
}

void TraceWriter::Write(const nlohmann::json& record) {
  out_ << record.dump() << '\n';
}

TraceFn TraceWriter::AsFn() {
  return [this](const nlohmann::json& j) { Write(j); };
}

std::vector<nlohmann::json> ReadTrace(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trace");
  const std::string prefix = "trace_version: ";
  if (line.rfind(prefix, 0) != 0) {
    throw std::runtime_error("missing trace_version header");
  }
  if (std::stoi(line.substr(prefix.size())) != kTraceVersion) {
    throw std::runtime_error("unsupported trace version: " + line);
  }
  std::vector<nlohmann::json> out;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error("trace line " + std::to_string(number) + ": " +
                               e.what());
    }
  }
  return out;
}

namespace {

std::string Join(const nlohmann::json& arr) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += ", ";
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

}  // namespace

std::string HumanSummary(const std::vector<nlohmann::json>& records) {
  std::ostringstream out;
  int step = 0;
  for (const nlohmann::json& r : records) {
    if (r.contains("rule")) {
      out << ++step << ". " << r["rule"].get<std::string>();
      if (r.contains("from")) {
        out << " " << r["from"].get<std::string>() << " into "
            << r["into"].get<std::string>();
      }
      if (r.contains("node")) out << " at " << r["node"].get<std::string>();
      if (r.contains("target")) out << " -> " << r["target"].get<std::string>();
      if (r.contains("concepts")) out << "  +{" << Join(r["concepts"]) << "}";
      if (r.contains("roles")) out << "  roles {" << Join(r["roles"]) << "}";
      out << '\n';
      continue;
    }
    const std::string event = r.value("event", "");
    if (event == "am") {
      out << "Node " << r["node"].get<std::string>() << ": Q∃ = {"
          << Join(r["q_exists"]) << "}, Q∀ = {" << Join(r["q_forall"])
          << "}, Qo = {" << Join(r["q_nominals"]) << "}\n";
      int k = 0;
      for (const auto& it : r["iterations"]) {
        out << "  ILP iteration " << ++k;
        if (it["bp_node"].get<int>() > 0) out << " (bp node " << it["bp_node"] << ")";
        out << ": RMP cost=" << it["rmp_objective"].get<std::string>()
            << "  duals (" << Join(it["duals"]) << ")  PP cost="
            << it["pp_objective"].get<std::string>();
        if (it.contains("entering")) {
          out << "  enters " << it["entering"].get<std::string>();
        }
        out << '\n';
      }
      if (r["feasible"].get<bool>()) {
        out << "  cost=" << r["objective"].get<std::string>() << "  sigma = {"
            << Join(r["sigma"]) << "}\n";
      } else {
        out << "  infeasible\n";
      }
    } else if (event == "clash") {
      out << "clash: " << r["reason"].get<std::string>() << '\n';
    } else if (event == "am_alternative") {
      out << "retry AM at " << r["node"].get<std::string>() << " excluding "
          << r["excluded"] << " pattern(s)\n";
    } else if (event == "result") {
      out << r["verdict"].get<std::string>() << '\n';
    }
  }
  return out.str();
}

}  // namespace shoi
