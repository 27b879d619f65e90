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

#include "shoi/linear_program.h"

#include <sstream>

namespace shoi {

std::string RationalToString(const Rational& r) { return r.get_str(); }

int LinearProgram::AddVariable(const std::string& name, const Rational& cost,
                               bool is_integer) {
  objective.push_back(cost);
  lower.push_back(0);
  upper.push_back(std::nullopt);
  integer.push_back(is_integer);
  var_names.push_back(name);
  return num_vars() - 1;
}

int LinearProgram::AddRow(std::vector<std::pair<int, Rational>> coeffs,
                          Relation rel, const Rational& rhs,
                          const std::string& name) {
  LpRow row;
  row.coeffs = std::move(coeffs);
  row.rel = rel;
  row.rhs = rhs;
  row.name = name;
  rows.push_back(std::move(row));
  return static_cast<int>(rows.size()) - 1;
}

const char* LpStatusName(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

std::string DumpLp(const LinearProgram& lp) {
  std::ostringstream out;
  out << "min";
  for (int j = 0; j < lp.num_vars(); ++j) {
    if (lp.objective[j] != 0) out << " " << j << ":" << lp.objective[j];
  }
  out << "\n";
  for (const LpRow& row : lp.rows) {
    switch (row.rel) {
      case Relation::kLe:
        out << "<=";
        break;
      case Relation::kGe:
        out << ">=";
        break;
      case Relation::kEq:
        out << "=";
        break;
    }
    out << " " << row.rhs;
    for (const auto& [j, a] : row.coeffs) out << " " << j << ":" << a;
    out << "\n";
  }
  for (int j = 0; j < lp.num_vars(); ++j) {
    if (lp.lower[j] != 0 || lp.upper[j] || lp.integer[j]) {
      out << "bounds " << j << " " << lp.lower[j] << " "
          << (lp.upper[j] ? lp.upper[j]->get_str() : std::string("inf"))
          << (lp.integer[j] ? " int" : "") << "\n";
    }
  }
  return out.str();
}

SolverStats& GlobalSolverStats() {
  static SolverStats* stats = new SolverStats();
  return *stats;
}

namespace {
#ifdef NDEBUG
std::atomic<bool> g_signature_checks{false};
#else
std::atomic<bool> g_signature_checks{true};
#endif
}  // namespace

void SetBasisSignatureChecks(bool enabled) { g_signature_checks = enabled; }
bool BasisSignatureChecksEnabled() { return g_signature_checks; }

}  // namespace shoi
