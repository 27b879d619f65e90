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

#ifndef SHOI_LINEAR_PROGRAM_H_
#define SHOI_LINEAR_PROGRAM_H_

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shoi {

using Rational = mpq_class;

std::string RationalToString(const Rational& r);

enum class Relation { kLe, kGe, kEq };

struct LpRow {
  std::vector<std::pair<int, Rational>> coeffs;
  Relation rel = Relation::kGe;
  Rational rhs;
  std::string name;
};

// min c'x subject to rows and bounds. Lower bounds default to 0.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;
  std::vector<bool> integer;
  std::vector<std::string> var_names;
  std::vector<LpRow> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int AddVariable(const std::string& name, const Rational& cost,
                  bool is_integer = false);
  int AddRow(std::vector<std::pair<int, Rational>> coeffs, Relation rel,
             const Rational& rhs, const std::string& name = "");
};

// Thrown when a node, iteration or time budget runs out.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus s);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> primal;
  // One dual value per row of the input program.
  std::vector<Rational> duals;
  int pivots = 0;
};

// Plain-text dump: one row per line as "rel rhs idx:coef ...".
std::string DumpLp(const LinearProgram& lp);

// Counters shared by every solve in the process.
struct SolverStats {
  std::atomic<int64_t> lp_solves{0};
  std::atomic<int64_t> strong_duality_checks{0};
  std::atomic<int64_t> strong_duality_failures{0};
  std::atomic<int64_t> basis_signature_checks{0};
  std::atomic<int64_t> basis_repeats{0};
  std::atomic<int64_t> binary_solves{0};
};

SolverStats& GlobalSolverStats();

// When enabled, every simplex run records the signature of each basis it
// visits and counts repeats. Off by default outside debug builds.
void SetBasisSignatureChecks(bool enabled);
bool BasisSignatureChecksEnabled();

}  // namespace shoi

#endif  // SHOI_LINEAR_PROGRAM_H_
