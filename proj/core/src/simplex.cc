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

#include "shoi/simplex.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace shoi {

namespace {

constexpr long long kSlackKeyBase = 1000000000LL;
constexpr long long kArtificialKeyBase = 2000000000LL;

}  // namespace

Simplex::Simplex(const LinearProgram& lp) {
  GlobalSolverStats().lp_solves++;
  num_orig_rows_ = static_cast<int>(lp.rows.size());
  num_struct_ = lp.num_vars();
  lower_ = lp.lower;
  orig_rows_ = lp.rows;
  objective_offset_ = 0;
  for (int j = 0; j < num_struct_; ++j) {
    objective_offset_ += lp.objective[j] * lp.lower[j];
  }

  std::vector<LpRow> rows = lp.rows;
  for (LpRow& row : rows) {
    for (const auto& [j, a] : row.coeffs) row.rhs -= a * lp.lower[j];
  }
  for (int j = 0; j < num_struct_; ++j) {
    if (lp.upper[j]) {
      LpRow row;
      row.coeffs = {{j, Rational(1)}};
      row.rel = Relation::kLe;
      row.rhs = *lp.upper[j] - lp.lower[j];
      rows.push_back(std::move(row));
    }
  }
  m_ = static_cast<int>(rows.size());
  flipped_.assign(m_, false);
  for (int i = 0; i < m_; ++i) {
    LpRow& row = rows[i];
    if (row.rhs < 0) {
      flipped_[i] = true;
      row.rhs = -row.rhs;
      for (auto& [j, a] : row.coeffs) a = -a;
      if (row.rel == Relation::kLe) {
        row.rel = Relation::kGe;
      } else if (row.rel == Relation::kGe) {
        row.rel = Relation::kLe;
      }
    }
  }
  internal_rhs_.resize(m_);
  for (int i = 0; i < m_; ++i) internal_rhs_[i] = rows[i].rhs;

  tab_.assign(m_, {});
  rhs_ = internal_rhs_;
  std::vector<std::vector<Rational>> dense(num_struct_,
                                           std::vector<Rational>(m_));
  for (int i = 0; i < m_; ++i) {
    for (const auto& [j, a] : rows[i].coeffs) dense[j][i] += a;
  }
  for (int j = 0; j < num_struct_; ++j) {
    AppendColumn({ColKind::kStructural, j}, lp.objective[j], dense[j]);
  }
  init_col_.assign(m_, -1);
  for (int i = 0; i < m_; ++i) {
    if (rows[i].rel == Relation::kEq) continue;
    std::vector<Rational> col(m_);
    col[i] = rows[i].rel == Relation::kLe ? 1 : -1;
    AppendColumn({ColKind::kSlack, i}, 0, col);
    if (rows[i].rel == Relation::kLe) init_col_[i] = static_cast<int>(cols_.size()) - 1;
  }
  std::vector<bool> used(num_struct_, false);
  for (int i = 0; i < m_; ++i) {
    if (init_col_[i] >= 0) continue;
    for (int j = 0; j < num_struct_ && init_col_[i] < 0; ++j) {
      if (used[j] || dense[j][i] != 1) continue;
      bool unit = true;
      for (int k = 0; k < m_ && unit; ++k) {
        if (k != i && dense[j][k] != 0) unit = false;
      }
      if (unit) {
        used[j] = true;
        init_col_[i] = j;
      }
    }
    if (init_col_[i] < 0) {
      std::vector<Rational> col(m_);
      col[i] = 1;
      AppendColumn({ColKind::kArtificial, i}, 0, col);
      init_col_[i] = static_cast<int>(cols_.size()) - 1;
    }
  }
  basis_ = init_col_;
}

long long Simplex::BlandKey(int col) const {
  const ColInfo& c = cols_[col];
  switch (c.kind) {
    case ColKind::kStructural:
      return c.index;
    case ColKind::kSlack:
      return kSlackKeyBase + c.index;
    case ColKind::kArtificial:
      return kArtificialKeyBase + c.index;
  }
  return 0;
}

void Simplex::AppendColumn(const ColInfo& info, const Rational& cost,
                           const std::vector<Rational>& dense) {
  cols_.push_back(info);
  cost_.push_back(cost);
  for (int i = 0; i < m_; ++i) tab_[i].push_back(dense[i]);
  reduced_.push_back(0);
}

int Simplex::AddColumn(const Rational& cost,
                       const std::vector<std::pair<int, Rational>>& coeffs) {
  std::vector<Rational> a(m_);
  for (const auto& [i, v] : coeffs) {
    if (i < 0 || i >= num_orig_rows_) {
      throw std::out_of_range("AddColumn: row index out of range");
    }
    a[i] += flipped_[i] ? Rational(-v) : v;
  }
  for (const auto& [i, v] : coeffs) {
    orig_rows_[i].coeffs.push_back({num_struct_, v});
  }
  std::vector<Rational> col(m_);
  for (int k = 0; k < m_; ++k) {
    if (a[k] == 0) continue;
    int ic = init_col_[k];
    for (int i = 0; i < m_; ++i) {
      const Rational& t = tab_[i][ic];
      if (t != 0) col[i] += a[k] * t;
    }
  }
  int var = num_struct_++;
  lower_.push_back(0);
  AppendColumn({ColKind::kStructural, var}, cost, col);
  Rational d = cost;
  for (int i = 0; i < m_; ++i) {
    if (col[i] != 0) d -= cost_[basis_[i]] * col[i];
  }
  reduced_.back() = d;
  return var;
}

void Simplex::ComputeReducedCosts(const std::vector<Rational>& costs) {
  size_t n = cols_.size();
  reduced_.assign(n, 0);
  for (size_t j = 0; j < n; ++j) reduced_[j] = costs[j];
  for (int i = 0; i < m_; ++i) {
    const Rational& cb = costs[basis_[i]];
    if (cb == 0) continue;
    const auto& row = tab_[i];
    for (size_t j = 0; j < n; ++j) {
      if (row[j] != 0) reduced_[j] -= cb * row[j];
    }
  }
}

void Simplex::Pivot(int r, int q) {
  ++pivots_;
  size_t n = cols_.size();
  auto& prow = tab_[r];
  Rational piv = prow[q];
  std::vector<int> nz;
  for (size_t j = 0; j < n; ++j) {
    if (prow[j] != 0) {
      prow[j] /= piv;
      nz.push_back(static_cast<int>(j));
    }
  }
  rhs_[r] /= piv;
  for (int i = 0; i < m_; ++i) {
    if (i == r) continue;
    auto& row = tab_[i];
    if (row[q] == 0) continue;
    Rational f = row[q];
    for (int j : nz) row[j] -= f * prow[j];
    rhs_[i] -= f * rhs_[r];
  }
  if (reduced_[q] != 0) {
    Rational f = reduced_[q];
    for (int j : nz) reduced_[j] -= f * prow[j];
  }
  basis_[r] = q;
  if (BasisSignatureChecksEnabled()) {
    GlobalSolverStats().basis_signature_checks++;
    std::vector<int> sig = basis_;
    std::sort(sig.begin(), sig.end());
    if (!seen_bases_.insert(sig).second) {
      GlobalSolverStats().basis_repeats++;
      throw std::logic_error("simplex revisited a basis");
    }
  }
}

LpStatus Simplex::Iterate(const std::vector<Rational>& costs,
                          bool allow_artificial) {
  (void)costs;
  size_t n = cols_.size();
  while (true) {
    int q = -1;
    long long best_key = 0;
    for (size_t j = 0; j < n; ++j) {
      if (reduced_[j] >= 0) continue;
      if (!allow_artificial && cols_[j].kind == ColKind::kArtificial) continue;
      long long key = BlandKey(static_cast<int>(j));
      if (q < 0 || key < best_key) {
        q = static_cast<int>(j);
        best_key = key;
      }
    }
    if (q < 0) return LpStatus::kOptimal;
    int r = -1;
    Rational best_ratio;
    long long best_leave = 0;
    for (int i = 0; i < m_; ++i) {
      const Rational& a = tab_[i][q];
      // A basic artificial at zero must leave before it can turn positive,
      // whatever the sign of its entry.
      bool zero_artificial =
          cols_[basis_[i]].kind == ColKind::kArtificial && rhs_[i] == 0;
      if (a <= 0 && !(zero_artificial && a != 0)) continue;
      Rational ratio = rhs_[i] / a;
      long long key = BlandKey(basis_[i]);
      if (r < 0 || ratio < best_ratio ||
          (ratio == best_ratio && key < best_leave)) {
        r = i;
        best_ratio = ratio;
        best_leave = key;
      }
    }
    if (r < 0) return LpStatus::kUnbounded;
    Pivot(r, q);
  }
}

bool Simplex::HasPositiveArtificial() const {
  for (int i = 0; i < m_; ++i) {
    if (cols_[basis_[i]].kind == ColKind::kArtificial && rhs_[i] > 0) {
      return true;
    }
  }
  return false;
}

void Simplex::DriveOutArtificials() {
  for (int r = 0; r < m_; ++r) {
    if (cols_[basis_[r]].kind != ColKind::kArtificial) continue;
    int q = -1;
    long long best_key = 0;
    for (size_t j = 0; j < cols_.size(); ++j) {
      if (cols_[j].kind == ColKind::kArtificial || tab_[r][j] == 0) continue;
      long long key = BlandKey(static_cast<int>(j));
      if (q < 0 || key < best_key) {
        q = static_cast<int>(j);
        best_key = key;
      }
    }
    if (q >= 0) Pivot(r, q);
  }
}

LpStatus Simplex::Solve() {
  seen_bases_.clear();
  if (BasisSignatureChecksEnabled()) {
    std::vector<int> sig = basis_;
    std::sort(sig.begin(), sig.end());
    seen_bases_.insert(sig);
  }
  if (HasPositiveArtificial()) {
    std::vector<Rational> phase1(cols_.size());
    for (size_t j = 0; j < cols_.size(); ++j) {
      if (cols_[j].kind == ColKind::kArtificial) phase1[j] = 1;
    }
    ComputeReducedCosts(phase1);
    LpStatus st = Iterate(phase1, false);
    (void)st;
    if (HasPositiveArtificial()) {
      status_ = LpStatus::kInfeasible;
      return status_;
    }
    DriveOutArtificials();
    seen_bases_.clear();
  }
  ComputeReducedCosts(cost_);
  status_ = Iterate(cost_, false);
  if (status_ == LpStatus::kOptimal) Verify(Outcome());
  return status_;
}

LpOutcome Simplex::Outcome() const {
  LpOutcome out;
  out.status = status_;
  out.pivots = pivots_;
  if (status_ != LpStatus::kOptimal) return out;
  out.primal.assign(num_struct_, 0);
  for (int j = 0; j < num_struct_; ++j) out.primal[j] = lower_[j];
  Rational z = objective_offset_;
  for (int i = 0; i < m_; ++i) {
    const ColInfo& c = cols_[basis_[i]];
    z += cost_[basis_[i]] * rhs_[i];
    if (c.kind == ColKind::kStructural) out.primal[c.index] += rhs_[i];
  }
  out.objective = z;
  out.duals.assign(num_orig_rows_, 0);
  for (int i = 0; i < num_orig_rows_; ++i) {
    int ic = init_col_[i];
    Rational y = cost_[ic] - reduced_[ic];
    out.duals[i] = flipped_[i] ? Rational(-y) : y;
  }
  return out;
}

void Simplex::Verify(const LpOutcome& out) const {
  SolverStats& stats = GlobalSolverStats();
  stats.strong_duality_checks++;
  Rational dual_obj = objective_offset_;
  for (int i = 0; i < m_; ++i) {
    int ic = init_col_[i];
    dual_obj += internal_rhs_[i] * (cost_[ic] - reduced_[ic]);
  }
  bool ok = dual_obj == out.objective;
  for (size_t j = 0; j < cols_.size() && ok; ++j) {
    if (cols_[j].kind != ColKind::kArtificial && reduced_[j] < 0) ok = false;
  }
  for (const LpRow& row : orig_rows_) {
    if (!ok) break;
    Rational act = 0;
    for (const auto& [j, a] : row.coeffs) act += a * out.primal[j];
    switch (row.rel) {
      case Relation::kLe:
        ok = act <= row.rhs;
        break;
      case Relation::kGe:
        ok = act >= row.rhs;
        break;
      case Relation::kEq:
        ok = act == row.rhs;
        break;
    }
  }
  for (const Rational& v : out.primal) {
    if (v < 0) ok = false;
  }
  if (!ok) {
    stats.strong_duality_failures++;
    throw std::logic_error("LP optimum failed the duality certificate");
  }
}

LpOutcome SolveLp(const LinearProgram& lp) {
  Simplex s(lp);
  s.Solve();
  return s.Outcome();
}

}  // namespace shoi
