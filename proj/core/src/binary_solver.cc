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

#include "shoi/binary_solver.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "shoi/simplex.h"

namespace shoi {

namespace {

// a·x <= rhs over binaries.
struct IntRow {
  std::vector<std::pair<int, int64_t>> terms;
  int64_t rhs = 0;
};

int64_t ToInt(const Rational& r) {
  if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
    throw std::invalid_argument("SolveBinary: non-integral row data");
  }
  return r.get_num().get_si();
}

class BinarySearch {
 public:
  BinarySearch(const LinearProgram& lp, const BinaryOptions& options)
      : n_(lp.num_vars()), cost_(lp.objective), options_(options) {
    for (const LpRow& row : lp.rows) {
      IntRow le;
      for (const auto& [j, a] : row.coeffs) {
        int64_t v = ToInt(a);
        if (v != 0) le.terms.push_back({j, v});
      }
      le.rhs = ToInt(row.rhs);
      if (row.rel != Relation::kGe) rows_.push_back(le);
      if (row.rel != Relation::kLe) {
        IntRow ge = le;
        for (auto& t : ge.terms) t.second = -t.second;
        ge.rhs = -ge.rhs;
        rows_.push_back(ge);
      }
    }
    rows_of_.assign(n_, {});
    for (size_t r = 0; r < rows_.size(); ++r) {
      for (const auto& t : rows_[r].terms) rows_of_[t.first].push_back(r);
    }
    BuildBoundStructure();
    is_lex_.assign(n_, false);
    for (int v : options_.lex_vars) {
      is_lex_[v] = true;
      order_.push_back(v);
    }
    num_lex_ = order_.size();
    for (int v = 0; v < n_; ++v) {
      if (!is_lex_[v]) order_.push_back(v);
    }
  }

  LpOutcome Run() {
    GlobalSolverStats().binary_solves++;
    std::vector<int8_t> vals(n_, -1);
    std::vector<size_t> all(rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r) all[r] = r;
    LpOutcome out;
    if (Propagate(vals, all)) Search(0, vals, false);
    if (!best_) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    out.status = LpStatus::kOptimal;
    out.objective = *best_;
    out.primal.assign(n_, 0);
    for (int j = 0; j < n_; ++j) out.primal[j] = best_vals_[j];
    return out;
  }

 private:
  // One-level implication forest (x_i <= x_h) and disjoint cliques of
  // heads (sum <= 1), used for the objective bound.
  void BuildBoundStructure() {
    head_of_.assign(n_, -1);
    tails_.assign(n_, {});
    for (const IntRow& row : rows_) {
      if (row.terms.size() != 2 || row.rhs != 0) continue;
      int i = -1;
      int h = -1;
      for (const auto& [j, a] : row.terms) {
        if (a == 1) i = j;
        if (a == -1) h = j;
      }
      if (i < 0 || h < 0 || i == h) continue;
      if (head_of_[i] >= 0 || !tails_[i].empty() || head_of_[h] >= 0) continue;
      head_of_[i] = h;
      tails_[h].push_back(i);
    }
    clique_of_.assign(n_, -1);
    for (const IntRow& row : rows_) {
      if (row.rhs != 1 || row.terms.size() < 2) continue;
      bool ok = true;
      for (const auto& [j, a] : row.terms) {
        if (a != 1 || head_of_[j] >= 0) ok = false;
      }
      if (!ok) continue;
      std::vector<int> members;
      for (const auto& t : row.terms) {
        if (clique_of_[t.first] < 0) members.push_back(t.first);
      }
      if (members.size() < 2) continue;
      for (int j : members) clique_of_[j] = static_cast<int>(cliques_.size());
      cliques_.push_back(std::move(members));
    }
  }

  bool Propagate(std::vector<int8_t>& vals, std::vector<size_t> queue) {
    std::vector<bool> queued(rows_.size(), false);
    for (size_t r : queue) queued[r] = true;
    while (!queue.empty()) {
      size_t r = queue.back();
      queue.pop_back();
      queued[r] = false;
      const IntRow& row = rows_[r];
      int64_t minact = 0;
      for (const auto& [j, a] : row.terms) {
        if (vals[j] == 1) {
          minact += a;
        } else if (vals[j] < 0 && a < 0) {
          minact += a;
        }
      }
      if (minact > row.rhs) return false;
      for (const auto& [j, a] : row.terms) {
        if (vals[j] >= 0) continue;
        int8_t forced = -1;
        if (a > 0 && minact + a > row.rhs) forced = 0;
        if (a < 0 && minact - a > row.rhs) forced = 1;
        if (forced < 0) continue;
        vals[j] = forced;
        // The fixed value keeps this row's minimum activity unchanged.
        for (size_t r2 : rows_of_[j]) {
          if (!queued[r2] && r2 != r) {
            queued[r2] = true;
            queue.push_back(r2);
          }
        }
      }
    }
    return true;
  }

  bool Assign(std::vector<int8_t>& vals, int v, int8_t value) {
    if (vals[v] >= 0) return vals[v] == value;
    vals[v] = value;
    return Propagate(vals, rows_of_[v]);
  }

  Rational Bound(const std::vector<int8_t>& vals) const {
    Rational bound = 0;
    for (int v = 0; v < n_; ++v) {
      if (vals[v] == 1) bound += cost_[v];
    }
    auto gain = [&](int h) {
      Rational g = cost_[h];
      for (int t : tails_[h]) {
        if (vals[t] < 0 && cost_[t] < 0) g += cost_[t];
      }
      return g;
    };
    for (int v = 0; v < n_; ++v) {
      if (head_of_[v] >= 0) {
        int h = head_of_[v];
        if (vals[v] < 0 && vals[h] == 1 && cost_[v] < 0) bound += cost_[v];
        continue;
      }
      if (vals[v] < 0 && clique_of_[v] < 0) {
        Rational g = gain(v);
        if (g < 0) bound += g;
      }
    }
    for (const auto& clique : cliques_) {
      bool taken = false;
      for (int v : clique) {
        if (vals[v] == 1) taken = true;
      }
      if (taken) continue;
      Rational best = 0;
      for (int v : clique) {
        if (vals[v] < 0) {
          Rational g = gain(v);
          if (g < best) best = g;
        }
      }
      bound += best;
    }
    return bound;
  }

  void Search(size_t pos, std::vector<int8_t>& vals, bool must_pick) {
    if (options_.node_limit > 0 && ++nodes_ > options_.node_limit) {
      throw BudgetExceeded("binary search node limit");
    }
    if (best_ && Bound(vals) >= *best_) return;
    while (pos < order_.size() && vals[order_[pos]] >= 0) {
      if (pos < num_lex_ && vals[order_[pos]] == 1) must_pick = false;
      ++pos;
    }
    if (pos >= num_lex_ && must_pick) return;
    if (pos == order_.size()) {
      Rational obj = 0;
      for (int v = 0; v < n_; ++v) {
        if (vals[v] == 1) obj += cost_[v];
      }
      if (!best_ || obj < *best_) {
        best_ = obj;
        best_vals_ = vals;
      }
      return;
    }
    int v = order_[pos];
    if (pos < num_lex_) {
      if (!must_pick) {
        std::vector<int8_t> stop = vals;
        bool ok = true;
        for (size_t k = pos; k < num_lex_ && ok; ++k) {
          ok = Assign(stop, order_[k], 0);
        }
        if (ok) Search(num_lex_, stop, false);
      }
      std::vector<int8_t> one = vals;
      if (Assign(one, v, 1)) Search(pos + 1, one, false);
      std::vector<int8_t> zero = vals;
      if (Assign(zero, v, 0)) Search(pos + 1, zero, true);
      return;
    }
    for (int8_t value : {int8_t{0}, int8_t{1}}) {
      std::vector<int8_t> next = vals;
      if (Assign(next, v, value)) Search(pos + 1, next, false);
    }
  }

  int n_;
  std::vector<Rational> cost_;
  BinaryOptions options_;
  std::vector<IntRow> rows_;
  std::vector<std::vector<size_t>> rows_of_;
  std::vector<int> head_of_;
  std::vector<std::vector<int>> tails_;
  std::vector<int> clique_of_;
  std::vector<std::vector<int>> cliques_;
  std::vector<bool> is_lex_;
  std::vector<int> order_;
  size_t num_lex_ = 0;
  int64_t nodes_ = 0;
  std::optional<Rational> best_;
  std::vector<int8_t> best_vals_;
};

bool IsIntegral(const Rational& v) { return v.get_den() == 1; }

Rational Floor(const Rational& v) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Rational(q);
}

}  // namespace

LpOutcome SolveBinary(const LinearProgram& lp, const BinaryOptions& options) {
  for (size_t k = 1; k < options.lex_vars.size(); ++k) {
    if (options.lex_vars[k] <= options.lex_vars[k - 1]) {
      throw std::invalid_argument("SolveBinary: lex_vars must increase");
    }
  }
  BinarySearch search(lp, options);
  return search.Run();
}

LpOutcome SolveIlp(const LinearProgram& lp, int64_t node_limit) {
  struct Node {
    std::vector<Rational> lower;
    std::vector<std::optional<Rational>> upper;
  };
  std::vector<Node> stack = {{lp.lower, lp.upper}};
  LpOutcome best;
  best.status = LpStatus::kInfeasible;
  bool unbounded = false;
  int64_t nodes = 0;
  while (!stack.empty()) {
    if (node_limit > 0 && ++nodes > node_limit) {
      throw BudgetExceeded("ILP node limit");
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    LinearProgram sub = lp;
    sub.lower = node.lower;
    sub.upper = node.upper;
    bool empty = false;
    for (int j = 0; j < sub.num_vars(); ++j) {
      if (sub.upper[j] && *sub.upper[j] < sub.lower[j]) empty = true;
    }
    if (empty) continue;
    LpOutcome lo = SolveLp(sub);
    if (lo.status == LpStatus::kUnbounded) {
      unbounded = true;
      continue;
    }
    if (lo.status != LpStatus::kOptimal) continue;
    if (best.status == LpStatus::kOptimal && lo.objective >= best.objective) {
      continue;
    }
    int branch = -1;
    Rational best_dist;
    for (int j = 0; j < sub.num_vars(); ++j) {
      if (!lp.integer[j] || IsIntegral(lo.primal[j])) continue;
      Rational frac = lo.primal[j] - Floor(lo.primal[j]);
      Rational dist = abs(frac - Rational(1, 2));
      if (branch < 0 || dist < best_dist) {
        branch = j;
        best_dist = dist;
      }
    }
    if (branch < 0) {
      best = lo;
      best.duals.clear();
      continue;
    }
    Rational f = Floor(lo.primal[branch]);
    Node down = node;
    down.upper[branch] = f;
    Node up = node;
    up.lower[branch] = f + 1;
    stack.push_back(std::move(down));
    stack.push_back(std::move(up));
  }
  if (best.status != LpStatus::kOptimal && unbounded) {
    best.status = LpStatus::kUnbounded;
  }
  return best;
}

}  // namespace shoi
