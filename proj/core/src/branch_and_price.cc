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

#include "shoi/branch_and_price.h"

#include <map>
#include <set>

#include "shoi/simplex.h"

namespace shoi {

namespace {

using Bounds = std::map<int, std::pair<Rational, std::optional<Rational>>>;

Rational Ceil(const Rational& v) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Rational(q);
}

Rational Floor(const Rational& v) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Rational(q);
}

bool HasArtificial(const LpOutcome& out, int m) {
  for (int i = 0; i < m; ++i) {
    if (out.primal[i] > 0) return true;
  }
  return false;
}

class Master {
 public:
  Master(const MasterSeed& seed, Pricer& pricer, const BpOptions& options,
         bool phase_one)
      : seed_(seed),
        pricer_(pricer),
        options_(options),
        phase_one_(phase_one),
        artificial_cost_(seed.artificial_cost),
        m_(static_cast<int>(seed.rhs.size())) {
    for (const PricedColumn& col : seed.initial_columns) AddToPool(col);
  }

  std::vector<PricedColumn>& pool() { return pool_; }
  void set_phase_one(bool on) { phase_one_ = on; }
  void set_artificial_cost(const Rational& m) { artificial_cost_ = m; }
  const Rational& artificial_cost() const { return artificial_cost_; }
  int iterations() const { return iterations_; }

  void AddToPool(PricedColumn col) {
    keys_.insert(col.coeffs);
    pool_.push_back(std::move(col));
  }

  // Runs column generation under the given pool-column bounds. Returns
  // nullopt if the bounds make the LP infeasible.
  std::optional<LpOutcome> Generate(const Bounds& bounds, int bp_node,
                                    const BpTraceFn& trace) {
    LinearProgram lp;
    for (int i = 0; i < m_; ++i) {
      lp.AddVariable("h" + std::to_string(i),
                     phase_one_ ? Rational(1) : artificial_cost_);
    }
    for (size_t p = 0; p < pool_.size(); ++p) {
      int v = lp.AddVariable("x" + std::to_string(p),
                             phase_one_ ? Rational(0) : pool_[p].cost, true);
      auto it = bounds.find(static_cast<int>(p));
      if (it != bounds.end()) {
        lp.lower[v] = it->second.first;
        lp.upper[v] = it->second.second;
      }
    }
    std::vector<std::vector<std::pair<int, Rational>>> rows(m_);
    for (int i = 0; i < m_; ++i) rows[i].push_back({i, Rational(1)});
    for (size_t p = 0; p < pool_.size(); ++p) {
      for (const auto& [i, a] : pool_[p].coeffs) {
        rows[i].push_back({m_ + static_cast<int>(p), a});
      }
    }
    for (int i = 0; i < m_; ++i) {
      lp.AddRow(std::move(rows[i]), seed_.relations[i], seed_.rhs[i],
                i < static_cast<int>(seed_.row_names.size()) ? seed_.row_names[i]
                                                             : "");
    }
    Simplex simplex(lp);
    Rational weight = phase_one_ ? 0 : 1;
    int iteration = 0;
    while (true) {
      CheckBudget();
      if (simplex.Solve() != LpStatus::kOptimal) return std::nullopt;
      LpOutcome out = simplex.Outcome();
      std::vector<Rational> duals(out.duals.begin(), out.duals.begin() + m_);
      std::optional<PricingResult> priced;
      while (true) {
        priced = pricer_.Price(duals, weight);
        if (!priced || priced->objective >= 0) break;
        if (!keys_.count(priced->column.coeffs)) break;
        // Already in the pool: its reduced cost can only be negative here
        // because a branching bound holds it down.
        pricer_.Forbid(priced->column);
      }
      ++iterations_;
      bool improving = priced && priced->objective < 0;
      if (trace) {
        BpIteration it;
        it.bp_node = bp_node;
        it.iteration = iteration;
        it.rmp_objective = out.objective;
        it.duals = duals;
        it.pp_objective = priced && priced->objective < 0 ? priced->objective
                                                           : Rational(0);
        if (improving) it.entering = priced->column;
        trace(it);
      }
      ++iteration;
      if (!improving) {
        out.primal.resize(m_ + pool_.size());
        return out;
      }
      PricedColumn col = priced->column;
      simplex.AddColumn(phase_one_ ? Rational(0) : col.cost, col.coeffs);
      AddToPool(std::move(col));
    }
  }

  void CheckBudget() const {
    if (iterations_ >= options_.max_iterations) {
      throw BudgetExceeded("column generation iteration limit");
    }
    if (options_.deadline &&
        std::chrono::steady_clock::now() > *options_.deadline) {
      throw BudgetExceeded("time limit");
    }
  }

 private:
  const MasterSeed& seed_;
  Pricer& pricer_;
  const BpOptions& options_;
  bool phase_one_;
  Rational artificial_cost_;
  int m_;
  std::vector<PricedColumn> pool_;
  std::set<std::vector<std::pair<int, Rational>>> keys_;
  int iterations_ = 0;
};

}  // namespace

BpResult BranchAndPrice(const MasterSeed& seed, Pricer& pricer,
                        const BpOptions& options, const BpTraceFn& trace) {
  const int m = static_cast<int>(seed.rhs.size());
  Master master(seed, pricer, options, false);
  BpResult result;
  std::vector<Bounds> stack = {Bounds{}};
  while (!stack.empty()) {
    if (result.bp_nodes >= options.max_nodes) {
      throw BudgetExceeded("branch-and-price node limit");
    }
    Bounds bounds = std::move(stack.back());
    stack.pop_back();
    int node_id = result.bp_nodes++;
    std::optional<LpOutcome> out = master.Generate(bounds, node_id, trace);
    if (!out) continue;
    if (node_id == 0 && seed.safe_artificial_cost && HasArtificial(*out, m)) {
      master.set_phase_one(true);
      std::optional<LpOutcome> p1 = master.Generate({}, node_id, {});
      master.set_phase_one(false);
      if (p1 && p1->objective > 0) {
        result.lp_infeasible = true;
        break;
      }
      if (master.artificial_cost() < *seed.safe_artificial_cost) {
        master.set_artificial_cost(*seed.safe_artificial_cost);
        out = master.Generate(bounds, node_id, trace);
        if (!out) continue;
      }
    }
    if (result.found && Ceil(out->objective) >= result.objective) continue;
    int branch = -1;
    Rational best_dist;
    for (size_t p = 0; p < master.pool().size(); ++p) {
      const Rational& v = out->primal[m + p];
      if (v.get_den() == 1) continue;
      Rational dist = abs(v - Floor(v) - Rational(1, 2));
      if (branch < 0 || dist < best_dist) {
        branch = static_cast<int>(p);
        best_dist = dist;
      }
    }
    if (branch < 0) {
      result.found = true;
      result.objective = out->objective;
      result.selected.clear();
      for (size_t p = 0; p < master.pool().size(); ++p) {
        if (out->primal[m + p] > 0) {
          result.selected.push_back({static_cast<int>(p), out->primal[m + p]});
        }
      }
      result.artificials.assign(out->primal.begin(), out->primal.begin() + m);
      result.artificial_positive = false;
      for (const Rational& h : result.artificials) {
        if (h > 0) result.artificial_positive = true;
      }
      continue;
    }
    const Rational& v = out->primal[m + branch];
    Bounds down = bounds;
    Bounds up = bounds;
    auto old = bounds.count(branch) ? bounds.at(branch)
                                    : std::make_pair(Rational(0),
                                                     std::optional<Rational>());
    down[branch] = {old.first, Floor(v)};
    up[branch] = {Ceil(v), old.second};
    stack.push_back(std::move(down));
    stack.push_back(std::move(up));
  }
  result.pool = master.pool();
  result.artificial_cost = master.artificial_cost();
  result.iterations = master.iterations();
  return result;
}

Rational MinimizeArtificials(const MasterSeed& seed, Pricer& pricer,
                             const BpOptions& options,
                             std::vector<PricedColumn>* pool) {
  Master master(seed, pricer, options, true);
  std::optional<LpOutcome> out = master.Generate({}, 0, {});
  if (pool) *pool = master.pool();
  return out ? out->objective : Rational(0);
}

}  // namespace shoi
