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

#include "shoi/algebraic.h"

#include <algorithm>
#include <sstream>

namespace shoi {

namespace {

std::string RoleTag(const Role& r) {
  return r.inverse ? r.name + "-" : r.name;
}

class NameTable {
 public:
  explicit NameTable(DecompositionSet* q) : q_(q) {}

  std::string Qualification(const Concept& filler) {
    if (filler.IsName()) {
      q_->meaning.emplace(filler.name(), filler);
      return filler.name();
    }
    auto it = fresh_.find(filler);
    if (it != fresh_.end()) return it->second;
    std::string name = "F@" + std::to_string(fresh_.size() + 1);
    fresh_.emplace(filler, name);
    q_->meaning.emplace(name, filler);
    q_->fresh.insert(name);
    return name;
  }

  void AddName(const std::string& name) {
    if (seen_.insert(name).second) q_->names.push_back(name);
  }

 private:
  DecompositionSet* q_;
  std::map<Concept, std::string> fresh_;
  std::set<std::string> seen_;
};

}  // namespace

bool DecompositionSet::HasNewSuccessors() const {
  for (const QElement& e : exists) {
    if (e.reuse_node < 0) return true;
  }
  return false;
}

DecompositionSet BuildDecomposition(const ConceptSet& label,
                                    const std::vector<BackEdge>& back_edges) {
  DecompositionSet q;
  NameTable table(&q);
  for (const Concept& c : label) {
    if (c.kind() != ConceptKind::kSome && c.kind() != ConceptKind::kAll) {
      continue;
    }
    QElement e;
    e.roles = {c.role()};
    e.filler = c.child();
    if (c.kind() == ConceptKind::kAll && c.child().IsNominalSet() &&
        c.child().kind() == ConceptKind::kOr) {
      e.names = c.child().NominalNames();
      for (const std::string& o : e.names) {
        q.meaning.emplace(o, Concept::Nominal(o));
      }
      std::string joined;
      for (const std::string& o : e.names) joined += (joined.empty() ? "" : "|") + o;
      e.label = RoleTag(c.role()) + "_{" + joined + "}";
    } else {
      e.name = table.Qualification(c.child());
      e.names = {e.name};
      e.label = RoleTag(c.role()) + "_" + e.name;
    }
    (c.kind() == ConceptKind::kSome ? q.exists : q.forall).push_back(e);
  }
  for (const BackEdge& be : back_edges) {
    QElement e;
    e.roles = be.roles;
    e.filler = Concept::Top();
    e.name = "X@" + be.node_name;
    e.names = {e.name};
    e.reuse_node = be.node;
    e.reuse_label = be.node_label;
    e.label = RoleTag(*be.roles.begin()) + "_" + e.name;
    q.meaning.emplace(e.name, Concept::Top());
    q.reuse_names.insert(e.name);
    q.exists.push_back(e);
  }
  std::set<std::string> seen;
  auto collect = [&](const QElement& e) {
    if (e.reuse_node >= 0) return;
    for (const Concept& d : Closure(e.filler)) {
      if (d.kind() == ConceptKind::kNominal && seen.insert(d.name()).second) {
        q.nominals.push_back(d.name());
        q.meaning.emplace(d.name(), d);
      }
    }
  };
  for (const QElement& e : q.exists) collect(e);
  for (const QElement& e : q.forall) collect(e);
  for (const QElement& e : q.exists) table.AddName(e.name);
  for (const QElement& e : q.forall) {
    for (const std::string& n : e.names) table.AddName(n);
  }
  for (const std::string& o : q.nominals) table.AddName(o);
  return q;
}

namespace {

class PpBuilder {
 public:
  PpBuilder(const DecompositionSet& q, const Tbox& tbox, const RoleBox& rbox,
            PricingProblem* pp)
      : q_(q), tbox_(tbox), rbox_(rbox), pp_(pp) {
    for (size_t k = 0; k < q.names.size(); ++k) index_[q.names[k]] = k;
  }

  void Build() {
    LinearProgram& lp = pp_->lp;
    for (const QElement& e : q_.exists) {
      int v = lp.AddVariable("r_" + e.label, 0, true);
      pp_->r_exists.push_back(v);
      pp_->lex_vars.push_back(v);
    }
    for (const std::string& o : q_.nominals) {
      int v = lp.AddVariable("r_I_" + o, 0, true);
      pp_->r_nominal.push_back(v);
      pp_->lex_vars.push_back(v);
    }
    std::set<Role> candidates;
    for (const QElement& e : q_.exists) {
      candidates.insert(e.roles.begin(), e.roles.end());
    }
    for (const QElement& e : q_.forall) candidates.insert(*e.roles.begin());
    for (const Role& t : candidates) {
      bool under_forall = false;
      for (const QElement& f : q_.forall) {
        if (rbox_.SubsumesStar(t, *f.roles.begin())) under_forall = true;
      }
      if (!under_forall) continue;
      int v = lp.AddVariable("r_" + RoleTag(t) + "_top", 0, true);
      pp_->r_top[t] = v;
      pp_->lex_vars.push_back(v);
    }
    for (const std::string& n : q_.names) {
      pp_->b.push_back(lp.AddVariable("b_" + n, 0, true));
    }

    for (size_t i = 0; i < q_.exists.size(); ++i) {
      Row({{pp_->r_exists[i], 1}, {B(q_.exists[i].name), -1}}, Relation::kLe, 0);
    }
    for (size_t k = 0; k < q_.nominals.size(); ++k) {
      Row({{pp_->r_nominal[k], 1}, {B(q_.nominals[k]), -1}}, Relation::kEq, 0);
    }
    for (size_t i = 0; i < q_.exists.size(); ++i) {
      for (const Role& t : q_.exists[i].roles) {
        auto it = pp_->r_top.find(t);
        if (it != pp_->r_top.end()) {
          Row({{pp_->r_exists[i], 1}, {it->second, -1}}, Relation::kLe, 0);
        }
      }
    }
    for (const QElement& f : q_.forall) {
      std::vector<std::pair<int, Rational>> coeffs = {
          {pp_->r_top.at(*f.roles.begin()), 1}};
      for (const std::string& n : f.names) coeffs.push_back({B(n), -1});
      Row(std::move(coeffs), Relation::kLe, 0);
    }
    for (const auto& [t, vt] : pp_->r_top) {
      for (const auto& [u, vu] : pp_->r_top) {
        if (t != u && rbox_.SubsumesStar(t, u)) {
          Row({{vt, 1}, {vu, -1}}, Relation::kLe, 0);
        }
      }
    }
    // At most one existing neighbour per partition element.
    std::vector<std::pair<int, Rational>> reuse_row;
    for (size_t i = 0; i < q_.exists.size(); ++i) {
      if (q_.exists[i].reuse_node >= 0) {
        reuse_row.push_back({pp_->r_exists[i], 1});
      }
    }
    if (reuse_row.size() > 1) Row(std::move(reuse_row), Relation::kLe, 1);

    for (const auto& group : tbox_.disjoint) {
      std::vector<std::pair<int, Rational>> coeffs;
      std::set<std::string> members;
      for (const Concept& m : group) {
        if (Has(m) && members.insert(m.name()).second) {
          coeffs.push_back({B(m.name()), 1});
        }
      }
      if (coeffs.size() >= 2) Row(std::move(coeffs), Relation::kLe, 1);
    }
    for (const Gci& g : tbox_.inclusions) {
      std::vector<Concept> lhs;
      if (g.lhs.IsName()) {
        lhs = {g.lhs};
      } else if (g.lhs.kind() == ConceptKind::kAnd) {
        lhs = g.lhs.children();
      } else {
        continue;
      }
      bool ok = true;
      for (const Concept& c : lhs) ok = ok && Has(c);
      if (!ok) continue;
      if (lhs.size() == 1 && g.rhs.IsNegatedName() &&
          tbox_.DeclaredDisjoint(lhs[0], g.rhs.child())) {
        continue;
      }
      std::vector<int> lhs_vars;
      for (const Concept& c : lhs) lhs_vars.push_back(B(c.name()));
      Implication(lhs_vars, g.rhs);
    }
    for (const std::string& f : q_.fresh) {
      if (!index_.count(f)) continue;
      Implication({B(f)}, q_.meaning.at(f));
    }
    for (size_t i = 0; i < q_.exists.size(); ++i) {
      const QElement& e = q_.exists[i];
      if (e.reuse_node < 0) continue;
      for (const std::string& n : q_.names) {
        if (q_.reuse_names.count(n)) continue;
        if (Conflicts(q_.meaning.at(n), e.reuse_label)) {
          Row({{pp_->r_exists[i], 1}, {B(n), 1}}, Relation::kLe, 1);
        }
      }
    }
  }

 private:
  int B(const std::string& name) const { return pp_->b[index_.at(name)]; }
  bool Has(const Concept& c) const {
    return c.IsName() && index_.count(c.name()) > 0 &&
           !q_.fresh.count(c.name()) && !q_.reuse_names.count(c.name());
  }

  void Row(std::vector<std::pair<int, Rational>> coeffs, Relation rel,
           const Rational& rhs) {
    std::sort(coeffs.begin(), coeffs.end());
    if (!seen_.insert({coeffs, {static_cast<int>(rel), rhs}}).second) return;
    pp_->lp.AddRow(std::move(coeffs), rel, rhs);
  }

  // Literals of a disjunction over names; false if something else occurs.
  bool Literals(const Concept& c, std::vector<int>* pos,
                std::vector<int>* neg) const {
    if (c.kind() == ConceptKind::kBottom) return true;
    if (c.kind() == ConceptKind::kOr) {
      for (const Concept& d : c.children()) {
        if (!Literals(d, pos, neg)) return false;
      }
      return true;
    }
    if (Has(c)) {
      pos->push_back(B(c.name()));
      return true;
    }
    if (c.IsNegatedName() && Has(c.child())) {
      neg->push_back(B(c.child().name()));
      return true;
    }
    return false;
  }

  // ⊓ lhs ⊑ rhs, one row per conjunct of rhs that is a clause over N.
  void Implication(const std::vector<int>& lhs, const Concept& rhs) {
    std::vector<Concept> conjuncts =
        rhs.kind() == ConceptKind::kAnd ? rhs.children()
                                        : std::vector<Concept>{rhs};
    for (const Concept& c : conjuncts) {
      std::vector<int> pos;
      std::vector<int> neg;
      if (c.kind() == ConceptKind::kTop || !Literals(c, &pos, &neg)) continue;
      std::map<int, Rational> coeffs;
      for (int v : lhs) coeffs[v] += 1;
      for (int v : pos) coeffs[v] -= 1;
      for (int v : neg) coeffs[v] += 1;
      std::vector<std::pair<int, Rational>> row;
      for (const auto& [v, a] : coeffs) {
        if (a != 0) row.push_back({v, a});
      }
      Rational rhs_value = static_cast<long>(lhs.size() - 1 + neg.size());
      Row(std::move(row), Relation::kLe, rhs_value);
    }
  }

  bool Conflicts(const Concept& meaning, const ConceptSet& label) const {
    if (label.count(Negate(meaning))) return true;
    if (!meaning.IsName()) return false;
    for (const Concept& c : label) {
      if (c.IsName() && tbox_.DeclaredDisjoint(meaning, c)) return true;
    }
    return false;
  }

  const DecompositionSet& q_;
  const Tbox& tbox_;
  const RoleBox& rbox_;
  PricingProblem* pp_;
  std::map<std::string, size_t> index_;
  std::set<std::pair<std::vector<std::pair<int, Rational>>,
                     std::pair<int, Rational>>>
      seen_;
};

}  // namespace

PricingProblem BuildPp(const DecompositionSet& q, const Tbox& tbox,
                       const RoleBox& rbox) {
  PricingProblem pp;
  PpBuilder(q, tbox, rbox, &pp).Build();
  return pp;
}

Column ColumnFromPp(const DecompositionSet& q, const PricingProblem& pp,
                    const std::vector<Rational>& values) {
  Column col;
  std::vector<std::string> parts;
  for (size_t i = 0; i < pp.r_exists.size(); ++i) {
    if (values[pp.r_exists[i]] == 1) {
      col.exists.push_back(static_cast<int>(i));
      parts.push_back(q.exists[i].label);
    }
  }
  for (size_t k = 0; k < pp.r_nominal.size(); ++k) {
    if (values[pp.r_nominal[k]] == 1) {
      col.nominals.push_back(static_cast<int>(k));
      parts.push_back("I_" + q.nominals[k]);
    }
  }
  for (const auto& [t, v] : pp.r_top) {
    if (values[v] == 1) col.top_roles.insert(t);
  }
  col.cost = 0;
  for (size_t k = 0; k < pp.b.size(); ++k) {
    if (values[pp.b[k]] == 1) {
      col.concepts.push_back(q.names[k]);
      col.cost += 1;
    }
  }
  col.label = "x[";
  for (size_t k = 0; k < parts.size(); ++k) {
    col.label += (k ? "," : "") + parts[k];
  }
  col.label += "]";
  return col;
}

std::string SolutionTuple::ToString() const {
  std::ostringstream out;
  out << "<" << RoleSetToString(roles) << ",{";
  bool first = true;
  for (const Concept& c : concepts) {
    out << (first ? "" : ",") << c.ToString();
    first = false;
  }
  out << "}," << n;
  if (!reuse.empty()) {
    out << ",{";
    first = true;
    for (int v : reuse) {
      out << (first ? "" : ",") << v;
      first = false;
    }
    out << "}";
  }
  out << ">";
  return out.str();
}

std::vector<std::string> MasterRowNames(const DecompositionSet& q) {
  std::vector<std::string> names;
  for (const QElement& e : q.exists) names.push_back(e.label);
  for (const std::string& o : q.nominals) names.push_back("I_" + o);
  return names;
}

Rational DefaultBigM(const DecompositionSet& q, bool paper_m) {
  if (paper_m || q.size() <= 4) return 10;
  return Rational(static_cast<long>(2 * (q.names.size() + q.size())));
}

namespace {

class PpPricer : public Pricer {
 public:
  PpPricer(const DecompositionSet& q, const PricingProblem& pp,
           const NodeSolveOptions& options)
      : q_(q), pp_(pp), lp_(pp.lp), options_(options) {
    coverage_ = pp.r_exists;
    coverage_.insert(coverage_.end(), pp.r_nominal.begin(), pp.r_nominal.end());
    for (const std::vector<int>& pattern : options.excluded) NoGood(pattern);
  }

  std::optional<PricingResult> Price(const std::vector<Rational>& duals,
                                     const Rational& cost_weight) override {
    for (int v = 0; v < lp_.num_vars(); ++v) lp_.objective[v] = 0;
    for (int v : pp_.b) lp_.objective[v] = cost_weight;
    for (size_t i = 0; i < coverage_.size(); ++i) {
      lp_.objective[coverage_[i]] = -duals[i];
    }
    BinaryOptions bo;
    bo.lex_vars = pp_.lex_vars;
    bo.node_limit = options_.pp_node_limit;
    LpOutcome out = SolveBinary(lp_, bo);
    if (out.status != LpStatus::kOptimal) return std::nullopt;
    Column col = ColumnFromPp(q_, pp_, out.primal);
    PricingResult res;
    res.objective = out.objective;
    res.column.cost = col.cost;
    res.column.label = col.label;
    for (size_t i = 0; i < coverage_.size(); ++i) {
      if (out.primal[coverage_[i]] == 1) {
        res.column.coeffs.push_back({static_cast<int>(i), Rational(1)});
      }
    }
    for (int v = 0; v < lp_.num_vars(); ++v) {
      if (out.primal[v] == 1) res.column.pattern.push_back(v);
    }
    return res;
  }

  void Forbid(const PricedColumn& column) override {
    std::vector<int> rows;
    for (const auto& c : column.coeffs) rows.push_back(c.first);
    NoGood(rows);
  }

 private:
  // Cuts off every PP solution whose coverage equals rows.
  void NoGood(const std::vector<int>& rows) {
    std::set<int> on(rows.begin(), rows.end());
    std::vector<std::pair<int, Rational>> coeffs;
    for (size_t i = 0; i < coverage_.size(); ++i) {
      coeffs.push_back({coverage_[i], on.count(static_cast<int>(i)) ? -1 : 1});
    }
    lp_.AddRow(std::move(coeffs), Relation::kGe,
               1 - static_cast<long>(on.size()));
  }

  const DecompositionSet& q_;
  const PricingProblem& pp_;
  LinearProgram lp_;
  const NodeSolveOptions& options_;
  std::vector<int> coverage_;
};

}  // namespace

NodeSolution SolveNode(const DecompositionSet& q, const PricingProblem& pp,
                       const NodeSolveOptions& options,
                       const BpTraceFn& trace) {
  NodeSolution sol;
  MasterSeed seed;
  for (size_t i = 0; i < q.exists.size(); ++i) {
    seed.relations.push_back(Relation::kGe);
    seed.rhs.push_back(1);
  }
  for (size_t k = 0; k < q.nominals.size(); ++k) {
    seed.relations.push_back(Relation::kEq);
    seed.rhs.push_back(1);
  }
  seed.row_names = MasterRowNames(q);
  seed.artificial_cost =
      options.big_m ? *options.big_m : DefaultBigM(q, options.paper_m);
  const size_t rows = seed.rhs.size();
  const Rational safe_m =
      Rational(static_cast<long>(rows * std::max<size_t>(q.names.size(), 1) + 1));
  seed.safe_artificial_cost = safe_m;

  PpPricer pricer(q, pp, options);
  BpResult res = BranchAndPrice(seed, pricer, options.bp, trace);
  sol.iterations = res.iterations;
  sol.bp_nodes = res.bp_nodes;
  sol.big_m = res.artificial_cost;
  sol.columns_generated = static_cast<int>(res.pool.size());
  if (res.lp_infeasible || !res.found || res.artificial_positive) return sol;

  sol.feasible = true;
  sol.objective = res.objective;
  for (const auto& [p, value] : res.selected) {
    const PricedColumn& pc = res.pool[p];
    std::vector<Rational> values(pp.lp.num_vars(), 0);
    for (int v : pc.pattern) values[v] = 1;
    Column col = ColumnFromPp(q, pp, values);
    SolutionTuple t;
    t.n = static_cast<int>(value.get_num().get_si());
    for (int i : col.exists) {
      const QElement& e = q.exists[i];
      t.roles.insert(e.roles.begin(), e.roles.end());
      if (e.reuse_node >= 0) t.reuse.insert(e.reuse_node);
    }
    t.roles.insert(col.top_roles.begin(), col.top_roles.end());
    for (const std::string& n : col.concepts) {
      if (q.reuse_names.count(n)) continue;
      t.concepts.insert(q.meaning.at(n));
    }
    std::vector<int> pattern;
    for (const auto& c : pc.coeffs) pattern.push_back(c.first);
    sol.patterns.push_back(std::move(pattern));
    sol.columns.push_back(std::move(col));
    sol.values.push_back(t.n);
    sol.tuples.push_back(std::move(t));
  }
  return sol;
}

}  // namespace shoi
