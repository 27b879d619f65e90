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

#include "shoi/tableau.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "shoi/algebraic.h"

namespace shoi {

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kConsistent:
      return "CONSISTENT";
    case Verdict::kInconsistent:
      return "INCONSISTENT";
    case Verdict::kGaveUp:
      return "GAVE_UP";
  }
  return "?";
}

nlohmann::json TableauStats::ToJson() const {
  nlohmann::json j;
  j["nodes_created"] = nodes_created;
  j["rules"] = rules;
  j["am_invocations"] = am_invocations;
  j["columns_generated"] = columns_generated;
  j["bp_nodes"] = bp_nodes;
  j["branch_points"] = branch_points;
  j["backtracks"] = backtracks;
  return j;
}

namespace {

const char kRootNominal[] = "@root";

nlohmann::json ConceptList(const std::vector<Concept>& cs) {
  nlohmann::json out = nlohmann::json::array();
  for (const Concept& c : cs) out.push_back(c.ToString());
  return out;
}

nlohmann::json RoleList(const RoleSet& roles) {
  nlohmann::json out = nlohmann::json::array();
  for (const Role& r : roles) out.push_back(r.ToString());
  return out;
}

struct State {
  CompletionGraph graph;
  // Signature of the inputs of the last AM call per node.
  std::map<int, std::string> am_done;
  std::map<int, std::vector<std::vector<int>>> excluded;
  int next_index = 1;
};

struct BranchPoint {
  enum class Kind { kOr, kAm };
  Kind kind = Kind::kOr;
  State snapshot;
  int node = -1;
  std::vector<Concept> disjuncts;
  std::vector<std::vector<std::vector<int>>> alternatives;
};

class Engine {
 public:
  Engine(const Tbox& tbox, const RoleBox& rbox,
         const std::vector<std::string>& individuals,
         const TableauOptions& options)
      : tbox_(tbox), rbox_(rbox), individuals_(individuals), options_(options) {}

  TableauResult Run() {
    TableauResult result;
    try {
      Init();
      while (true) {
        CheckDeadline();
        bool applied = ApplyOne();
        if (!clash_) clash_ = FindClash();
        if (clash_) {
          if (!Backtrack()) {
            result.verdict = Verdict::kInconsistent;
            break;
          }
          continue;
        }
        if (applied) continue;
        if (AddMissingNominals()) continue;
        result.verdict = Verdict::kConsistent;
        break;
      }
    } catch (const BudgetExceeded& e) {
      result.verdict = Verdict::kGaveUp;
      result.gave_up_reason = e.what();
    }
    Emit({{"event", "result"}, {"verdict", VerdictName(result.verdict)}});
    result.graph = std::move(state_.graph);
    result.stats = stats_;
    return result;
  }

 private:
  CompletionGraph& g() { return state_.graph; }
  const std::string& Name(int x) { return g().node(x).name; }

  void Emit(const nlohmann::json& j) {
    if (options_.trace) options_.trace(j);
  }

  void Rule(const std::string& tag, nlohmann::json j) {
    ++stats_.rules[tag];
    if (!options_.trace) return;
    j["rule"] = tag;
    Emit(j);
  }

  void CheckDeadline() const {
    if (options_.deadline &&
        std::chrono::steady_clock::now() > *options_.deadline) {
      throw BudgetExceeded("time limit");
    }
  }

  ConceptSet NewLabel(const ConceptSet& concepts) const {
    ConceptSet label = concepts;
    if (tbox_.internal.kind() != ConceptKind::kTop) label.insert(tbox_.internal);
    return label;
  }

  int NewNode(const std::string& name, const ConceptSet& label, int n,
              bool initial, int parent) {
    if (stats_.nodes_created >= options_.max_nodes) {
      throw BudgetExceeded("graph node limit");
    }
    ++stats_.nodes_created;
    int id = g().AddNode(name, NewLabel(label), n, initial, parent);
    dirty_.insert(id);
    return id;
  }

  // Returns the concepts that were not already present.
  std::vector<Concept> AddConcepts(int x, const std::vector<Concept>& cs) {
    std::vector<Concept> added;
    ConceptSet& label = g().node(x).label;
    for (const Concept& c : cs) {
      if (label.insert(c).second) added.push_back(c);
    }
    if (!added.empty()) dirty_.insert(g().Find(x));
    return added;
  }

  void Init() {
    if (individuals_.empty()) {
      int x = NewNode("x", {Concept::Nominal(kRootNominal)}, 1, true, -1);
      Rule("init", {{"node", Name(x)}});
    }
    for (const std::string& o : individuals_) {
      int x = NewNode(o, {Concept::Nominal(o)}, 1, true, -1);
      Rule("init", {{"node", Name(x)}});
    }
  }

  // Live nodes that are not indirectly blocked, in creation order.
  std::vector<int> Active() const {
    std::vector<int> out;
    for (int x : state_.graph.LiveNodes()) {
      if (!state_.graph.IsIndirectlyBlocked(x)) out.push_back(x);
    }
    return out;
  }

  bool ApplyOne() {
    std::vector<int> active = Active();
    return NomMerge() || Inverse(active) || And(active) || Forall(active) ||
           ForallTrans(active) || Or(active) || Dispatch(active);
  }

  bool NomMerge() {
    std::map<std::string, int> owner;
    for (int x : g().LiveNodes()) {
      for (const Concept& c : g().node(x).label) {
        if (c.kind() != ConceptKind::kNominal) continue;
        auto [it, fresh] = owner.emplace(c.name(), x);
        if (fresh) continue;
        int older = it->second;
        int from = x;
        int into = older;
        if (g().node(x).initial && !g().node(older).initial) {
          from = older;
          into = x;
        }
        std::string from_name = Name(from);
        int card = std::max(g().node(from).cardinality,
                            g().node(into).cardinality);
        g().Merge(from, into);
        g().node(into).cardinality = card;
        state_.am_done.erase(from);
        state_.excluded.erase(from);
        dirty_.insert(into);
        Rule("nom_merge", {{"from", from_name},
                           {"into", Name(into)},
                           {"nominal", c.name()}});
        return true;
      }
    }
    return false;
  }

  bool Inverse(const std::vector<int>& active) {
    for (int y : active) {
      GraphNode& yn = g().node(y);
      for (const Concept& c : yn.label) {
        if (c.kind() != ConceptKind::kAll) continue;
        for (const auto& [v, roles] : yn.edges) {
          if (v == y || yn.succ.count(v)) continue;
          bool match = std::any_of(roles.begin(), roles.end(), [&](const Role& t) {
            return rbox_.SubsumesStar(t, c.role());
          });
          if (!match) continue;
          auto it = yn.back.find(v);
          if (it != yn.back.end() && it->second == roles) continue;
          yn.back[v] = roles;
          Rule("inverse", {{"node", yn.name},
                           {"neighbour", Name(v)},
                           {"roles", RoleList(roles)}});
          return true;
        }
      }
    }
    return false;
  }

  bool And(const std::vector<int>& active) {
    for (int x : active) {
      const ConceptSet& label = g().node(x).label;
      for (const Concept& c : label) {
        if (c.kind() == ConceptKind::kAnd) {
          std::vector<Concept> missing;
          for (const Concept& ch : c.children()) {
            if (!label.count(ch)) missing.push_back(ch);
          }
          if (missing.empty()) continue;
          AddConcepts(x, missing);
          Rule("and", {{"node", Name(x)}, {"concepts", ConceptList(missing)}});
          return true;
        }
        const Concept* u = tbox_.Unfolding(c);
        if (u && u->kind() != ConceptKind::kTop && !label.count(*u)) {
          Concept def = *u;
          AddConcepts(x, {def});
          Rule("unfold", {{"node", Name(x)},
                          {"name", c.ToString()},
                          {"concepts", ConceptList({def})}});
          return true;
        }
      }
    }
    return false;
  }

  bool HasSubrole(const RoleSet& roles, const Role& s) const {
    return std::any_of(roles.begin(), roles.end(), [&](const Role& r) {
      return rbox_.SubsumesStar(r, s);
    });
  }

  bool Forall(const std::vector<int>& active) {
    for (int x : active) {
      const GraphNode& xn = g().node(x);
      for (const Concept& c : xn.label) {
        if (c.kind() != ConceptKind::kAll) continue;
        for (const auto& [y, roles] : xn.edges) {
          if (!HasSubrole(roles, c.role())) continue;
          if (g().node(y).label.count(c.child())) continue;
          Concept filler = c.child();
          std::string where = xn.name;
          AddConcepts(y, {filler});
          Rule("forall", {{"node", where},
                          {"target", Name(y)},
                          {"concepts", ConceptList({filler})}});
          return true;
        }
      }
    }
    return false;
  }

  bool ForallTrans(const std::vector<int>& active) {
    std::vector<Role> roles_all = rbox_.AllRoles();
    for (int x : active) {
      const GraphNode& xn = g().node(x);
      for (const Concept& c : xn.label) {
        if (c.kind() != ConceptKind::kAll) continue;
        for (const Role& r : roles_all) {
          if (!rbox_.IsTransitive(r) || !rbox_.SubsumesStar(r, c.role())) {
            continue;
          }
          Concept pushed = Concept::All(r, c.child());
          for (const auto& [y, roles] : xn.edges) {
            if (!HasSubrole(roles, r)) continue;
            if (g().node(y).label.count(pushed)) continue;
            std::string where = xn.name;
            AddConcepts(y, {pushed});
            Rule("forall_trans", {{"node", where},
                                  {"target", Name(y)},
                                  {"concepts", ConceptList({pushed})}});
            return true;
          }
        }
      }
    }
    return false;
  }

  bool Or(const std::vector<int>& active) {
    for (int x : active) {
      const ConceptSet& label = g().node(x).label;
      for (const Concept& c : label) {
        if (c.kind() != ConceptKind::kOr) continue;
        const auto& ch = c.children();
        if (std::any_of(ch.begin(), ch.end(),
                        [&](const Concept& d) { return label.count(d) > 0; })) {
          continue;
        }
        std::vector<Concept> candidates;
        for (const Concept& d : ch) {
          if (d.kind() == ConceptKind::kBottom) continue;
          if (label.count(Negate(d))) continue;
          candidates.push_back(d);
        }
        if (candidates.empty()) {
          clash_ = "every disjunct of " + c.ToString() + " is contradicted at " +
                   Name(x);
          return true;
        }
        if (candidates.size() > 1) {
          BranchPoint bp;
          bp.kind = BranchPoint::Kind::kOr;
          bp.snapshot = state_;
          bp.node = x;
          bp.disjuncts.assign(candidates.begin() + 1, candidates.end());
          stack_.push_back(std::move(bp));
          ++stats_.branch_points;
        }
        Concept pick = candidates.front();
        bool branch = candidates.size() > 1;
        AddConcepts(x, {pick});
        Rule("or", {{"node", Name(x)},
                    {"concepts", ConceptList({pick})},
                    {"branch", branch}});
        return true;
      }
    }
    return false;
  }

  std::string Signature(int x) {
    std::ostringstream sig;
    const GraphNode& xn = g().node(x);
    for (const Concept& c : xn.label) {
      if (c.kind() == ConceptKind::kSome || c.kind() == ConceptKind::kAll) {
        sig << c.ToString() << ';';
      }
    }
    sig << "|B";
    for (const auto& [v, roles] : xn.back) {
      int w = g().Find(v);
      if (w == x) continue;
      sig << ' ' << w << RoleSetToString(roles);
    }
    sig << "|E";
    auto it = state_.excluded.find(x);
    if (it != state_.excluded.end()) {
      for (const auto& p : it->second) {
        sig << " [";
        for (int i : p) sig << i << ',';
        sig << ']';
      }
    }
    return sig.str();
  }

  std::string TupleString(const SolutionTuple& t) {
    std::ostringstream out;
    out << "<" << RoleSetToString(t.roles) << ",{";
    bool first = true;
    for (const Concept& c : t.concepts) {
      out << (first ? "" : ",") << c.ToString();
      first = false;
    }
    out << "}," << t.n;
    if (!t.reuse.empty()) {
      out << ",{";
      first = true;
      for (int v : t.reuse) {
        out << (first ? "" : ",") << Name(v);
        first = false;
      }
      out << "}";
    }
    out << ">";
    return out.str();
  }

  bool Dispatch(const std::vector<int>& active) {
    for (int x : active) {
      if (g().IsDirectlyBlocked(x)) continue;
      std::string sig = Signature(x);
      auto done = state_.am_done.find(x);
      if (done != state_.am_done.end() && done->second == sig) continue;
      std::vector<BackEdge> back;
      for (const auto& [v, roles] : g().node(x).back) {
        int w = g().Find(v);
        if (w == x) continue;
        back.push_back({w, Name(w), roles, g().node(w).label});
      }
      DecompositionSet q = BuildDecomposition(g().node(x).label, back);
      state_.am_done[x] = sig;
      if (!q.HasNewSuccessors()) continue;
      Solve(x, q);
      return true;
    }
    return false;
  }

  void Solve(int x, const DecompositionSet& q) {
    PricingProblem pp = BuildPp(q, tbox_, rbox_);
    NodeSolveOptions opts;
    opts.paper_m = options_.paper_m;
    opts.big_m = options_.big_m;
    opts.bp.max_nodes = options_.max_bp_nodes;
    opts.bp.deadline = options_.deadline;
    opts.excluded = state_.excluded[x];

    nlohmann::json rec;
    nlohmann::json iterations = nlohmann::json::array();
    BpTraceFn bp_trace;
    if (options_.trace) {
      rec["event"] = "am";
      rec["node"] = Name(x);
      nlohmann::json qe = nlohmann::json::array();
      nlohmann::json qf = nlohmann::json::array();
      for (const QElement& e : q.exists) qe.push_back(e.label);
      for (const QElement& e : q.forall) qf.push_back(e.label);
      rec["q_exists"] = qe;
      rec["q_forall"] = qf;
      rec["q_nominals"] = q.nominals;
      rec["rows"] = MasterRowNames(q);
      rec["excluded"] = opts.excluded.size();
      bp_trace = [&iterations](const BpIteration& it) {
        nlohmann::json j;
        j["bp_node"] = it.bp_node;
        j["iteration"] = it.iteration;
        j["rmp_objective"] = it.rmp_objective.get_str();
        nlohmann::json duals = nlohmann::json::array();
        for (const Rational& d : it.duals) duals.push_back(d.get_str());
        j["duals"] = duals;
        j["pp_objective"] = it.pp_objective.get_str();
        if (it.entering) j["entering"] = it.entering->label;
        iterations.push_back(std::move(j));
      };
    }
    NodeSolution sol = SolveNode(q, pp, opts, bp_trace);
    ++stats_.am_invocations;
    ++stats_.rules["am"];
    stats_.columns_generated += sol.columns_generated;
    stats_.bp_nodes += sol.bp_nodes;
    if (options_.trace) {
      rec["iterations"] = iterations;
      rec["feasible"] = sol.feasible;
      rec["big_m"] = sol.big_m.get_str();
      if (sol.feasible) {
        rec["objective"] = sol.objective.get_str();
        nlohmann::json cols = nlohmann::json::array();
        for (size_t i = 0; i < sol.columns.size(); ++i) {
          cols.push_back({{"label", sol.columns[i].label},
                          {"value", sol.values[i]}});
        }
        rec["columns"] = cols;
        nlohmann::json sigma = nlohmann::json::array();
        for (const SolutionTuple& t : sol.tuples) sigma.push_back(TupleString(t));
        rec["sigma"] = sigma;
      }
      Emit(rec);
    }
    if (!sol.feasible) {
      clash_ = "no feasible decomposition at " + Name(x);
      return;
    }
    if (!sol.patterns.empty()) {
      BranchPoint bp;
      bp.kind = BranchPoint::Kind::kAm;
      bp.snapshot = state_;
      bp.node = x;
      for (const std::vector<int>& p : sol.patterns) {
        std::vector<std::vector<int>> alt = opts.excluded;
        alt.push_back(p);
        bp.alternatives.push_back(std::move(alt));
      }
      stack_.push_back(std::move(bp));
      ++stats_.branch_points;
    }
    ApplySigma(x, sol.tuples);
  }

  void ApplySigma(int x, const std::vector<SolutionTuple>& sigma) {
    std::set<int> used;
    for (const SolutionTuple& t : sigma) {
      if (t.roles.empty()) continue;
      std::vector<Concept> concepts(t.concepts.begin(), t.concepts.end());
      if (!t.reuse.empty()) {
        for (int v0 : t.reuse) {
          int v = g().Find(v0);
          std::vector<Concept> added = AddConcepts(v, concepts);
          int old_n = g().node(v).cardinality;
          g().node(v).cardinality = t.n;
          dirty_.insert(v);
          nlohmann::json j = {{"node", Name(x)},
                              {"target", Name(v)},
                              {"concepts", ConceptList(added)},
                              {"n", t.n},
                              {"reuse", true}};
          if (old_n > t.n) j["cardinality_lowered_from"] = old_n;
          Rule("fil", j);
          AddEdges(x, v, t.roles);
        }
        continue;
      }
      int target = -1;
      for (const auto& [y, roles] : g().node(x).edges) {
        if (y == x || used.count(y)) continue;
        const GraphNode& yn = g().node(y);
        if (yn.cardinality < t.n) continue;
        if (!std::includes(roles.begin(), roles.end(), t.roles.begin(),
                           t.roles.end())) {
          continue;
        }
        if (!std::includes(yn.label.begin(), yn.label.end(),
                           t.concepts.begin(), t.concepts.end())) {
          continue;
        }
        target = y;
        break;
      }
      if (target >= 0) {
        used.insert(target);
        continue;
      }
      std::string name = "x" + std::to_string(state_.next_index++);
      int y = NewNode(name, t.concepts, t.n, false, x);
      g().node(x).succ.insert(y);
      used.insert(y);
      Rule("fil", {{"node", Name(x)},
                   {"target", name},
                   {"concepts", ConceptList(concepts)},
                   {"n", t.n}});
      AddEdges(x, y, t.roles);
    }
  }

  void AddEdges(int x, int y, const RoleSet& roles) {
    if (!g().AddEdgeRoles(x, y, roles, rbox_)) return;
    Rule("e", {{"node", Name(x)},
               {"target", Name(y)},
               {"roles", RoleList(g().EdgeLabel(x, y))}});
  }

  std::optional<std::string> FindClash() {
    std::set<int> dirty = std::move(dirty_);
    dirty_.clear();
    for (int id : dirty) {
      int x = g().Find(id);
      const GraphNode& xn = g().node(x);
      for (const Concept& c : xn.label) {
        if (c.kind() == ConceptKind::kBottom) {
          return "bottom in label of " + xn.name;
        }
        if (c.kind() == ConceptKind::kNot && c.child().IsName() &&
            xn.label.count(c.child())) {
          return c.child().ToString() + " and its negation at " + xn.name;
        }
      }
      if (xn.cardinality > 1 && g().IsNominalNode(x)) {
        return "nominal node " + xn.name + " with cardinality " +
               std::to_string(xn.cardinality);
      }
    }
    return std::nullopt;
  }

  bool Backtrack() {
    ++stats_.backtracks;
    Emit({{"event", "clash"}, {"reason", *clash_}});
    clash_.reset();
    dirty_.clear();
    if (stack_.empty()) return false;
    BranchPoint& bp = stack_.back();
    if (bp.kind == BranchPoint::Kind::kOr) {
      Concept pick = bp.disjuncts.front();
      bp.disjuncts.erase(bp.disjuncts.begin());
      int x = bp.node;
      if (bp.disjuncts.empty()) {
        state_ = std::move(bp.snapshot);
        stack_.pop_back();
      } else {
        state_ = bp.snapshot;
      }
      AddConcepts(x, {pick});
      Rule("or", {{"node", Name(x)},
                  {"concepts", ConceptList({pick})},
                  {"branch", true},
                  {"backtrack", true}});
      return true;
    }
    std::vector<std::vector<int>> alt = std::move(bp.alternatives.front());
    bp.alternatives.erase(bp.alternatives.begin());
    int x = bp.node;
    if (bp.alternatives.empty()) {
      state_ = std::move(bp.snapshot);
      stack_.pop_back();
    } else {
      state_ = bp.snapshot;
    }
    state_.excluded[x] = std::move(alt);
    state_.am_done.erase(x);
    Emit({{"event", "am_alternative"},
          {"node", Name(x)},
          {"excluded", state_.excluded[x].size()}});
    return true;
  }

  bool AddMissingNominals() {
    std::set<std::string> present;
    for (int x : g().LiveNodes()) {
      for (const Concept& c : g().node(x).label) {
        if (c.kind() == ConceptKind::kNominal) present.insert(c.name());
      }
    }
    std::vector<std::string> order = individuals_;
    for (const std::string& o : tbox_.nominals) {
      if (std::find(order.begin(), order.end(), o) == order.end()) {
        order.push_back(o);
      }
    }
    bool added = false;
    for (const std::string& o : order) {
      if (present.count(o)) continue;
      int x = NewNode(o, {Concept::Nominal(o)}, 1, true, -1);
      Rule("init", {{"node", Name(x)}});
      added = true;
    }
    return added;
  }

  const Tbox& tbox_;
  const RoleBox& rbox_;
  const std::vector<std::string>& individuals_;
  const TableauOptions& options_;
  State state_;
  std::vector<BranchPoint> stack_;
  std::set<int> dirty_;
  std::optional<std::string> clash_;
  TableauStats stats_;
};

}  // namespace

TableauResult CheckConsistency(const Tbox& tbox, const RoleBox& rbox,
                               const std::vector<std::string>& individuals,
                               const TableauOptions& options) {
  Engine engine(tbox, rbox, individuals, options);
  return engine.Run();
}

TableauResult CheckConsistency(const KnowledgeBase& kb,
                               const TableauOptions& options) {
  return CheckConsistency(kb.tbox, kb.rbox, kb.asserted_individuals, options);
}

}  // namespace shoi
