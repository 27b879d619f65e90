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

#include "shoi/verifier.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace shoi {

bool VerificationReport::AllPassed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed; });
}

std::string VerificationReport::ToString() const {
  std::ostringstream out;
  for (const PropertyResult& p : properties) {
    out << p.name << ' ' << (p.passed ? "pass" : "FAIL");
    if (!p.passed) out << "  " << p.witness;
    out << '\n';
  }
  return out.str();
}

namespace {

class Checker {
 public:
  Checker(const CompletionGraph& g, const Tbox& tbox, const RoleBox& rbox)
      : g_(g), tbox_(tbox), rbox_(rbox) {
    for (int x : g.LiveNodes()) {
      if (!g.IsIndirectlyBlocked(x)) s_.insert(x);
    }
    for (int i = 1; i <= 10; ++i) {
      report_.properties.push_back({"P" + std::to_string(i), true, ""});
    }
  }

  VerificationReport Run() {
    for (int x : s_) CheckNode(x);
    CheckNominals();
    return report_;
  }

 private:
  void Fail(int p, const std::string& witness) {
    PropertyResult& r = report_.properties[p - 1];
    if (!r.passed) return;
    r.passed = false;
    r.witness = witness;
  }

  const std::string& Name(int x) const { return g_.node(x).name; }

  std::vector<std::pair<int, const RoleSet*>> Neighbours(int x) const {
    std::vector<std::pair<int, const RoleSet*>> out;
    for (const auto& [y, roles] : g_.node(x).edges) {
      if (s_.count(y)) out.push_back({y, &roles});
    }
    return out;
  }

  bool HasWitness(int x, const Concept& c) const {
    for (const auto& [y, roles] : Neighbours(x)) {
      if (roles->count(c.role()) && g_.node(y).label.count(c.child())) {
        return true;
      }
    }
    return false;
  }

  void CheckNode(int x) {
    const GraphNode& n = g_.node(x);
    const ConceptSet& label = n.label;
    const std::string& name = n.name;
    if (tbox_.internal.kind() != ConceptKind::kTop &&
        !label.count(tbox_.internal)) {
      Fail(2, "C_T missing at " + name);
    }
    for (const Concept& c : label) {
      if (c.kind() == ConceptKind::kBottom) Fail(1, "bottom at " + name);
      if (label.count(Negate(c))) {
        Fail(1, c.ToString() + " and its negation at " + name);
      }
      switch (c.kind()) {
        case ConceptKind::kAnd:
          for (const Concept& ch : c.children()) {
            if (!label.count(ch)) {
              Fail(2, c.ToString() + " at " + name + " lacks " + ch.ToString());
            }
          }
          break;
        case ConceptKind::kOr:
          if (std::none_of(c.children().begin(), c.children().end(),
                           [&](const Concept& d) { return label.count(d) > 0; })) {
            Fail(3, c.ToString() + " at " + name + " has no disjunct");
          }
          break;
        case ConceptKind::kSome: {
          bool ok = HasWitness(x, c);
          int blocker = -1;
          if (!ok && g_.IsDirectlyBlocked(x, &blocker)) {
            ok = HasWitness(blocker, c);
          }
          if (!ok) Fail(5, c.ToString() + " at " + name + " has no witness");
          break;
        }
        case ConceptKind::kAll:
          CheckAll(x, c);
          break;
        default:
          break;
      }
      const Concept* u = tbox_.Unfolding(c);
      if (u && u->kind() != ConceptKind::kTop && !label.count(*u)) {
        Fail(2, c.ToString() + " at " + name + " lacks its definition");
      }
    }
    for (const auto& [y, roles] : Neighbours(x)) {
      for (const Role& r : *roles) {
        for (const Role& s : rbox_.SuperRoles(r)) {
          if (!roles->count(s)) {
            Fail(7, "L(" + name + "," + Name(y) + ") has " + r.ToString() +
                        " but not " + s.ToString());
          }
        }
      }
      RoleSet inv;
      for (const Role& r : *roles) inv.insert(r.Inv());
      if (g_.EdgeLabel(y, x) != inv) {
        Fail(8, "L(" + Name(y) + "," + name + ") is not the inverse of L(" +
                    name + "," + Name(y) + ")");
      }
    }
  }

  void CheckAll(int x, const Concept& c) {
    const std::string& name = Name(x);
    for (const auto& [y, roles] : Neighbours(x)) {
      const ConceptSet& ly = g_.node(y).label;
      if (roles->count(c.role()) && !ly.count(c.child())) {
        Fail(4, c.ToString() + " at " + name + " not propagated to " + Name(y));
      }
      for (const Role& r : rbox_.AllRoles()) {
        if (!rbox_.IsTransitive(r) || !rbox_.SubsumesStar(r, c.role())) continue;
        bool edge = std::any_of(roles->begin(), roles->end(), [&](const Role& u) {
          return rbox_.SubsumesStar(u, r);
        });
        if (edge && !ly.count(Concept::All(r, c.child()))) {
          Fail(6, c.ToString() + " at " + name + " not pushed along " +
                      r.ToString() + " to " + Name(y));
        }
      }
    }
  }

  void CheckNominals() {
    std::map<std::string, std::vector<int>> where;
    for (int x : s_) {
      for (const Concept& c : g_.node(x).label) {
        if (c.kind() == ConceptKind::kNominal) where[c.name()].push_back(x);
      }
    }
    for (const auto& [o, nodes] : where) {
      if (nodes.size() > 1) {
        Fail(9, o + " in " + Name(nodes[0]) + " and " + Name(nodes[1]));
      }
    }
    for (const std::string& o : tbox_.nominals) {
      auto it = where.find(o);
      if (it == where.end()) {
        Fail(10, o + " occurs in no node");
      } else if (it->second.size() != 1) {
        Fail(10, o + " occurs in " + std::to_string(it->second.size()) +
                     " nodes");
      } else if (g_.node(it->second[0]).cardinality != 1) {
        Fail(10, o + " node " + Name(it->second[0]) + " has cardinality " +
                     std::to_string(g_.node(it->second[0]).cardinality));
      }
    }
  }

  const CompletionGraph& g_;
  const Tbox& tbox_;
  const RoleBox& rbox_;
  std::set<int> s_;
  VerificationReport report_;
};

}  // namespace

VerificationReport VerifyTableauProperties(const CompletionGraph& graph,
                                           const Tbox& tbox,
                                           const RoleBox& rbox) {
  return Checker(graph, tbox, rbox).Run();
}

}  // namespace shoi
