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

#include "shoi/graph.h"

namespace shoi {

namespace {

const RoleSet kEmptyRoles;

RoleSet Inverse(const RoleSet& roles) {
  RoleSet out;
  for (const Role& r : roles) out.insert(r.Inv());
  return out;
}

}  // namespace

int CompletionGraph::AddNode(const std::string& name, const ConceptSet& label,
                             int cardinality, bool initial, int parent) {
  GraphNode n;
  n.id = static_cast<int>(nodes_.size());
  n.name = name;
  n.label = label;
  n.cardinality = cardinality;
  n.initial = initial;
  n.parent = parent;
  nodes_.push_back(std::move(n));
  return nodes_.back().id;
}

int CompletionGraph::Find(int id) const {
  while (nodes_[id].merged_into >= 0) id = nodes_[id].merged_into;
  return id;
}

std::vector<int> CompletionGraph::LiveNodes() const {
  std::vector<int> out;
  for (const GraphNode& n : nodes_) {
    if (n.alive()) out.push_back(n.id);
  }
  return out;
}

int CompletionGraph::num_live() const {
  int count = 0;
  for (const GraphNode& n : nodes_) count += n.alive() ? 1 : 0;
  return count;
}

const RoleSet& CompletionGraph::EdgeLabel(int x, int y) const {
  const GraphNode& n = node(x);
  auto it = n.edges.find(Find(y));
  return it == n.edges.end() ? kEmptyRoles : it->second;
}

bool CompletionGraph::AddEdgeRoles(int x, int y, const RoleSet& roles,
                                   const RoleBox& rbox) {
  x = Find(x);
  y = Find(y);
  bool changed = false;
  for (const Role& r : roles) {
    for (const Role& s : rbox.SuperRoles(r)) {
      changed |= nodes_[x].edges[y].insert(s).second;
      changed |= nodes_[y].edges[x].insert(s.Inv()).second;
    }
  }
  return changed;
}

bool CompletionGraph::IsNominalNode(int x) const {
  const GraphNode& n = node(x);
  if (n.initial) return true;
  for (const Concept& c : n.label) {
    if (c.kind() == ConceptKind::kNominal) return true;
  }
  return false;
}

void CompletionGraph::Merge(int from, int into) {
  from = Find(from);
  into = Find(into);
  if (from == into) return;
  GraphNode& src = nodes_[from];
  nodes_[into].label.insert(src.label.begin(), src.label.end());
  if (src.initial) nodes_[into].initial = true;

  std::map<int, RoleSet> edges = std::move(src.edges);
  src.edges.clear();
  for (auto& [y, roles] : edges) {
    if (y != from) nodes_[y].edges.erase(from);
    int target = (y == from) ? into : y;
    nodes_[into].edges[target].insert(roles.begin(), roles.end());
    RoleSet inv = Inverse(roles);
    nodes_[target].edges[into].insert(inv.begin(), inv.end());
  }

  std::map<int, RoleSet> back = std::move(src.back);
  src.back.clear();
  for (auto& [v, roles] : back) {
    int target = (v == from) ? into : Find(v);
    nodes_[into].back[target].insert(roles.begin(), roles.end());
  }
  std::set<int> succ = std::move(src.succ);
  src.succ.clear();
  for (int v : succ) nodes_[into].succ.insert(v == from ? into : Find(v));

  src.merged_into = into;
  for (GraphNode& n : nodes_) {
    if (!n.alive()) continue;
    if (n.parent == from) n.parent = (n.id == into) ? -1 : into;
    auto b = n.back.find(from);
    if (b != n.back.end()) {
      RoleSet roles = std::move(b->second);
      n.back.erase(b);
      n.back[into].insert(roles.begin(), roles.end());
    }
    if (n.succ.erase(from)) n.succ.insert(into);
  }
}

bool CompletionGraph::IsDirectlyBlocked(int x, int* blocker) const {
  x = Find(x);
  if (!IsBlockable(x)) return false;
  const GraphNode& xn = nodes_[x];
  if (xn.parent < 0) return false;
  int xp = Find(xn.parent);
  const RoleSet& xe = EdgeLabel(xp, x);
  int y = xp;
  for (size_t steps = 0; steps < nodes_.size() && y >= 0; ++steps) {
    if (!IsBlockable(y)) return false;
    const GraphNode& yn = nodes_[y];
    if (yn.parent < 0) return false;
    int yp = Find(yn.parent);
    if (yn.label == xn.label && nodes_[yp].label == nodes_[xp].label &&
        EdgeLabel(yp, y) == xe) {
      if (blocker) *blocker = y;
      return true;
    }
    y = yp;
  }
  return false;
}

bool CompletionGraph::IsIndirectlyBlocked(int x) const {
  x = Find(x);
  int y = nodes_[x].parent < 0 ? -1 : Find(nodes_[x].parent);
  for (size_t steps = 0; steps < nodes_.size() && y >= 0; ++steps) {
    if (!IsBlockable(y)) return false;
    if (IsDirectlyBlocked(y)) return true;
    y = nodes_[y].parent < 0 ? -1 : Find(nodes_[y].parent);
  }
  return false;
}

bool CompletionGraph::IsBlocked(int x) const {
  return IsDirectlyBlocked(x) || IsIndirectlyBlocked(x);
}

}  // namespace shoi
