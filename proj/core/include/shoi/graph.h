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

#ifndef SHOI_GRAPH_H_
#define SHOI_GRAPH_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "shoi/concept.h"
#include "shoi/rolebox.h"

namespace shoi {

struct GraphNode {
  int id = -1;
  std::string name;
  ConceptSet label;
  int cardinality = 1;
  bool initial = false;
  // Node whose fil application created this one; -1 for initial nodes.
  int parent = -1;
  // Forwarding pointer once merged away.
  int merged_into = -1;
  // Neighbour -> L(x, y).
  std::map<int, RoleSet> edges;
  // B(x): neighbour -> role set recorded by the inverse rule.
  std::map<int, RoleSet> back;
  // Neighbours whose edge was produced by this node's own AM solution.
  std::set<int> succ;

  bool alive() const { return merged_into < 0; }
};

// Nodes are never erased; merged nodes keep a forwarding pointer so that
// stale ids stay resolvable.
class CompletionGraph {
 public:
  int AddNode(const std::string& name, const ConceptSet& label,
              int cardinality, bool initial, int parent);

  int Find(int id) const;
  GraphNode& node(int id) { return nodes_[Find(id)]; }
  const GraphNode& node(int id) const { return nodes_[Find(id)]; }
  const std::vector<GraphNode>& nodes() const { return nodes_; }
  std::vector<int> LiveNodes() const;
  int num_live() const;

  const RoleSet& EdgeLabel(int x, int y) const;
  // e-rule: adds roles and all their superroles to L(x,y) and the inverses
  // to L(y,x). Returns true if an edge label grew.
  bool AddEdgeRoles(int x, int y, const RoleSet& roles, const RoleBox& rbox);

  // Holds a nominal, or is an initial node.
  bool IsNominalNode(int x) const;
  bool IsBlockable(int x) const { return !IsNominalNode(x); }

  // Moves label, edges, B entries and successors of from into into.
  void Merge(int from, int into);

  // Pairwise equality blocking along parent links through blockable nodes.
  bool IsDirectlyBlocked(int x, int* blocker = nullptr) const;
  bool IsBlocked(int x) const;
  bool IsIndirectlyBlocked(int x) const;

 private:
  std::vector<GraphNode> nodes_;
};

}  // namespace shoi

#endif  // SHOI_GRAPH_H_
