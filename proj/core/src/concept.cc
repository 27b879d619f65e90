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

#include "shoi/concept.h"

#include <algorithm>
#include <functional>
#include <utility>

namespace shoi {

std::string Role::ToString() const {
  return inverse ? "(inv " + name + ")" : name;
}

std::string RoleSetToString(const RoleSet& roles) {
  std::string out = "{";
  bool first = true;
  for (const Role& r : roles) {
    if (!first) out += ",";
    first = false;
    out += r.inverse ? r.name + "-" : r.name;
  }
  return out + "}";
}

struct Concept::Node {
  ConceptKind kind;
  std::string name;
  Role role;
  std::vector<Concept> children;
  size_t hash;
  size_t size;
};

namespace {

size_t MixHash(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Concept::Concept() : Concept(Top()) {}

Concept::Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Concept Concept::Make(ConceptKind kind, std::string name, Role role,
                      std::vector<Concept> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  size_t h = std::hash<int>()(static_cast<int>(kind));
  h = MixHash(h, std::hash<std::string>()(name));
  h = MixHash(h, std::hash<std::string>()(role.name));
  h = MixHash(h, role.inverse ? 1 : 0);
  size_t sz = 1;
  for (const Concept& c : children) {
    h = MixHash(h, c.hash());
    sz += c.size();
  }
  node->name = std::move(name);
  node->role = std::move(role);
  node->children = std::move(children);
  node->hash = h;
  node->size = sz;
  return Concept(std::shared_ptr<const Node>(std::move(node)));
}

Concept Concept::Top() {
  static const Concept* top =
      new Concept(Make(ConceptKind::kTop, "", Role(), {}));
  return *top;
}

Concept Concept::Bottom() {
  static const Concept* bottom =
      new Concept(Make(ConceptKind::kBottom, "", Role(), {}));
  return *bottom;
}

Concept Concept::Atom(std::string name) {
  return Make(ConceptKind::kAtom, std::move(name), Role(), {});
}

Concept Concept::Nominal(std::string name) {
  return Make(ConceptKind::kNominal, std::move(name), Role(), {});
}

Concept Concept::Not(Concept c) {
  return Make(ConceptKind::kNot, "", Role(), {std::move(c)});
}

Concept Concept::MakeNary(ConceptKind kind, std::vector<Concept> children) {
  std::vector<Concept> flat;
  flat.reserve(children.size());
  for (Concept& c : children) {
    if (c.kind() == kind) {
      for (const Concept& g : c.children()) flat.push_back(g);
    } else {
      flat.push_back(std::move(c));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) {
    return kind == ConceptKind::kAnd ? Top() : Bottom();
  }
  if (flat.size() == 1) return flat.front();
  return Make(kind, "", Role(), std::move(flat));
}

Concept Concept::And(std::vector<Concept> children) {
  return MakeNary(ConceptKind::kAnd, std::move(children));
}

Concept Concept::Or(std::vector<Concept> children) {
  return MakeNary(ConceptKind::kOr, std::move(children));
}

Concept Concept::Some(Role r, Concept c) {
  return Make(ConceptKind::kSome, "", std::move(r), {std::move(c)});
}

Concept Concept::All(Role r, Concept c) {
  return Make(ConceptKind::kAll, "", std::move(r), {std::move(c)});
}

Concept Concept::OneOf(const std::vector<std::string>& names) {
  std::vector<Concept> noms;
  noms.reserve(names.size());
  for (const std::string& n : names) noms.push_back(Nominal(n));
  return Or(std::move(noms));
}

ConceptKind Concept::kind() const { return node_->kind; }
const std::string& Concept::name() const { return node_->name; }
const Role& Concept::role() const { return node_->role; }
const Concept& Concept::child() const { return node_->children.front(); }
const std::vector<Concept>& Concept::children() const {
  return node_->children;
}
size_t Concept::hash() const { return node_->hash; }
size_t Concept::size() const { return node_->size; }

bool Concept::IsNegatedName() const {
  return kind() == ConceptKind::kNot && child().IsName();
}

bool Concept::IsNominalSet() const {
  if (kind() == ConceptKind::kNominal) return true;
  if (kind() != ConceptKind::kOr) return false;
  for (const Concept& c : children()) {
    if (c.kind() != ConceptKind::kNominal) return false;
  }
  return true;
}

std::vector<std::string> Concept::NominalNames() const {
  std::vector<std::string> out;
  if (kind() == ConceptKind::kNominal) {
    out.push_back(name());
  } else {
    for (const Concept& c : children()) out.push_back(c.name());
  }
  return out;
}

int Compare(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  if (a.role() != b.role()) return a.role() < b.role() ? -1 : 1;
  const auto& ac = a.children();
  const auto& bc = b.children();
  size_t n = std::min(ac.size(), bc.size());
  for (size_t i = 0; i < n; ++i) {
    if (int c = Compare(ac[i], bc[i]); c != 0) return c;
  }
  if (ac.size() != bc.size()) return ac.size() < bc.size() ? -1 : 1;
  return 0;
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return Compare(a, b) == 0;
}

bool operator<(const Concept& a, const Concept& b) { return Compare(a, b) < 0; }

std::string Concept::ToString() const {
  switch (kind()) {
    case ConceptKind::kTop:
      return "top";
    case ConceptKind::kBottom:
      return "bottom";
    case ConceptKind::kAtom:
      return name();
    case ConceptKind::kNominal:
      return "(oneof " + name() + ")";
    case ConceptKind::kNot:
      return "(not " + child().ToString() + ")";
    case ConceptKind::kAnd:
    case ConceptKind::kOr: {
      if (IsNominalSet()) {
        std::string out = "(oneof";
        for (const Concept& c : children()) out += " " + c.name();
        return out + ")";
      }
      std::string out = kind() == ConceptKind::kAnd ? "(and" : "(or";
      for (const Concept& c : children()) out += " " + c.ToString();
      return out + ")";
    }
    case ConceptKind::kSome:
      return "(some " + role().ToString() + " " + child().ToString() + ")";
    case ConceptKind::kAll:
      return "(all " + role().ToString() + " " + child().ToString() + ")";
  }
  return "?";
}

Concept Nnf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::kTop:
    case ConceptKind::kBottom:
    case ConceptKind::kAtom:
    case ConceptKind::kNominal:
      return c;
    case ConceptKind::kNot:
      return Negate(c.child());
    case ConceptKind::kAnd:
    case ConceptKind::kOr: {
      std::vector<Concept> kids;
      kids.reserve(c.children().size());
      for (const Concept& k : c.children()) kids.push_back(Nnf(k));
      return c.kind() == ConceptKind::kAnd ? Concept::And(std::move(kids))
                                           : Concept::Or(std::move(kids));
    }
    case ConceptKind::kSome:
      return Concept::Some(c.role(), Nnf(c.child()));
    case ConceptKind::kAll:
      return Concept::All(c.role(), Nnf(c.child()));
  }
  return c;
}

Concept Negate(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::kTop:
      return Concept::Bottom();
    case ConceptKind::kBottom:
      return Concept::Top();
    case ConceptKind::kAtom:
    case ConceptKind::kNominal:
      return Concept::Not(c);
    case ConceptKind::kNot:
      return Nnf(c.child());
    case ConceptKind::kAnd:
    case ConceptKind::kOr: {
      std::vector<Concept> kids;
      kids.reserve(c.children().size());
      for (const Concept& k : c.children()) kids.push_back(Negate(k));
      return c.kind() == ConceptKind::kAnd ? Concept::Or(std::move(kids))
                                           : Concept::And(std::move(kids));
    }
    case ConceptKind::kSome:
      return Concept::All(c.role(), Negate(c.child()));
    case ConceptKind::kAll:
      return Concept::Some(c.role(), Negate(c.child()));
  }
  return c;
}

bool IsNnf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::kNot:
      return c.child().IsName();
    case ConceptKind::kAnd:
    case ConceptKind::kOr:
      return std::all_of(c.children().begin(), c.children().end(), IsNnf);
    case ConceptKind::kSome:
    case ConceptKind::kAll:
      return IsNnf(c.child());
    default:
      return true;
  }
}

ConceptSet Closure(const Concept& c) {
  ConceptSet out;
  std::vector<Concept> stack{c};
  while (!stack.empty()) {
    Concept cur = stack.back();
    stack.pop_back();
    if (!out.insert(cur).second) continue;
    for (const Concept& k : cur.children()) stack.push_back(k);
  }
  return out;
}

void CollectNames(const Concept& c, std::set<std::string>* atoms,
                  std::set<std::string>* nominals) {
  if (c.kind() == ConceptKind::kAtom) {
    if (atoms) atoms->insert(c.name());
  } else if (c.kind() == ConceptKind::kNominal) {
    if (nominals) nominals->insert(c.name());
  }
  for (const Concept& k : c.children()) CollectNames(k, atoms, nominals);
}

void CollectRoles(const Concept& c, std::set<std::string>* roles) {
  if (c.kind() == ConceptKind::kSome || c.kind() == ConceptKind::kAll) {
    roles->insert(c.role().name);
  }
  for (const Concept& k : c.children()) CollectRoles(k, roles);
}

}  // namespace shoi
