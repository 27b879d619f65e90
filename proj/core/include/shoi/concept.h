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

#ifndef SHOI_CONCEPT_H_
#define SHOI_CONCEPT_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace shoi {

// A role name, possibly inverted.
struct Role {
  std::string name;
  bool inverse = false;

  Role() = default;
  explicit Role(std::string n, bool inv = false)
      : name(std::move(n)), inverse(inv) {}

  Role Inv() const { return Role(name, !inverse); }
  std::string ToString() const;

  auto operator<=>(const Role&) const = default;
  bool operator==(const Role&) const = default;
};

using RoleSet = std::set<Role>;

std::string RoleSetToString(const RoleSet& roles);

// Kinds are declared in canonical order; children of And/Or are sorted by
// Compare(), which sorts first by kind.
enum class ConceptKind {
  kTop,
  kBottom,
  kAtom,
  kNominal,
  kNot,
  kAnd,
  kOr,
  kSome,
  kAll,
};

// Immutable, structurally compared concept expression. Copies share the
// underlying node.
class Concept {
 public:
  Concept();  // Top.

  static Concept Top();
  static Concept Bottom();
  static Concept Atom(std::string name);
  static Concept Nominal(std::string name);
  static Concept Not(Concept c);
  // Flattens nested conjunctions, sorts and removes duplicates. An empty
  // list gives Top and a single child is returned unchanged.
  static Concept And(std::vector<Concept> children);
  static Concept Or(std::vector<Concept> children);
  static Concept Some(Role r, Concept c);
  static Concept All(Role r, Concept c);
  // {o1, ..., on} as a disjunction of nominals.
  static Concept OneOf(const std::vector<std::string>& names);

  ConceptKind kind() const;
  // Atom or nominal name.
  const std::string& name() const;
  // Role of Some/All.
  const Role& role() const;
  // Operand of Not/Some/All.
  const Concept& child() const;
  // Operands of And/Or.
  const std::vector<Concept>& children() const;

  bool IsName() const {
    return kind() == ConceptKind::kAtom || kind() == ConceptKind::kNominal;
  }
  bool IsNegatedName() const;
  // True for a disjunction whose operands are all nominals (or a nominal).
  bool IsNominalSet() const;
  // Nominal names of a nominal set, in order.
  std::vector<std::string> NominalNames() const;

  size_t hash() const;
  size_t size() const;

  std::string ToString() const;

  friend bool operator==(const Concept& a, const Concept& b);
  friend bool operator<(const Concept& a, const Concept& b);

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node);
  static Concept Make(ConceptKind kind, std::string name, Role role,
                      std::vector<Concept> children);
  static Concept MakeNary(ConceptKind kind, std::vector<Concept> children);

  std::shared_ptr<const Node> node_;

  friend int Compare(const Concept& a, const Concept& b);
};

// Total structural order: kind, then name, role and children.
int Compare(const Concept& a, const Concept& b);


struct ConceptHash {
  size_t operator()(const Concept& c) const { return c.hash(); }
};

using ConceptSet = std::set<Concept>;

// Negation normal form: Not only wraps atoms and nominals.
Concept Nnf(const Concept& c);
// Nnf(Not(c)).
Concept Negate(const Concept& c);
bool IsNnf(const Concept& c);

// Smallest set containing c that is closed under taking operands of Not,
// And, Or, Some and All.
ConceptSet Closure(const Concept& c);

// Atom and nominal names occurring anywhere in c.
void CollectNames(const Concept& c, std::set<std::string>* atoms,
                  std::set<std::string>* nominals);
void CollectRoles(const Concept& c, std::set<std::string>* roles);

}  // namespace shoi

#endif  // SHOI_CONCEPT_H_
