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

#ifndef SHOI_PARSER_H_
#define SHOI_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shoi/concept.h"
#include "shoi/rolebox.h"
#include "shoi/tbox.h"

namespace shoi {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Statement {
  enum class Kind {
    kImplies,
    kEquivalent,
    kDisjoint,
    kTransitive,
    kSubrole,
    kInstance,
    kRelated,
  };
  Kind kind = Kind::kImplies;
  Concept lhs;
  Concept rhs;
  // Disjointness members, resolved to atoms or nominals.
  std::vector<Concept> members;
  Role role;
  Role super_role;
  std::string a;
  std::string b;
  int line = 0;
  int column = 0;
};

struct OntologyDocument {
  std::vector<Statement> statements;
  // Individuals in order of first appearance in instance/related
  // statements.
  std::vector<std::string> asserted_individuals;
  std::vector<std::string> individuals;
  std::vector<std::string> roles;
};

// Grammar:
//   statement := (implies C C) | (equivalent C C) | (disjoint NAME+)
//              | (transitive ROLE) | (subrole ROLE ROLE)
//              | (instance IND C) | (related IND IND ROLE)
//   C    := NAME | top | bottom | (not C) | (and C C+) | (or C C+)
//         | (some ROLE C) | (all ROLE C) | (oneof IND+)
//   ROLE := NAME | (inv NAME)
// Comments run from ';' to end of line. Throws ParseError.
OntologyDocument ParseOntology(std::string_view text);

// Parses a single concept expression. Names are atoms.
Concept ParseConcept(std::string_view text);

std::string RenderConcept(const Concept& c);
std::string RenderStatement(const Statement& s);
std::string RenderDocument(const OntologyDocument& doc);

struct KnowledgeBase {
  RoleBox rbox;
  Axioms axioms;
  std::vector<Assertion> assertions;
  Tbox tbox;
  std::vector<std::string> asserted_individuals;
};

// Assertions are reduced to GCIs and everything is internalized.
KnowledgeBase BuildKnowledgeBase(const OntologyDocument& doc,
                                 const InternalizeOptions& options = {});

}  // namespace shoi

#endif  // SHOI_PARSER_H_
