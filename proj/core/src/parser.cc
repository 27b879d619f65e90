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

#include "shoi/parser.h"

#include <cctype>
#include <memory>
#include <set>
#include <utility>

namespace shoi {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  int line = 0;
  int column = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> ReadAll() {
    std::vector<SExpr> out;
    SkipSpace();
    while (pos_ < text_.size()) {
      out.push_back(Read());
      SkipSpace();
    }
    return out;
  }

  SExpr ReadOne() {
    SkipSpace();
    if (pos_ >= text_.size()) throw ParseError(line_, col_, "expected expression");
    SExpr e = Read();
    SkipSpace();
    if (pos_ < text_.size()) {
      throw ParseError(line_, col_, "unexpected trailing input");
    }
    return e;
  }

 private:
  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        Advance();
      } else {
        break;
      }
    }
  }

  static bool IdentStart(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
  }
  static bool IdentChar(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
           ch == '-';
  }

  SExpr Read() {
    SExpr e;
    e.line = line_;
    e.column = col_;
    char ch = text_[pos_];
    if (ch == '(') {
      e.is_list = true;
      Advance();
      while (true) {
        SkipSpace();
        if (pos_ >= text_.size()) {
          throw ParseError(e.line, e.column, "unbalanced '(': missing ')'");
        }
        if (text_[pos_] == ')') {
          Advance();
          break;
        }
        e.items.push_back(Read());
      }
      return e;
    }
    if (ch == ')') throw ParseError(line_, col_, "unexpected ')'");
    if (!IdentStart(ch)) {
      throw ParseError(line_, col_,
                       std::string("unexpected character '") + ch + "'");
    }
    while (pos_ < text_.size() && IdentChar(text_[pos_])) {
      e.atom.push_back(text_[pos_]);
      Advance();
    }
    return e;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void Fail(const SExpr& e, const std::string& msg) {
  throw ParseError(e.line, e.column, msg);
}

const std::string& Head(const SExpr& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) {
    Fail(e, "expected a form with a keyword head");
  }
  return e.items[0].atom;
}

const std::set<std::string>& ConceptKeywords() {
  static const std::set<std::string>* k = new std::set<std::string>{
      "top", "bottom", "not", "and", "or", "some", "all", "oneof", "inv"};
  return *k;
}

void CollectIndividuals(const SExpr& e, std::set<std::string>* inds) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list) return;
  const std::string& h = e.items[0].atom;
  if (h == "oneof") {
    for (size_t i = 1; i < e.items.size(); ++i) {
      if (!e.items[i].is_list) inds->insert(e.items[i].atom);
    }
    return;
  }
  if (h == "instance" && e.items.size() >= 2 && !e.items[1].is_list) {
    inds->insert(e.items[1].atom);
  }
  if (h == "related") {
    for (size_t i = 1; i < 3 && i < e.items.size(); ++i) {
      if (!e.items[i].is_list) inds->insert(e.items[i].atom);
    }
  }
  for (const SExpr& k : e.items) CollectIndividuals(k, inds);
}

class Builder {
 public:
  explicit Builder(const std::set<std::string>* individuals)
      : individuals_(individuals) {}

  std::string Name(const SExpr& e, const char* what) {
    if (e.is_list) Fail(e, std::string("expected ") + what);
    if (ConceptKeywords().count(e.atom) && e.atom != "top" &&
        e.atom != "bottom") {
      Fail(e, "keyword '" + e.atom + "' used as " + what);
    }
    return e.atom;
  }

  Role ParseRole(const SExpr& e) {
    if (!e.is_list) {
      std::string n = Name(e, "role name");
      if (n == "top" || n == "bottom") Fail(e, "expected role name");
      roles.insert(n);
      return Role(n);
    }
    if (Head(e) != "inv" || e.items.size() != 2) {
      Fail(e, "expected ROLE or (inv NAME)");
    }
    std::string n = Name(e.items[1], "role name");
    roles.insert(n);
    return Role(n, true);
  }

  Concept ParseConcept(const SExpr& e) {
    if (!e.is_list) {
      if (e.atom == "top") return Concept::Top();
      if (e.atom == "bottom") return Concept::Bottom();
      std::string n = Name(e, "concept name");
      if (individuals_ && individuals_->count(n)) {
        Fail(e, "'" + n + "' is an individual; use (oneof " + n + ")");
      }
      return Concept::Atom(n);
    }
    const std::string& h = Head(e);
    size_t argc = e.items.size() - 1;
    if (h == "not") {
      if (argc != 1) Fail(e, "'not' takes one argument");
      return Concept::Not(ParseConcept(e.items[1]));
    }
    if (h == "and" || h == "or") {
      if (argc < 2) Fail(e, "'" + h + "' needs at least two arguments");
      std::vector<Concept> kids;
      for (size_t i = 1; i < e.items.size(); ++i) {
        kids.push_back(ParseConcept(e.items[i]));
      }
      return h == "and" ? Concept::And(std::move(kids))
                        : Concept::Or(std::move(kids));
    }
    if (h == "some" || h == "all") {
      if (argc != 2) Fail(e, "'" + h + "' takes a role and a concept");
      Role r = ParseRole(e.items[1]);
      Concept c = ParseConcept(e.items[2]);
      return h == "some" ? Concept::Some(r, c) : Concept::All(r, c);
    }
    if (h == "oneof") {
      if (argc < 1) Fail(e, "'oneof' needs at least one individual");
      std::vector<std::string> names;
      for (size_t i = 1; i < e.items.size(); ++i) {
        names.push_back(Name(e.items[i], "individual name"));
      }
      return Concept::OneOf(names);
    }
    Fail(e, "unknown concept constructor '" + h + "'");
  }

  Statement ParseStatement(const SExpr& e) {
    Statement s;
    s.line = e.line;
    s.column = e.column;
    const std::string& h = Head(e);
    size_t argc = e.items.size() - 1;
    auto need = [&](size_t n) {
      if (argc != n) {
        Fail(e, "'" + h + "' takes " + std::to_string(n) + " arguments");
      }
    };
    if (h == "implies" || h == "equivalent") {
      need(2);
      s.kind = h == "implies" ? Statement::Kind::kImplies
                              : Statement::Kind::kEquivalent;
      s.lhs = ParseConcept(e.items[1]);
      s.rhs = ParseConcept(e.items[2]);
    } else if (h == "disjoint") {
      if (argc < 1) Fail(e, "'disjoint' needs at least one name");
      s.kind = Statement::Kind::kDisjoint;
      for (size_t i = 1; i < e.items.size(); ++i) {
        std::string n = Name(e.items[i], "concept or individual name");
        if (individuals_ && individuals_->count(n)) {
          s.members.push_back(Concept::Nominal(n));
        } else {
          s.members.push_back(Concept::Atom(n));
        }
      }
    } else if (h == "transitive") {
      need(1);
      s.kind = Statement::Kind::kTransitive;
      s.role = ParseRole(e.items[1]);
    } else if (h == "subrole") {
      need(2);
      s.kind = Statement::Kind::kSubrole;
      s.role = ParseRole(e.items[1]);
      s.super_role = ParseRole(e.items[2]);
    } else if (h == "instance") {
      need(2);
      s.kind = Statement::Kind::kInstance;
      s.a = Name(e.items[1], "individual name");
      s.lhs = ParseConcept(e.items[2]);
    } else if (h == "related") {
      need(3);
      s.kind = Statement::Kind::kRelated;
      s.a = Name(e.items[1], "individual name");
      s.b = Name(e.items[2], "individual name");
      s.role = ParseRole(e.items[3]);
    } else {
      Fail(e, "unknown statement '" + h + "'");
    }
    return s;
  }

  std::set<std::string> roles;

 private:
  const std::set<std::string>* individuals_;
};

void AppendUnique(std::vector<std::string>* v, std::set<std::string>* seen,
                  const std::string& s) {
  if (seen->insert(s).second) v->push_back(s);
}

}  // namespace

OntologyDocument ParseOntology(std::string_view text) {
  Reader reader(text);
  std::vector<SExpr> forms = reader.ReadAll();
  std::set<std::string> individuals;
  for (const SExpr& f : forms) CollectIndividuals(f, &individuals);
  Builder b(&individuals);
  OntologyDocument doc;
  std::set<std::string> seen_asserted;
  std::set<std::string> seen_all;
  for (const SExpr& f : forms) {
    Statement s = b.ParseStatement(f);
    if (s.kind == Statement::Kind::kInstance) {
      AppendUnique(&doc.asserted_individuals, &seen_asserted, s.a);
    } else if (s.kind == Statement::Kind::kRelated) {
      AppendUnique(&doc.asserted_individuals, &seen_asserted, s.a);
      AppendUnique(&doc.asserted_individuals, &seen_asserted, s.b);
    }
    doc.statements.push_back(std::move(s));
  }
  for (const std::string& a : doc.asserted_individuals) {
    AppendUnique(&doc.individuals, &seen_all, a);
  }
  for (const std::string& a : individuals) {
    AppendUnique(&doc.individuals, &seen_all, a);
  }
  doc.roles.assign(b.roles.begin(), b.roles.end());
  return doc;
}

Concept ParseConcept(std::string_view text) {
  Reader reader(text);
  SExpr e = reader.ReadOne();
  Builder b(nullptr);
  return b.ParseConcept(e);
}

std::string RenderConcept(const Concept& c) { return c.ToString(); }

std::string RenderStatement(const Statement& s) {
  switch (s.kind) {
    case Statement::Kind::kImplies:
      return "(implies " + s.lhs.ToString() + " " + s.rhs.ToString() + ")";
    case Statement::Kind::kEquivalent:
      return "(equivalent " + s.lhs.ToString() + " " + s.rhs.ToString() + ")";
    case Statement::Kind::kDisjoint: {
      std::string out = "(disjoint";
      for (const Concept& m : s.members) out += " " + m.name();
      return out + ")";
    }
    case Statement::Kind::kTransitive:
      return "(transitive " + s.role.ToString() + ")";
    case Statement::Kind::kSubrole:
      return "(subrole " + s.role.ToString() + " " + s.super_role.ToString() +
             ")";
    case Statement::Kind::kInstance:
      return "(instance " + s.a + " " + s.lhs.ToString() + ")";
    case Statement::Kind::kRelated:
      return "(related " + s.a + " " + s.b + " " + s.role.ToString() + ")";
  }
  return "";
}

std::string RenderDocument(const OntologyDocument& doc) {
  std::string out;
  for (const Statement& s : doc.statements) out += RenderStatement(s) + "\n";
  return out;
}

KnowledgeBase BuildKnowledgeBase(const OntologyDocument& doc,
                                 const InternalizeOptions& options) {
  KnowledgeBase kb;
  for (const std::string& r : doc.roles) kb.rbox.AddRole(r);
  for (const Statement& s : doc.statements) {
    switch (s.kind) {
      case Statement::Kind::kImplies:
        kb.axioms.gcis.push_back({s.lhs, s.rhs});
        break;
      case Statement::Kind::kEquivalent:
        kb.axioms.equivalences.push_back({s.lhs, s.rhs});
        break;
      case Statement::Kind::kDisjoint:
        kb.axioms.disjoint.push_back(s.members);
        break;
      case Statement::Kind::kTransitive:
        kb.rbox.AddTransitive(s.role.name);
        break;
      case Statement::Kind::kSubrole:
        kb.rbox.AddSubrole(s.role, s.super_role);
        break;
      case Statement::Kind::kInstance: {
        Assertion a;
        a.kind = Assertion::Kind::kConcept;
        a.a = s.a;
        a.cls = s.lhs;
        kb.assertions.push_back(a);
        break;
      }
      case Statement::Kind::kRelated: {
        Assertion a;
        a.kind = Assertion::Kind::kRole;
        a.a = s.a;
        a.b = s.b;
        a.role = s.role;
        kb.assertions.push_back(a);
        break;
      }
    }
  }
  kb.rbox.Finalize();
  for (const Gci& g : AboxToTbox(kb.assertions)) kb.axioms.gcis.push_back(g);
  kb.tbox = Internalize(kb.axioms, kb.rbox, options);
  for (const std::string& i : doc.individuals) kb.tbox.nominals.insert(i);
  kb.asserted_individuals = doc.asserted_individuals;
  return kb;
}

}  // namespace shoi
