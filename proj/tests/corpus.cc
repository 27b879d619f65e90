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

#include "corpus.h"

#include <algorithm>
#include <set>

#include "shoi/parser.h"

namespace shoi::corpus {

namespace {

int Pick(std::mt19937& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

bool Coin(std::mt19937& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

Role RandomRole(std::mt19937& rng, int roles) {
  return Role("R" + std::to_string(Pick(rng, roles)), Coin(rng, 0.3));
}

}  // namespace

Concept RandomConcept(std::mt19937& rng, int depth) {
  int choice = depth <= 0 ? Pick(rng, 4) : Pick(rng, 10);
  switch (choice) {
    case 0:
    case 1:
      return Concept::Atom("A" + std::to_string(Pick(rng, 4)));
    case 2:
      return Concept::Nominal("o" + std::to_string(Pick(rng, 3)));
    case 3:
      return Pick(rng, 2) ? Concept::Top() : Concept::Bottom();
    case 4:
      return Concept::Not(RandomConcept(rng, depth - 1));
    case 5:
      return Concept::And({RandomConcept(rng, depth - 1),
                           RandomConcept(rng, depth - 1)});
    case 6:
      return Concept::Or({RandomConcept(rng, depth - 1),
                          RandomConcept(rng, depth - 1)});
    case 7:
      return Concept::Some(RandomRole(rng, 2), RandomConcept(rng, depth - 1));
    case 8:
      return Concept::All(RandomRole(rng, 2), RandomConcept(rng, depth - 1));
    default:
      return Concept::OneOf({"o" + std::to_string(Pick(rng, 3)),
                             "o" + std::to_string(Pick(rng, 3))});
  }
}

AlgebraicInstance RandomAlgebraicInstance(std::mt19937& rng) {
  while (true) {
    AlgebraicInstance inst;
    inst.rbox.AddRole("R");
    inst.rbox.AddRole("S");
    if (Coin(rng, 0.5)) inst.rbox.AddSubrole(Role("R"), Role("S"));
    inst.rbox.Finalize();

    std::vector<Concept> names;
    for (int i = 0; i < 4; ++i) names.push_back(Concept::Atom("X" + std::to_string(i)));
    for (int i = 0; i < 3; ++i) names.push_back(Concept::Nominal("p" + std::to_string(i)));
    auto name = [&]() { return names[Pick(rng, static_cast<int>(names.size()))]; };
    auto atom = [&]() { return names[Pick(rng, 4)]; };
    auto role = [&]() {
      switch (Pick(rng, 3)) {
        case 0:
          return Role("R");
        case 1:
          return Role("S");
        default:
          return Role("R", true);
      }
    };
    auto filler = [&](bool universal) {
      int c = Pick(rng, universal ? 5 : 4);
      switch (c) {
        case 0:
        case 1:
          return name();
        case 2:
          return Concept::Not(atom());
        case 3:
          return Concept::And({atom(), atom()});
        default:
          return Concept::OneOf({"p" + std::to_string(Pick(rng, 3)),
                                 "p" + std::to_string(Pick(rng, 3))});
      }
    };
    int num_exists = 1 + Pick(rng, 4);
    int num_forall = Pick(rng, 3);
    for (int i = 0; i < num_exists; ++i) {
      inst.label.insert(Concept::Some(role(), filler(false)));
    }
    for (int i = 0; i < num_forall; ++i) {
      inst.label.insert(Concept::All(role(), filler(true)));
    }
    if (Coin(rng, 0.25)) {
      BackEdge be;
      be.node = 7;
      be.node_name = "v";
      be.roles = {Role("R", true)};
      if (inst.rbox.SubsumesStar(Role("R"), Role("S"))) {
        be.roles.insert(Role("S", true));
      }
      int k = Pick(rng, 3);
      for (int i = 0; i < k; ++i) {
        Concept n = name();
        be.node_label.insert(Coin(rng, 0.5) ? n : Concept::Not(n));
      }
      inst.back.push_back(be);
    }

    Axioms ax;
    if (Coin(rng, 0.6)) {
      std::set<Concept> group;
      int k = 2 + Pick(rng, 2);
      while (static_cast<int>(group.size()) < k) group.insert(name());
      ax.disjoint.push_back({group.begin(), group.end()});
    }
    int inclusions = Pick(rng, 3);
    for (int i = 0; i < inclusions; ++i) {
      Concept lhs = name();
      Concept rhs = Coin(rng, 0.5) ? atom() : Concept::Not(atom());
      if (lhs == rhs || Negate(lhs) == rhs) continue;
      ax.gcis.push_back({lhs, rhs});
    }
    inst.tbox = Internalize(ax, inst.rbox);

    DecompositionSet q = BuildDecomposition(inst.label, inst.back);
    if (q.size() > 8 || q.exists.size() + q.nominals.size() > 8) continue;
    return inst;
  }
}

namespace {

std::string RoleText(const Role& r) {
  return r.inverse ? "(inv " + r.name + ")" : r.name;
}

// Small concepts over the ontology alphabet; depth 2 at most.
Concept OntologyConcept(std::mt19937& rng, int depth, int atoms, int roles,
                        int nominals) {
  int choice = depth <= 0 ? Pick(rng, 3) : Pick(rng, 8);
  auto sub = [&]() { return OntologyConcept(rng, depth - 1, atoms, roles, nominals); };
  switch (choice) {
    case 0:
    case 1:
      return Concept::Atom("A" + std::to_string(Pick(rng, atoms)));
    case 2:
      if (nominals == 0) return Concept::Atom("A0");
      return Concept::Nominal("o" + std::to_string(Pick(rng, nominals)));
    case 3:
      return Concept::Not(sub());
    case 4:
      return Concept::And({sub(), sub()});
    case 5:
      return Concept::Or({sub(), sub()});
    case 6:
      return Concept::Some(RandomRole(rng, roles), sub());
    default:
      return Concept::All(RandomRole(rng, roles), sub());
  }
}

FiniteInterpretation PlantModel(std::mt19937& rng, int k, int atoms, int roles,
                                int nominals) {
  FiniteInterpretation m;
  m.size = k;
  for (int i = 0; i < nominals; ++i) m.nominals["o" + std::to_string(i)] = Pick(rng, k);
  for (int a = 0; a < atoms; ++a) {
    std::set<int>& ext = m.concepts["A" + std::to_string(a)];
    for (int e = 0; e < k; ++e) {
      if (Coin(rng, 0.5)) ext.insert(e);
    }
  }
  for (int r = 0; r < roles; ++r) {
    auto& ext = m.roles["R" + std::to_string(r)];
    for (int e = 0; e < k; ++e) {
      for (int f = 0; f < k; ++f) {
        if (Coin(rng, 0.3)) ext.insert({e, f});
      }
    }
  }
  return m;
}

}  // namespace

SmallOntology RandomSmallOntology(std::mt19937& rng) {
  SmallOntology out;
  const int atoms = 1 + Pick(rng, 4);
  const int roles = 1 + Pick(rng, 2);
  const int nominals = Pick(rng, 4);
  out.small_model_guaranteed = Coin(rng, 0.75);
  out.planted = PlantModel(rng, 1 + Pick(rng, 4), atoms, roles, nominals);

  std::vector<std::string> statements;
  const int wanted = 2 + Pick(rng, 5);
  for (int attempt = 0; attempt < 60 && static_cast<int>(statements.size()) < wanted;
       ++attempt) {
    std::string s;
    switch (Pick(rng, 9)) {
      case 0:
      case 1:
      case 2:
        s = "(implies " +
            RenderConcept(OntologyConcept(rng, 1, atoms, roles, nominals)) + " " +
            RenderConcept(OntologyConcept(rng, 2, atoms, roles, nominals)) + ")";
        break;
      case 3:
        s = "(equivalent A" + std::to_string(Pick(rng, atoms)) + " " +
            RenderConcept(OntologyConcept(rng, 1, atoms, roles, nominals)) + ")";
        break;
      case 4: {
        int a = Pick(rng, atoms);
        int b = Pick(rng, atoms);
        if (a == b) continue;
        s = "(disjoint A" + std::to_string(a) + " A" + std::to_string(b) + ")";
        break;
      }
      case 5:
        if (nominals == 0) continue;
        s = "(instance o" + std::to_string(Pick(rng, nominals)) + " " +
            RenderConcept(OntologyConcept(rng, 1, atoms, roles, nominals)) + ")";
        break;
      case 6:
        if (nominals == 0) continue;
        s = "(related o" + std::to_string(Pick(rng, nominals)) + " o" +
            std::to_string(Pick(rng, nominals)) + " " +
            RoleText(RandomRole(rng, roles)) + ")";
        break;
      case 7:
        if (roles < 2) continue;
        s = "(subrole " + RoleText(RandomRole(rng, roles)) + " " +
            RoleText(RandomRole(rng, roles)) + ")";
        break;
      default:
        s = "(transitive R" + std::to_string(Pick(rng, roles)) + ")";
        break;
    }
    if (out.small_model_guaranteed) {
      KnowledgeBase single = BuildKnowledgeBase(ParseOntology(s));
      if (!IsModel(single, out.planted)) continue;
    }
    statements.push_back(s);
  }
  for (const std::string& s : statements) out.text += s + "\n";
  return out;
}

}  // namespace shoi::corpus
