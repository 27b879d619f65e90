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

#include "shoi/tbox.h"

#include <utility>

namespace shoi {

const Concept* Tbox::Unfolding(const Concept& name) const {
  auto it = unfold.find(name);
  return it == unfold.end() ? nullptr : &it->second;
}

bool Tbox::DeclaredDisjoint(const Concept& a, const Concept& b) const {
  return disjoint_pairs.count({a, b}) > 0;
}

std::vector<Gci> AboxToTbox(const std::vector<Assertion>& assertions) {
  std::vector<Gci> out;
  out.reserve(assertions.size());
  for (const Assertion& as : assertions) {
    if (as.kind == Assertion::Kind::kConcept) {
      out.push_back({Concept::Nominal(as.a), as.cls});
    } else {
      out.push_back({Concept::Nominal(as.a),
                     Concept::Some(as.role, Concept::Nominal(as.b))});
    }
  }
  return out;
}

namespace {

class Internalizer {
 public:
  Internalizer(Tbox* tbox, const InternalizeOptions& options)
      : tbox_(tbox), options_(options) {}

  void AddInclusion(const Concept& lhs, const Concept& rhs) {
    Concept l = Nnf(lhs);
    Concept r = Nnf(rhs);
    // (A ⊔ B) ⊑ C holds iff A ⊑ C and B ⊑ C.
    if (l.kind() == ConceptKind::kOr) {
      for (const Concept& d : l.children()) AddInclusion(d, r);
      return;
    }
    tbox_->inclusions.push_back({l, r});
    if (l.kind() == ConceptKind::kTop) {
      internal_.push_back(r);
    } else if (options_.lazy_unfolding && l.IsName()) {
      unfold_[l].push_back(r);
    } else {
      internal_.push_back(Concept::Or({Negate(l), r}));
    }
  }

  void Finish() {
    for (auto& [name, parts] : unfold_) {
      tbox_->unfold[name] = Concept::And(std::move(parts));
    }
    tbox_->internal = Concept::And(std::move(internal_));
  }

 private:
  Tbox* tbox_;
  InternalizeOptions options_;
  std::map<Concept, std::vector<Concept>> unfold_;
  std::vector<Concept> internal_;
};

}  // namespace

Tbox Internalize(const Axioms& axioms, const RoleBox& rbox,
                 const InternalizeOptions& options) {
  (void)rbox;
  Tbox tbox;
  tbox.gcis = axioms.gcis;
  tbox.equivalences = axioms.equivalences;
  tbox.disjoint = axioms.disjoint;
  Internalizer in(&tbox, options);
  for (const Gci& g : axioms.gcis) {
    in.AddInclusion(g.lhs, g.rhs);
    CollectNames(g.lhs, &tbox.atoms, &tbox.nominals);
    CollectNames(g.rhs, &tbox.atoms, &tbox.nominals);
  }
  for (const Gci& g : axioms.equivalences) {
    in.AddInclusion(g.lhs, g.rhs);
    in.AddInclusion(g.rhs, g.lhs);
    CollectNames(g.lhs, &tbox.atoms, &tbox.nominals);
    CollectNames(g.rhs, &tbox.atoms, &tbox.nominals);
  }
  for (const auto& group : axioms.disjoint) {
    for (size_t i = 0; i < group.size(); ++i) {
      CollectNames(group[i], &tbox.atoms, &tbox.nominals);
      for (size_t j = i + 1; j < group.size(); ++j) {
        if (group[i] == group[j]) continue;
        in.AddInclusion(group[i], Concept::Not(group[j]));
        tbox.disjoint_pairs.insert({group[i], group[j]});
        tbox.disjoint_pairs.insert({group[j], group[i]});
      }
    }
  }
  in.Finish();
  return tbox;
}

}  // namespace shoi
