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

#ifndef SHOI_ROLEBOX_H_
#define SHOI_ROLEBOX_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shoi/concept.h"

namespace shoi {

// Role names, transitivity flags and the subrole relation. Call Finalize()
// after the last mutation; queries before that see a stale closure.
class RoleBox {
 public:
  void AddRole(const std::string& name);
  // Idempotent.
  void AddTransitive(const std::string& name);
  // r ⊑ s. Also records Inv(r) ⊑ Inv(s).
  void AddSubrole(const Role& r, const Role& s);
  void Finalize();

  bool HasRole(const std::string& name) const {
    return names_.count(name) > 0;
  }
  const std::set<std::string>& names() const { return names_; }
  const std::set<std::string>& transitive() const { return transitive_; }
  const std::vector<std::pair<Role, Role>>& direct() const { return direct_; }

  // r ⊑* s. Throws std::invalid_argument for an unknown role name.
  bool SubsumesStar(const Role& r, const Role& s) const;
  bool IsTransitive(const Role& r) const {
    return transitive_.count(r.name) > 0;
  }
  // All s with r ⊑* s, including r.
  std::vector<Role> SuperRoles(const Role& r) const;
  // Every role and its inverse, sorted.
  std::vector<Role> AllRoles() const;

 private:
  int Index(const Role& r) const;

  std::set<std::string> names_;
  std::set<std::string> transitive_;
  std::vector<std::pair<Role, Role>> direct_;
  std::vector<Role> roles_;
  std::map<Role, int> index_;
  std::vector<std::vector<bool>> star_;
};

bool SubsumesStar(const RoleBox& rbox, const Role& r, const Role& s);

}  // namespace shoi

#endif  // SHOI_ROLEBOX_H_
