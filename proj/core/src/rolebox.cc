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

#include "shoi/rolebox.h"

#include <stdexcept>

namespace shoi {

void RoleBox::AddRole(const std::string& name) { names_.insert(name); }

void RoleBox::AddTransitive(const std::string& name) {
  names_.insert(name);
  transitive_.insert(name);
}

void RoleBox::AddSubrole(const Role& r, const Role& s) {
  names_.insert(r.name);
  names_.insert(s.name);
  std::pair<Role, Role> p(r, s);
  for (const auto& d : direct_) {
    if (d == p) return;
  }
  direct_.push_back(p);
}

void RoleBox::Finalize() {
  roles_.clear();
  index_.clear();
  for (const std::string& n : names_) {
    roles_.push_back(Role(n, false));
    roles_.push_back(Role(n, true));
  }
  for (size_t i = 0; i < roles_.size(); ++i) {
    index_[roles_[i]] = static_cast<int>(i);
  }
  size_t n = roles_.size();
  star_.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) star_[i][i] = true;
  for (const auto& [r, s] : direct_) {
    star_[index_[r]][index_[s]] = true;
    star_[index_[r.Inv()]][index_[s.Inv()]] = true;
  }
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      if (!star_[i][k]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (star_[k][j]) star_[i][j] = true;
      }
    }
  }
}

int RoleBox::Index(const Role& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown role: " + r.name);
  }
  return it->second;
}

bool RoleBox::SubsumesStar(const Role& r, const Role& s) const {
  return star_[Index(r)][Index(s)];
}

std::vector<Role> RoleBox::SuperRoles(const Role& r) const {
  std::vector<Role> out;
  int i = Index(r);
  for (size_t j = 0; j < roles_.size(); ++j) {
    if (star_[i][j]) out.push_back(roles_[j]);
  }
  return out;
}

std::vector<Role> RoleBox::AllRoles() const { return roles_; }

bool SubsumesStar(const RoleBox& rbox, const Role& r, const Role& s) {
  return rbox.SubsumesStar(r, s);
}

}  // namespace shoi
