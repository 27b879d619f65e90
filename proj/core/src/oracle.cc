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

#include "shoi/oracle.h"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace shoi {

std::string FiniteInterpretation::ToString() const {
  std::ostringstream out;
  out << "domain {0.." << size - 1 << "}\n";
  for (const auto& [o, e] : nominals) out << "  " << o << " = " << e << '\n';
  for (const auto& [a, ext] : concepts) {
    out << "  " << a << " = {";
    bool first = true;
    for (int e : ext) {
      out << (first ? "" : ",") << e;
      first = false;
    }
    out << "}\n";
  }
  for (const auto& [r, ext] : roles) {
    out << "  " << r << " = {";
    bool first = true;
    for (const auto& [e, f] : ext) {
      out << (first ? "" : ",") << "(" << e << "," << f << ")";
      first = false;
    }
    out << "}\n";
  }
  return out.str();
}

namespace {

std::set<std::pair<int, int>> RolePairs(const Role& r,
                                        const FiniteInterpretation& m) {
  std::set<std::pair<int, int>> out;
  auto it = m.roles.find(r.name);
  if (it == m.roles.end()) return out;
  for (const auto& [e, f] : it->second) {
    out.insert(r.inverse ? std::make_pair(f, e) : std::make_pair(e, f));
  }
  return out;
}

std::set<int> All(int n) {
  std::set<int> out;
  for (int i = 0; i < n; ++i) out.insert(i);
  return out;
}

}  // namespace

std::set<int> Extension(const Concept& c, const FiniteInterpretation& m) {
  switch (c.kind()) {
    case ConceptKind::kTop:
      return All(m.size);
    case ConceptKind::kBottom:
      return {};
    case ConceptKind::kAtom: {
      auto it = m.concepts.find(c.name());
      return it == m.concepts.end() ? std::set<int>{} : it->second;
    }
    case ConceptKind::kNominal: {
      auto it = m.nominals.find(c.name());
      return it == m.nominals.end() ? std::set<int>{} : std::set<int>{it->second};
    }
    case ConceptKind::kNot: {
      std::set<int> inner = Extension(c.child(), m);
      std::set<int> out;
      for (int i = 0; i < m.size; ++i) {
        if (!inner.count(i)) out.insert(i);
      }
      return out;
    }
    case ConceptKind::kAnd: {
      std::set<int> out = All(m.size);
      for (const Concept& ch : c.children()) {
        std::set<int> e = Extension(ch, m);
        std::set<int> keep;
        std::set_intersection(out.begin(), out.end(), e.begin(), e.end(),
                              std::inserter(keep, keep.begin()));
        out = std::move(keep);
      }
      return out;
    }
    case ConceptKind::kOr: {
      std::set<int> out;
      for (const Concept& ch : c.children()) {
        std::set<int> e = Extension(ch, m);
        out.insert(e.begin(), e.end());
      }
      return out;
    }
    case ConceptKind::kSome: {
      std::set<int> filler = Extension(c.child(), m);
      std::set<int> out;
      for (const auto& [e, f] : RolePairs(c.role(), m)) {
        if (filler.count(f)) out.insert(e);
      }
      return out;
    }
    case ConceptKind::kAll: {
      std::set<int> filler = Extension(c.child(), m);
      std::set<int> out = All(m.size);
      for (const auto& [e, f] : RolePairs(c.role(), m)) {
        if (!filler.count(f)) out.erase(e);
      }
      return out;
    }
  }
  return {};
}

bool IsModel(const KnowledgeBase& kb, const FiniteInterpretation& m,
             std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (m.size < 1) return fail("empty domain");
  auto subset = [&](const Concept& a, const Concept& b) {
    std::set<int> ea = Extension(a, m);
    std::set<int> eb = Extension(b, m);
    return std::includes(eb.begin(), eb.end(), ea.begin(), ea.end());
  };
  std::set<std::string> nominals;
  auto note = [&](const Concept& c) { CollectNames(c, nullptr, &nominals); };
  for (const Gci& g : kb.axioms.gcis) {
    note(g.lhs);
    note(g.rhs);
    if (!subset(g.lhs, g.rhs)) {
      return fail("violated " + g.lhs.ToString() + " ⊑ " + g.rhs.ToString());
    }
  }
  for (const Gci& g : kb.axioms.equivalences) {
    note(g.lhs);
    note(g.rhs);
    if (!subset(g.lhs, g.rhs) || !subset(g.rhs, g.lhs)) {
      return fail("violated " + g.lhs.ToString() + " ≡ " + g.rhs.ToString());
    }
  }
  for (const std::vector<Concept>& group : kb.axioms.disjoint) {
    for (size_t i = 0; i < group.size(); ++i) {
      note(group[i]);
      for (size_t j = i + 1; j < group.size(); ++j) {
        if (!subset(Concept::And({group[i], group[j]}), Concept::Bottom())) {
          return fail("overlap of " + group[i].ToString() + " and " +
                      group[j].ToString());
        }
      }
    }
  }
  for (const Assertion& a : kb.assertions) {
    nominals.insert(a.a);
    if (a.kind == Assertion::Kind::kConcept) {
      note(a.cls);
    } else {
      nominals.insert(a.b);
    }
  }
  for (const std::string& o : nominals) {
    auto it = m.nominals.find(o);
    if (it == m.nominals.end() || it->second < 0 || it->second >= m.size) {
      return fail("nominal " + o + " not interpreted");
    }
  }
  for (const Assertion& a : kb.assertions) {
    int ea = m.nominals.at(a.a);
    if (a.kind == Assertion::Kind::kConcept) {
      if (!Extension(a.cls, m).count(ea)) {
        return fail(a.a + " not in " + a.cls.ToString());
      }
    } else if (!RolePairs(a.role, m).count({ea, m.nominals.at(a.b)})) {
      return fail("(" + a.a + "," + a.b + ") not in " + a.role.ToString());
    }
  }
  for (const auto& [r, s] : kb.rbox.direct()) {
    std::set<std::pair<int, int>> er = RolePairs(r, m);
    std::set<std::pair<int, int>> es = RolePairs(s, m);
    if (!std::includes(es.begin(), es.end(), er.begin(), er.end())) {
      return fail("violated " + r.ToString() + " ⊑ " + s.ToString());
    }
  }
  for (const std::string& t : kb.rbox.transitive()) {
    std::set<std::pair<int, int>> et = RolePairs(Role(t), m);
    for (const auto& [a, b] : et) {
      for (const auto& [c, d] : et) {
        if (b == c && !et.count({a, d})) {
          return fail(t + " is not transitive");
        }
      }
    }
  }
  return true;
}

namespace {

// DPLL with two watched literals and chronological backtracking. Literal
// codes are 2·var + sign, sign 1 meaning negated.
class Dpll {
 public:
  int NewVar() {
    val_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    return num_vars_++;
  }

  static int Pos(int v) { return 2 * v; }
  static int Neg(int v) { return 2 * v + 1; }

  void AddClause(std::vector<int> lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (size_t i = 0; i + 1 < lits.size(); ++i) {
      if ((lits[i] ^ 1) == lits[i + 1]) return;
    }
    if (lits.empty()) {
      empty_clause_ = true;
      return;
    }
    if (lits.size() == 1) {
      units_.push_back(lits[0]);
      return;
    }
    int id = static_cast<int>(clauses_.size());
    watches_[lits[0]].push_back(id);
    watches_[lits[1]].push_back(id);
    clauses_.push_back(std::move(lits));
  }

  bool Solve(int64_t* decisions_left) {
    if (empty_clause_) return false;
    for (int l : units_) {
      if (False(l)) return false;
      if (!True(l)) Assign(l);
    }
    if (!Propagate()) return false;
    while (true) {
      int next = 0;
      while (next < num_vars_ && val_[next] >= 0) ++next;
      if (next == num_vars_) return true;
      if (decisions_left && (*decisions_left)-- <= 0) {
        throw BudgetExceeded("oracle decision limit");
      }
      decisions_.push_back({trail_.size(), Neg(next), false});
      Assign(Neg(next));
      while (!Propagate()) {
        while (!decisions_.empty() && decisions_.back().flipped) {
          Undo(decisions_.back().trail_pos);
          decisions_.pop_back();
        }
        if (decisions_.empty()) return false;
        Decision& d = decisions_.back();
        Undo(d.trail_pos);
        d.flipped = true;
        d.lit ^= 1;
        Assign(d.lit);
      }
    }
  }

  bool Value(int v) const { return val_[v] == 1; }

 private:
  struct Decision {
    size_t trail_pos;
    int lit;
    bool flipped;
  };

  bool True(int l) const { return val_[l >> 1] == ((l & 1) ? 0 : 1); }
  bool False(int l) const { return val_[l >> 1] == ((l & 1) ? 1 : 0); }

  void Assign(int l) {
    val_[l >> 1] = (l & 1) ? 0 : 1;
    trail_.push_back(l);
  }

  void Undo(size_t pos) {
    for (size_t i = pos; i < trail_.size(); ++i) val_[trail_[i] >> 1] = -1;
    trail_.resize(pos);
    qhead_ = std::min(qhead_, pos);
  }

  bool Propagate() {
    while (qhead_ < trail_.size()) {
      int falsified = trail_[qhead_++] ^ 1;
      std::vector<int>& ws = watches_[falsified];
      size_t keep = 0;
      bool conflict = false;
      for (size_t i = 0; i < ws.size(); ++i) {
        int id = ws[i];
        if (conflict) {
          ws[keep++] = id;
          continue;
        }
        std::vector<int>& c = clauses_[id];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (True(c[0])) {
          ws[keep++] = id;
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < c.size(); ++k) {
          if (!False(c[k])) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back(id);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = id;
        if (False(c[0])) {
          conflict = true;
        } else {
          Assign(c[0]);
        }
      }
      ws.resize(keep);
      if (conflict) {
        qhead_ = trail_.size();
        return false;
      }
    }
    return true;
  }

  int num_vars_ = 0;
  std::vector<int8_t> val_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> units_;
  std::vector<int> trail_;
  std::vector<Decision> decisions_;
  size_t qhead_ = 0;
  bool empty_clause_ = false;
};

class Encoder {
 public:
  Encoder(int k, const std::map<std::string, int>& placement,
          const std::vector<std::string>& atoms,
          const std::vector<std::string>& roles)
      : k_(k), placement_(placement) {
    top_ = sat_.NewVar();
    sat_.AddClause({Dpll::Pos(top_)});
    for (const std::string& a : atoms) {
      for (int e = 0; e < k; ++e) atom_[{a, e}] = sat_.NewVar();
    }
    for (const std::string& r : roles) {
      for (int e = 0; e < k; ++e) {
        for (int f = 0; f < k; ++f) role_[{r, e, f}] = sat_.NewVar();
      }
    }
  }

  Dpll& sat() { return sat_; }

  int RoleLit(const Role& r, int e, int f) {
    if (r.inverse) std::swap(e, f);
    return Dpll::Pos(role_.at({r.name, e, f}));
  }

  // Literal that implies c holds at e. c must be in NNF.
  int Lit(const Concept& c, int e) {
    auto key = std::make_pair(c, e);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int lit = Build(c, e);
    memo_.emplace(key, lit);
    return lit;
  }

  void Require(const Concept& c, int e) { sat_.AddClause({Lit(c, e)}); }

  FiniteInterpretation Model(const std::vector<std::string>& atoms,
                             const std::vector<std::string>& roles) const {
    FiniteInterpretation m;
    m.size = k_;
    m.nominals = placement_;
    for (const std::string& a : atoms) {
      std::set<int>& ext = m.concepts[a];
      for (int e = 0; e < k_; ++e) {
        if (sat_.Value(atom_.at({a, e}))) ext.insert(e);
      }
    }
    for (const std::string& r : roles) {
      auto& ext = m.roles[r];
      for (int e = 0; e < k_; ++e) {
        for (int f = 0; f < k_; ++f) {
          if (sat_.Value(role_.at({r, e, f}))) ext.insert({e, f});
        }
      }
    }
    return m;
  }

 private:
  int True() const { return Dpll::Pos(top_); }
  int False() const { return Dpll::Neg(top_); }

  int Build(const Concept& c, int e) {
    switch (c.kind()) {
      case ConceptKind::kTop:
        return True();
      case ConceptKind::kBottom:
        return False();
      case ConceptKind::kAtom:
        return Dpll::Pos(atom_.at({c.name(), e}));
      case ConceptKind::kNominal: {
        auto it = placement_.find(c.name());
        return it != placement_.end() && it->second == e ? True() : False();
      }
      case ConceptKind::kNot:
        return Lit(c.child(), e) ^ 1;
      default:
        break;
    }
    int a = Dpll::Pos(sat_.NewVar());
    switch (c.kind()) {
      case ConceptKind::kAnd:
        for (const Concept& ch : c.children()) {
          sat_.AddClause({a ^ 1, Lit(ch, e)});
        }
        break;
      case ConceptKind::kOr: {
        std::vector<int> cl = {a ^ 1};
        for (const Concept& ch : c.children()) cl.push_back(Lit(ch, e));
        sat_.AddClause(cl);
        break;
      }
      case ConceptKind::kSome: {
        std::vector<int> cl = {a ^ 1};
        for (int f = 0; f < k_; ++f) {
          int b = Dpll::Pos(sat_.NewVar());
          sat_.AddClause({b ^ 1, RoleLit(c.role(), e, f)});
          sat_.AddClause({b ^ 1, Lit(c.child(), f)});
          cl.push_back(b);
        }
        sat_.AddClause(cl);
        break;
      }
      case ConceptKind::kAll:
        for (int f = 0; f < k_; ++f) {
          sat_.AddClause({a ^ 1, RoleLit(c.role(), e, f) ^ 1, Lit(c.child(), f)});
        }
        break;
      default:
        break;
    }
    return a;
  }

  int k_;
  std::map<std::string, int> placement_;
  Dpll sat_;
  int top_ = 0;
  std::map<std::pair<std::string, int>, int> atom_;
  std::map<std::tuple<std::string, int, int>, int> role_;
  std::map<std::pair<Concept, int>, int> memo_;
};

struct Signature {
  std::vector<Concept> axioms;  // each must hold everywhere, in NNF
  std::vector<std::vector<Concept>> disjoint;
  std::vector<std::string> atoms;
  std::vector<std::string> roles;
  std::vector<std::string> nominals;
};

Signature Collect(const KnowledgeBase& kb) {
  Signature s;
  std::set<std::string> atoms;
  std::set<std::string> nominals;
  std::set<std::string> roles(kb.rbox.names().begin(), kb.rbox.names().end());
  auto add = [&](const Concept& lhs, const Concept& rhs) {
    s.axioms.push_back(Nnf(Concept::Or({Concept::Not(lhs), rhs})));
  };
  for (const Gci& g : kb.axioms.gcis) add(g.lhs, g.rhs);
  for (const Gci& g : kb.axioms.equivalences) {
    add(g.lhs, g.rhs);
    add(g.rhs, g.lhs);
  }
  for (const Gci& g : AboxToTbox(kb.assertions)) add(g.lhs, g.rhs);
  for (const Concept& c : s.axioms) {
    CollectNames(c, &atoms, &nominals);
    CollectRoles(c, &roles);
  }
  for (const std::vector<Concept>& group : kb.axioms.disjoint) {
    s.disjoint.push_back(group);
    for (const Concept& c : group) CollectNames(c, &atoms, &nominals);
  }
  s.atoms.assign(atoms.begin(), atoms.end());
  s.roles.assign(roles.begin(), roles.end());
  s.nominals.assign(nominals.begin(), nominals.end());
  return s;
}

// Calls fn with every restricted-growth assignment of n nominals to at
// most k elements until fn returns true.
template <typename Fn>
bool ForEachPlacement(int n, int k, std::vector<int>& cur, int used, Fn&& fn) {
  if (static_cast<int>(cur.size()) == n) return fn(cur);
  for (int v = 0; v <= std::min(used, k - 1); ++v) {
    cur.push_back(v);
    bool done = ForEachPlacement(n, k, cur, std::max(used, v + 1), fn);
    cur.pop_back();
    if (done) return true;
  }
  return false;
}

}  // namespace

OracleResult BruteForceConsistency(const KnowledgeBase& kb, int max_domain,
                                   const OracleOptions& options) {
  Signature sig = Collect(kb);
  OracleResult result;
  int64_t budget = options.max_decisions;
  int64_t* left = options.max_decisions > 0 ? &budget : nullptr;
  for (int k = 1; k <= max_domain; ++k) {
    result.k = k;
    std::vector<int> cur;
    bool found = ForEachPlacement(
        static_cast<int>(sig.nominals.size()), k, cur, 0,
        [&](const std::vector<int>& place) {
          std::map<std::string, int> placement;
          for (size_t i = 0; i < place.size(); ++i) {
            placement[sig.nominals[i]] = place[i];
          }
          Encoder enc(k, placement, sig.atoms, sig.roles);
          for (int e = 0; e < k; ++e) {
            for (const Concept& c : sig.axioms) enc.Require(c, e);
            for (const std::vector<Concept>& group : sig.disjoint) {
              for (size_t i = 0; i < group.size(); ++i) {
                for (size_t j = i + 1; j < group.size(); ++j) {
                  enc.sat().AddClause(
                      {enc.Lit(group[i], e) ^ 1, enc.Lit(group[j], e) ^ 1});
                }
              }
            }
          }
          for (const auto& [r, s] : kb.rbox.direct()) {
            for (int e = 0; e < k; ++e) {
              for (int f = 0; f < k; ++f) {
                enc.sat().AddClause(
                    {enc.RoleLit(r, e, f) ^ 1, enc.RoleLit(s, e, f)});
              }
            }
          }
          for (const std::string& t : kb.rbox.transitive()) {
            Role r(t);
            for (int e = 0; e < k; ++e) {
              for (int f = 0; f < k; ++f) {
                for (int g = 0; g < k; ++g) {
                  enc.sat().AddClause({enc.RoleLit(r, e, f) ^ 1,
                                       enc.RoleLit(r, f, g) ^ 1,
                                       enc.RoleLit(r, e, g)});
                }
              }
            }
          }
          if (!enc.sat().Solve(left)) return false;
          result.model = enc.Model(sig.atoms, sig.roles);
          return true;
        });
    if (found) {
      result.status = OracleStatus::kConsistent;
      return result;
    }
  }
  return result;
}

FullMasterResult FullMasterSolve(const DecompositionSet& q,
                                 const PricingProblem& pp, int max_rows) {
  std::vector<int> coverage = pp.r_exists;
  coverage.insert(coverage.end(), pp.r_nominal.begin(), pp.r_nominal.end());
  const int m = static_cast<int>(coverage.size());
  if (m > max_rows) throw std::length_error("too many decomposition rows");
  const int num_exists = static_cast<int>(q.exists.size());

  struct Candidate {
    std::vector<int> rows;
    Rational cost;
  };
  std::vector<Candidate> columns;
  for (uint32_t mask = 1; mask < (1u << m); ++mask) {
    LinearProgram lp = pp.lp;
    for (int v = 0; v < lp.num_vars(); ++v) lp.objective[v] = 0;
    for (int v : pp.b) lp.objective[v] = 1;
    Candidate cand;
    for (int i = 0; i < m; ++i) {
      bool on = (mask >> i) & 1;
      lp.AddRow({{coverage[i], Rational(1)}}, Relation::kEq, on ? 1 : 0);
      if (on) cand.rows.push_back(i);
    }
    LpOutcome out = SolveBinary(lp);
    if (out.status != LpStatus::kOptimal) continue;
    cand.cost = out.objective;
    columns.push_back(std::move(cand));
  }

  FullMasterResult result;
  result.valid_columns = static_cast<int>(columns.size());
  LinearProgram master;
  for (size_t p = 0; p < columns.size(); ++p) {
    master.AddVariable("x" + std::to_string(p), columns[p].cost, true);
  }
  for (int i = 0; i < m; ++i) {
    std::vector<std::pair<int, Rational>> row;
    for (size_t p = 0; p < columns.size(); ++p) {
      const auto& rows = columns[p].rows;
      if (std::binary_search(rows.begin(), rows.end(), i)) {
        row.push_back({static_cast<int>(p), Rational(1)});
      }
    }
    if (row.empty()) return result;
    master.AddRow(std::move(row), i < num_exists ? Relation::kGe : Relation::kEq,
                  1);
  }
  LpOutcome out = SolveIlp(master);
  if (out.status != LpStatus::kOptimal) return result;
  result.feasible = true;
  result.objective = out.objective;
  for (size_t p = 0; p < columns.size(); ++p) {
    if (out.primal[p] > 0) {
      result.assignment.push_back(
          {columns[p].rows, static_cast<int>(out.primal[p].get_num().get_si())});
    }
  }
  return result;
}

}  // namespace shoi
