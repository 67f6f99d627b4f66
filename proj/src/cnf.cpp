// Copyright 2026 The revpref Authors
//
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

#include "revpref/cnf.hpp"

#include <algorithm>
#include <sstream>

namespace revpref::cnf {

namespace {

void require_distinct(AltId x, AltId y) {
  if (x == y) throw std::invalid_argument("relational atom needs x != y");
}

// Dense index of ordered pair (x, y), x != y, within an n-element block.
int pair_index(int n, AltId x, AltId y) {
  return x * (n - 1) + (y < x ? y : y - 1);
}

}  // namespace

Atom order_atom(AltId x, AltId y) {
  require_distinct(x, y);
  return {AtomKind::kOrder, x, y};
}

Atom stage1_atom(AltId x, AltId y) {
  require_distinct(x, y);
  return {AtomKind::kStage1, x, y};
}

Atom consider_atom(int obs_index, AltId x) {
  return {AtomKind::kConsider, obs_index, x};
}

std::string atom_name(const Atom& atom) {
  std::ostringstream os;
  switch (atom.kind) {
    case AtomKind::kOrder:
      os << "Order(" << atom.a << "," << atom.b << ")";
      break;
    case AtomKind::kStage1:
      os << "Stage1(" << atom.a << "," << atom.b << ")";
      break;
    case AtomKind::kConsider:
      os << "Consider(" << atom.a << "," << atom.b << ")";
      break;
  }
  return os.str();
}

ConstraintSystem::ConstraintSystem(int n) : n_(n) {
  if (n < 1 || n > 31) throw std::invalid_argument("universe size");
}

void ConstraintSystem::declare_order_family() {
  if (order_base_ >= 0) return;
  order_base_ = num_vars();
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (x != y) atoms_.push_back({AtomKind::kOrder, x, y});
    }
  }
}

void ConstraintSystem::declare_stage1_family() {
  if (stage1_base_ >= 0) return;
  stage1_base_ = num_vars();
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (x != y) atoms_.push_back({AtomKind::kStage1, x, y});
    }
  }
}

void ConstraintSystem::declare_consider_family(int obs_index,
                                               const std::vector<AltId>& members) {
  for (AltId x : members) {
    auto key = std::make_pair(obs_index, x);
    if (consider_vars_.count(key)) continue;
    consider_vars_[key] = num_vars();
    atoms_.push_back({AtomKind::kConsider, obs_index, x});
  }
}

int ConstraintSystem::var_of(const Atom& atom) const {
  switch (atom.kind) {
    case AtomKind::kOrder:
      if (order_base_ < 0) {
        throw UnknownAtomFamily("order atoms not declared");
      }
      if (atom.a < 0 || atom.a >= n_ || atom.b < 0 || atom.b >= n_ ||
          atom.a == atom.b) {
        throw UnknownAtomFamily("bad order atom " + atom_name(atom));
      }
      return order_base_ + pair_index(n_, atom.a, atom.b);
    case AtomKind::kStage1:
      if (stage1_base_ < 0) {
        throw UnknownAtomFamily("stage-1 atoms not declared");
      }
      if (atom.a < 0 || atom.a >= n_ || atom.b < 0 || atom.b >= n_ ||
          atom.a == atom.b) {
        throw UnknownAtomFamily("bad stage-1 atom " + atom_name(atom));
      }
      return stage1_base_ + pair_index(n_, atom.a, atom.b);
    case AtomKind::kConsider: {
      auto it = consider_vars_.find({atom.a, atom.b});
      if (it == consider_vars_.end()) {
        throw UnknownAtomFamily("consideration atom not declared: " +
                                atom_name(atom));
      }
      return it->second;
    }
  }
  throw UnknownAtomFamily("unknown atom kind");
}

void ConstraintSystem::append_clause(const Clause& clause) {
  if (clause.empty()) throw std::invalid_argument("empty clause");
  std::vector<int> lits;
  lits.reserve(clause.size());
  for (const Literal& lit : clause) {
    lits.push_back(encode_lit(var_of(lit.atom), lit.positive));
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lit_var(lits[i]) == lit_var(lits[i - 1])) return;  // tautology
  }
  clauses_.push_back(std::move(lits));
}

void ConstraintSystem::append_clauses(const std::vector<Clause>& clauses) {
  for (const Clause& c : clauses) append_clause(c);
}

ConstraintSystem add_clause(ConstraintSystem sys, const Clause& clause) {
  sys.append_clause(clause);
  return sys;
}

std::vector<Clause> order_axioms(int n) {
  std::vector<Clause> out;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      out.push_back({pos(order_atom(x, y)), pos(order_atom(y, x))});
      out.push_back({neg(order_atom(x, y)), neg(order_atom(y, x))});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        out.push_back({neg(order_atom(x, y)), neg(order_atom(y, z)),
                       pos(order_atom(x, z))});
      }
    }
  }
  return out;
}

std::vector<Clause> stage1_axioms(int n, bool transitive) {
  std::vector<Clause> out;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      out.push_back({neg(stage1_atom(x, y)), neg(stage1_atom(y, x))});
    }
  }
  if (transitive) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (x == y || y == z || x == z) continue;
          out.push_back({neg(stage1_atom(x, y)), neg(stage1_atom(y, z)),
                         pos(stage1_atom(x, z))});
        }
      }
    }
  }
  return out;
}

std::string to_dimacs(const ConstraintSystem& sys) {
  std::ostringstream os;
  for (int v = 0; v < sys.num_vars(); ++v) {
    os << "c " << (v + 1) << " " << atom_name(sys.atom_of(v)) << "\n";
  }
  os << "p cnf " << sys.num_vars() << " " << sys.clause_count() << "\n";
  for (const auto& clause : sys.clauses()) {
    for (int lit : clause) {
      os << (lit_positive(lit) ? lit_var(lit) + 1 : -(lit_var(lit) + 1))
         << " ";
    }
    os << "0\n";
  }
  return os.str();
}

}  // namespace revpref::cnf
