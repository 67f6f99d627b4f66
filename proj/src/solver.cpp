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

#include "revpref/solver.hpp"

#include <algorithm>
#include <numeric>

namespace revpref::cnf {

Solver::Solver(const ConstraintSystem& sys, SolveOptions opts)
    : nvars_(sys.num_vars()), opts_(opts) {
  watchers_.assign(2 * nvars_, {});
  assign_.assign(nvars_, -1);

  for (const auto& clause : sys.clauses()) {
    if (clause.size() == 1) {
      root_units_.push_back(clause[0]);
      continue;
    }
    int ci = static_cast<int>(clauses_.size());
    clauses_.push_back(clause);
    watchers_[clause[0]].push_back(ci);
    watchers_[clause[1]].push_back(ci);
  }

  // Most-constrained-first: branch on heavily used variables before rare
  // ones; ties broken by atom index to keep runs reproducible.
  std::vector<int> occurrences(nvars_, 0);
  for (const auto& clause : clauses_) {
    for (int lit : clause) ++occurrences[lit_var(lit)];
  }
  decision_order_.resize(nvars_);
  std::iota(decision_order_.begin(), decision_order_.end(), 0);
  std::stable_sort(decision_order_.begin(), decision_order_.end(),
                   [&](int a, int b) { return occurrences[a] > occurrences[b]; });
}

int Solver::value_of(int lit) const {
  std::int8_t v = assign_[lit_var(lit)];
  if (v < 0) return -1;
  return lit_positive(lit) ? v : 1 - v;
}

void Solver::enqueue(int lit) {
  assign_[lit_var(lit)] = lit_positive(lit) ? 1 : 0;
  trail_.push_back(lit);
}

bool Solver::propagate() {
  while (qhead_ < trail_.size()) {
    int falsified = lit_negate(trail_[qhead_++]);
    auto& ws = watchers_[falsified];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      int ci = ws[i];
      auto& cl = clauses_[ci];
      if (cl[0] == falsified) std::swap(cl[0], cl[1]);
      if (value_of(cl[0]) == 1) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < cl.size(); ++k) {
        if (value_of(cl[k]) != 0) {
          std::swap(cl[1], cl[k]);
          watchers_[cl[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (value_of(cl[0]) == 0) {
        // Conflict: keep the remaining watchers intact before bailing.
        for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
        ws.resize(keep);
        return false;
      }
      enqueue(cl[0]);
    }
    ws.resize(keep);
  }
  return true;
}

void Solver::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    assign_[lit_var(trail_.back())] = -1;
    trail_.pop_back();
  }
  qhead_ = trail_size;
}

void Solver::bump_nodes() {
  if (++nodes_ > opts_.node_budget) throw BudgetExceeded(nodes_);
}

SolveResult Solver::solve(const std::vector<int>& assumptions) {
  if (used_) throw std::logic_error("solver instances are single-use");
  used_ = true;

  for (int lit : root_units_) {
    int v = value_of(lit);
    if (v == 0) return {SolveStatus::kUnsat, {}, nodes_};
    if (v < 0) enqueue(lit);
  }
  for (int lit : assumptions) {
    int v = value_of(lit);
    if (v == 0) return {SolveStatus::kUnsat, {}, nodes_};
    if (v < 0) enqueue(lit);
  }

  for (;;) {
    if (!propagate()) {
      bump_nodes();
      bool restarted = false;
      while (!restarted) {
        if (decisions_.empty()) return {SolveStatus::kUnsat, {}, nodes_};
        Decision& d = decisions_.back();
        undo_to(d.trail_size);
        if (!d.flipped) {
          d.flipped = true;
          enqueue(encode_lit(d.var, false));
          restarted = true;
        } else {
          decisions_.pop_back();
        }
      }
      continue;
    }
    int var = -1;
    for (int v : decision_order_) {
      if (assign_[v] < 0) {
        var = v;
        break;
      }
    }
    if (var < 0) {
      SolveResult res{SolveStatus::kSat, std::vector<std::uint8_t>(nvars_),
                      nodes_};
      for (int v = 0; v < nvars_; ++v) res.assignment[v] = assign_[v] == 1;
      return res;
    }
    bump_nodes();
    decisions_.push_back({var, false, trail_.size()});
    enqueue(encode_lit(var, true));
  }
}

SolveResult satisfiable(const ConstraintSystem& sys, const SolveOptions& opts) {
  return Solver(sys, opts).solve();
}

bool entails(const ConstraintSystem& sys, const Atom& atom,
             const SolveOptions& opts) {
  Solver solver(sys, opts);
  int var = sys.var_of(atom);
  SolveResult res = solver.solve({encode_lit(var, false)});
  return res.status == SolveStatus::kUnsat;
}

RootPropagation propagate_units(const ConstraintSystem& sys) {
  const auto& clauses = sys.clauses();
  RootPropagation out;
  out.value.assign(sys.num_vars(), -1);
  out.satisfied.assign(clauses.size(), 0);

  std::vector<std::vector<int>> by_var(sys.num_vars());
  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    for (int lit : clauses[ci]) {
      by_var[lit_var(lit)].push_back(static_cast<int>(ci));
    }
  }

  auto lit_value = [&](int lit) -> int {
    std::int8_t v = out.value[lit_var(lit)];
    if (v < 0) return -1;
    return lit_positive(lit) ? v : 1 - v;
  };

  std::vector<int> pending(clauses.size());
  std::iota(pending.begin(), pending.end(), 0);
  while (!pending.empty() && !out.conflict) {
    int ci = pending.back();
    pending.pop_back();
    int unassigned_lit = -1;
    int unassigned_count = 0;
    bool sat = false;
    for (int lit : clauses[ci]) {
      int v = lit_value(lit);
      if (v == 1) {
        sat = true;
        break;
      }
      if (v < 0) {
        ++unassigned_count;
        unassigned_lit = lit;
      }
    }
    if (sat) continue;
    if (unassigned_count == 0) {
      out.conflict = true;
    } else if (unassigned_count == 1) {
      out.value[lit_var(unassigned_lit)] = lit_positive(unassigned_lit) ? 1 : 0;
      for (int other : by_var[lit_var(unassigned_lit)]) {
        pending.push_back(other);
      }
    }
  }

  for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
    for (int lit : clauses[ci]) {
      if (lit_value(lit) == 1) {
        out.satisfied[ci] = 1;
        break;
      }
    }
  }
  return out;
}

}  // namespace revpref::cnf
