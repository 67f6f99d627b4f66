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

#ifndef REVPREF_SOLVER_H_
#define REVPREF_SOLVER_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "revpref/cnf.hpp"

namespace revpref::cnf {

struct SolveOptions {
  // Decisions plus conflicts before giving up. Generous: bundled-scale
  // instances use a few hundred nodes.
  std::uint64_t node_budget = 50'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t nodes)
      : std::runtime_error("solver budget exceeded after " +
                           std::to_string(nodes) + " nodes"),
        nodes(nodes) {}
  std::uint64_t nodes;
};

enum class SolveStatus { kSat, kUnsat };

struct SolveResult {
  SolveStatus status = SolveStatus::kUnsat;
  // Truth value per variable; meaningful only when status == kSat.
  std::vector<std::uint8_t> assignment;
  std::uint64_t nodes = 0;
};

// Chronological backtracking over the compiled clauses with two-watched
// unit propagation. Branching follows a fixed most-constrained-first order
// (occurrence count, then variable index), true phase first, so runs are
// deterministic. One instance, one solve.
class Solver {
 public:
  explicit Solver(const ConstraintSystem& sys, SolveOptions opts = {});

  // assumptions: encoded literals forced before any decision.
  SolveResult solve(const std::vector<int>& assumptions = {});

 private:
  int value_of(int lit) const;
  void enqueue(int lit);
  bool propagate();
  void undo_to(std::size_t trail_size);
  void bump_nodes();

  int nvars_;
  SolveOptions opts_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> root_units_;
  std::vector<std::vector<int>> watchers_;
  std::vector<std::int8_t> assign_;
  std::vector<int> trail_;
  std::size_t qhead_ = 0;
  std::vector<int> decision_order_;
  std::uint64_t nodes_ = 0;
  bool used_ = false;

  struct Decision {
    int var;
    bool flipped;
    std::size_t trail_size;
  };
  std::vector<Decision> decisions_;
};

SolveResult satisfiable(const ConstraintSystem& sys,
                        const SolveOptions& opts = {});

// True iff every satisfying assignment makes the atom true. Requires a
// satisfiable system; realized as one solve of sys plus the negated atom.
bool entails(const ConstraintSystem& sys, const Atom& atom,
             const SolveOptions& opts = {});

// Exhaustive top-level unit propagation over the system's clause list,
// with no search. Clause indices match sys.clauses().
struct RootPropagation {
  bool conflict = false;
  // Per variable: -1 unassigned, 0 forced false, 1 forced true.
  std::vector<std::int8_t> value;
  // Per clause: already satisfied by the forced literals.
  std::vector<std::uint8_t> satisfied;
};

RootPropagation propagate_units(const ConstraintSystem& sys);

}  // namespace revpref::cnf

#endif  // REVPREF_SOLVER_H_
