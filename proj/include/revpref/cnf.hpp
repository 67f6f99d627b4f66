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

#ifndef REVPREF_CNF_H_
#define REVPREF_CNF_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "revpref/dataset.hpp"

namespace revpref::cnf {

// Boolean atoms over a fixed universe:
//   Order(x, y)     "x is strictly preferred to y"
//   Stage1(x, y)    "x eliminates y in the first stage"
//   Consider(B, x)  "x survives shortlisting in observed menu B"
// Order/Stage1 carry a pair of alternative ids; Consider carries an
// observation index plus an alternative id.
enum class AtomKind : std::uint8_t { kOrder, kStage1, kConsider };

struct Atom {
  AtomKind kind = AtomKind::kOrder;
  int a = 0;
  int b = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

Atom order_atom(AltId x, AltId y);    // requires x != y
Atom stage1_atom(AltId x, AltId y);   // requires x != y
Atom consider_atom(int obs_index, AltId x);

std::string atom_name(const Atom& atom);

struct Literal {
  Atom atom;
  bool positive = true;
};

inline Literal pos(Atom a) { return {a, true}; }
inline Literal neg(Atom a) { return {a, false}; }

// Disjunction of literals. Must be nonempty; duplicates are merged and
// tautologies dropped when appended to a system.
using Clause = std::vector<Literal>;

class UnknownAtomFamily : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A clause system over declared atom families. Variables get dense indices
// in declaration order (Order block, then Stage1, then Consider atoms),
// which fixes the solver's tie-breaking and the debug dump.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(int n);

  int n() const { return n_; }

  void declare_order_family();
  void declare_stage1_family();
  void declare_consider_family(int obs_index, const std::vector<AltId>& members);

  bool has_order() const { return order_base_ >= 0; }
  bool has_stage1() const { return stage1_base_ >= 0; }

  int num_vars() const { return static_cast<int>(atoms_.size()); }
  int var_of(const Atom& atom) const;  // throws UnknownAtomFamily
  const Atom& atom_of(int var) const { return atoms_[var]; }

  // Appends a clause after normalization (sort, dedupe; tautologies are
  // dropped). Throws on empty clauses and undeclared atoms.
  void append_clause(const Clause& clause);
  void append_clauses(const std::vector<Clause>& clauses);

  // Marks everything appended so far as structural axioms; later clauses
  // are the data-derived ones.
  void seal_axioms() { axiom_clause_count_ = clauses_.size(); }
  std::size_t axiom_clause_count() const { return axiom_clause_count_; }

  std::size_t clause_count() const { return clauses_.size(); }

  // Compiled form: one vector per clause, literal l encoded as 2*var for
  // positive and 2*var+1 for negative occurrences.
  const std::vector<std::vector<int>>& clauses() const { return clauses_; }

 private:
  int n_;
  int order_base_ = -1;
  int stage1_base_ = -1;
  std::vector<Atom> atoms_;
  std::map<std::pair<int, int>, int> consider_vars_;
  std::vector<std::vector<int>> clauses_;
  std::size_t axiom_clause_count_ = 0;
};

// Pure extension: returns a copy of sys with the clause appended.
ConstraintSystem add_clause(ConstraintSystem sys, const Clause& clause);

// Completeness, asymmetry and transitivity of the preference order, over
// all pairs/triples of a universe of size n.
std::vector<Clause> order_axioms(int n);

// Asymmetry of the first-stage relation; transitivity only when asked.
std::vector<Clause> stage1_axioms(int n, bool transitive);

// DIMACS-like text dump: atom-naming comments, a "p cnf" header, one
// zero-terminated clause per line with 1-based signed variable indices.
std::string to_dimacs(const ConstraintSystem& sys);

inline int encode_lit(int var, bool positive) {
  return 2 * var + (positive ? 0 : 1);
}
inline int lit_var(int lit) { return lit >> 1; }
inline bool lit_positive(int lit) { return (lit & 1) == 0; }
inline int lit_negate(int lit) { return lit ^ 1; }

}  // namespace revpref::cnf

#endif  // REVPREF_CNF_H_
