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

#ifndef REVPREF_RELATION_H_
#define REVPREF_RELATION_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "revpref/dataset.hpp"

namespace revpref {

// A binary relation over alternatives 0..n-1, stored as adjacency bitmasks.
// Doubles as a digraph; nothing is assumed about asymmetry or transitivity
// unless checked.
class BinaryRelation {
 public:
  BinaryRelation() : n_(0) {}
  explicit BinaryRelation(int n);

  int size() const { return n_; }
  void add(AltId x, AltId y);
  void remove(AltId x, AltId y);
  bool contains(AltId x, AltId y) const;
  std::uint32_t row(AltId x) const { return adj_[x]; }

  int pair_count() const;             // ordered pairs (x, y) in the relation
  int comparable_pair_count() const;  // unordered pairs related either way
  std::vector<std::pair<AltId, AltId>> pairs() const;  // lexicographic

  bool asymmetric() const;
  bool transitive() const;
  bool total() const;  // every distinct pair related at least one way
  bool is_strict_linear_order() const;
  bool acyclic() const;  // as a digraph; self-loops count as cycles

  BinaryRelation transitive_closure() const;
  // Intersects in place with another relation over the same universe.
  void intersect_with(const BinaryRelation& other);

  friend bool operator==(const BinaryRelation& a, const BinaryRelation& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_;
  std::vector<std::uint32_t> adj_;
};

// Fraction of unordered pairs comparable under rel: |comparable| / C(n, 2).
// Requires n >= 2 and rel over a universe of size n.
double density(const BinaryRelation& rel, int n);

// One strict linear order extending the (acyclic) relation, as a ranking
// from best to worst. Deterministic: lowest id first among available tops.
std::vector<AltId> topological_order(const BinaryRelation& rel);

}  // namespace revpref

#endif  // REVPREF_RELATION_H_
