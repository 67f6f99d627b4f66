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

#ifndef REVPREF_DIAGNOSTICS_H_
#define REVPREF_DIAGNOSTICS_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "revpref/dataset.hpp"
#include "revpref/relation.hpp"

namespace revpref {

// Directly-revealed relation: x -> y whenever x was chosen from some
// observed menu containing y (x != y).
BinaryRelation direct_relation(const ChoiceDataset& d);

// All unordered pairs of observation indices (i < j) whose menus overlap,
// whose choices differ and both lie in the intersection. Lexicographic.
std::vector<std::pair<int, int>> find_warp_pairs(const ChoiceDataset& d);

bool has_warp_violation(const ChoiceDataset& d);

// A choice cycle: observation indices B_1..B_k with all choices distinct
// and c(B_i) in B_{i+1} (cyclically). Present iff the dataset is not
// consistent with maximizing any strict linear order.
struct SarpWitness {
  std::vector<int> menu_indices;
};

std::optional<SarpWitness> find_sarp_violation(const ChoiceDataset& d);

bool has_sarp_violation(const ChoiceDataset& d);

// Alternatives appearing in the overlap of at least one violating pair of
// menus. Sorted.
std::vector<AltId> warp_involved(const ChoiceDataset& d);

// Alternatives chosen from one menu of a violating pair. Always a subset
// of warp_involved. Sorted.
std::vector<AltId> warp_directly_involved(const ChoiceDataset& d);

// Alternatives lying on some choice cycle of length >= 3 but in no
// violating pair. Sorted.
std::vector<AltId> pure_sarp_only(const ChoiceDataset& d);

// Pivots, read off the observations:
//   type 1: chosen from at least one menu;
//   type 2: never chosen, but removing them from some observed menu flips
//           the choice in another observed menu (the menu minus the pivot).
struct PivotSets {
  std::vector<AltId> type1;
  std::vector<AltId> type2;
};

PivotSets observed_pivots(const ChoiceDataset& d);

// Number of distinct alternatives ever chosen.
int distinct_chosen(const ChoiceDataset& d);

class IrrationalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Transitive closure of the directly-revealed relation, defined only when
// no choice cycle exists. Throws IrrationalError otherwise.
BinaryRelation rational_revealed(const ChoiceDataset& d);

std::optional<BinaryRelation> try_rational_revealed(const ChoiceDataset& d);

// Bundled consistency diagnostics. sarp_cycles lists choice cycles as
// observation-index tuples, capped at cycle_cap entries.
struct ViolationReport {
  std::vector<std::pair<int, int>> warp_pairs;
  std::vector<std::vector<int>> sarp_cycles;
  bool sarp_cycles_truncated = false;
  std::vector<AltId> involved;
  std::vector<AltId> directly_involved;
  std::vector<AltId> pure_sarp;
};

ViolationReport analyze_violations(const ChoiceDataset& d,
                                   std::size_t cycle_cap = 4096);

}  // namespace revpref

#endif  // REVPREF_DIAGNOSTICS_H_
