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

#ifndef REVPREF_ORACLE_H_
#define REVPREF_ORACLE_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "revpref/dataset.hpp"
#include "revpref/models.hpp"
#include "revpref/relation.hpp"

namespace revpref::oracle {

// Ground truth by explicit enumeration, for universes of up to four
// alternatives. Everything here is deliberately independent of the clause
// encodings: filters are concrete tables, preferences concrete orders.

class UniverseTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kMaxOracleUniverse = 4;

// A full shortlisting table: f[mask] is the shortlist (nonempty submask)
// for the menu with that member mask, for every nonempty mask.
struct FilterTable {
  int n = 0;
  std::array<std::uint8_t, 16> f{};

  friend bool operator==(const FilterTable&, const FilterTable&) = default;
};

// Streams every table of the model's filter family exactly once, via
// property-pruned construction over the menu lattice (largest menus
// first). Stop early by returning false from visit.
//
// For amended specs this streams the base family: under the observed-menu
// reading of the size amendment, the bound constrains data fit rather than
// the family, and is enforced by the brute checks below.
void enumerate_filters(const ModelSpec& model, int n,
                       const std::function<bool(const FilterTable&)>& visit);

struct BruteWitness {
  FilterTable filter;
  // Ranking, best first.
  std::vector<AltId> order;
};

struct BruteResult {
  bool rationalizable = false;
  std::optional<BruteWitness> witness;
};

// Decides rationalizability by exhausting the filter family against the
// observations; the returned witness reproduces every observed choice.
BruteResult brute_rationalizable(const ModelSpec& model,
                                 const ChoiceDataset& d);

// Intersection of the stage-2 preference over every rationalization.
// Throws models::NotRationalizable when no rationalization exists.
BinaryRelation brute_revealed(const ModelSpec& model, const ChoiceDataset& d);

// Probability that uniformly random choices on the given menus form a
// model-consistent dataset: #consistent choice functions / product |B|.
double exact_pass_probability(const ModelSpec& model, int n,
                              const std::vector<Menu>& menus);

}  // namespace revpref::oracle

#endif  // REVPREF_ORACLE_H_
