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

#ifndef REVPREF_MODELS_H_
#define REVPREF_MODELS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "revpref/cnf.hpp"
#include "revpref/dataset.hpp"
#include "revpref/relation.hpp"
#include "revpref/solver.hpp"

namespace revpref::models {

// The two-stage families:
//   Rational  choose the best of the whole menu
//   NC(k)     shortlist anything of size >= min(k, |B|); NC(1) is vacuous
//   LA        limited attention (unnoticed removals leave the shortlist)
//   LC        limited comparability (shortlists shrink consistently)
//   RSM       shortlist = maximizers of an asymmetric first-stage relation
//   TRSM      as RSM with a transitive first-stage relation
// An amended variant additionally requires shortlists of size >= k
// (k = 2 in practice) on the observed menus.
enum class Variant { kRational, kNc, kLa, kLc, kRsm, kTrsm };

struct ModelSpec {
  Variant variant = Variant::kRational;
  int nc_k = 1;
  std::optional<int> amended_min_size;

  static ModelSpec rational() { return {Variant::kRational, 1, {}}; }
  static ModelSpec nc(int k);
  static ModelSpec la() { return {Variant::kLa, 1, {}}; }
  static ModelSpec lc() { return {Variant::kLc, 1, {}}; }
  static ModelSpec rsm() { return {Variant::kRsm, 1, {}}; }
  static ModelSpec trsm() { return {Variant::kTrsm, 1, {}}; }

  // Overlay: this model with a minimum shortlist size on observed menus.
  ModelSpec amended(int k = 2) const;

  bool is_amended() const { return amended_min_size.has_value(); }

  // Canonical CLI name: rational, nc1, nc2, la, lc, rsm, trsm, la2, ...
  std::string name() const;
  static std::optional<ModelSpec> parse(const std::string& name);

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

// The eleven bundled configurations, in reporting order.
std::vector<ModelSpec> standard_models();

class NotRationalizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InapplicableModel : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Builds the clause system whose satisfying assignments are the
// rationalization witnesses of d under the model.
cnf::ConstraintSystem build_system(const ModelSpec& model,
                                   const ChoiceDataset& d);

bool is_rationalizable(const ModelSpec& model, const ChoiceDataset& d,
                       const cnf::SolveOptions& opts = {});

struct RevealedResult {
  bool rationalizable = false;
  // Intersection of the stage-2 preference over all rationalizations; a
  // strict partial order. Empty relation when not rationalizable.
  BinaryRelation revealed;
  // lower_contours[x] = row x of revealed, as sorted ids.
  std::vector<std::vector<AltId>> lower_contours;
  // Alternatives whose lower contour is syntactically restricted by the
  // data clauses (conservative over-approximation; diagnostic only).
  std::vector<AltId> restricted;
};

struct AnalyzeOptions {
  // Skip entailment queries ruled out by theorem_screen (base LA/LC/RSM/
  // TRSM only). Verified sound by tests; disable to cross-check.
  bool use_screen = true;
  cnf::SolveOptions solve;
};

// Non-throwing: rationalizable == false leaves the rest empty.
RevealedResult analyze(const ModelSpec& model, const ChoiceDataset& d,
                       const AnalyzeOptions& opts = {});

// Throwing flavor of analyze (NotRationalizable).
RevealedResult revealed(const ModelSpec& model, const ChoiceDataset& d,
                        const AnalyzeOptions& opts = {});

std::vector<AltId> lower_contour(const ModelSpec& model, const ChoiceDataset& d,
                                 AltId x, const AnalyzeOptions& opts = {});

// Alternatives that may carry a nonempty lower contour, by the involvement
// theorems: choices of violating pairs for LA/LC/RSM, anything in the
// overlap of a violating pair for TRSM. Only base two-stage models.
std::vector<AltId> theorem_screen(const ModelSpec& model,
                                  const ChoiceDataset& d);

}  // namespace revpref::models

#endif  // REVPREF_MODELS_H_
