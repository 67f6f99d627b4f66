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

#ifndef REVPREF_DATASET_H_
#define REVPREF_DATASET_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace revpref {

// Alternatives are identified by dense indices 0..n-1 into the universe.
using AltId = int;

// An alternative, optionally carrying a three-installment payment bundle
// (amounts paid after 1, 3 and 5 months).
struct Alternative {
  AltId id = 0;
  std::string label;
  std::optional<std::array<int, 3>> payments;
};

// A menu is a set of alternatives. Canonical representation: sorted,
// duplicate-free member list. Universes are small (n <= 31), so a bitmask
// view is provided for the hot loops.
class Menu {
 public:
  Menu() = default;
  explicit Menu(std::vector<AltId> members);

  const std::vector<AltId>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(AltId a) const;
  std::uint32_t mask() const { return mask_; }

  friend bool operator==(const Menu& a, const Menu& b) {
    return a.members_ == b.members_;
  }
  friend std::strong_ordering operator<=>(const Menu& a, const Menu& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<AltId> members_;
  std::uint32_t mask_ = 0;
};

// One observed choice: the menu shown and the alternative picked from it.
struct Observation {
  Menu menu;
  AltId choice = 0;
};

// A validated single-subject dataset: universe plus observed choices, one
// per distinct menu.
struct ChoiceDataset {
  std::vector<Alternative> universe;
  std::vector<Observation> observations;

  int n() const { return static_cast<int>(universe.size()); }
};

enum class ValidationCode {
  kMenuTooSmall,
  kChoiceNotInMenu,
  kDuplicateMenu,
  kUnknownAlternative,
  kBundleSumMismatch,
  kInvalidUniverse,
};

const char* validation_code_name(ValidationCode code);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ValidationCode code() const { return code_; }

 private:
  ValidationCode code_;
};

struct ValidationOptions {
  // Every payment bundle must sum to this total.
  int bundle_total = 2400;
};

// Checks universe integrity, menu sizes, choice membership, menu
// distinctness and bundle sums. Menus are normalized (sorted, deduped) on
// the way in. Throws ValidationError; returns the validated dataset.
ChoiceDataset validate_dataset(ChoiceDataset raw,
                               const ValidationOptions& opts = {});

// Convenience builder for tests and generators: n unlabeled alternatives,
// observations given as (member list, choice) pairs. Validates.
ChoiceDataset make_dataset(
    int n, const std::vector<std::pair<std::vector<AltId>, AltId>>& obs);

}  // namespace revpref

#endif  // REVPREF_DATASET_H_
