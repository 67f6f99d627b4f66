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

#include "revpref/dataset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace revpref {

Menu::Menu(std::vector<AltId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (AltId a : members_) {
    if (a >= 0 && a < 32) mask_ |= (1u << a);
  }
}

bool Menu::contains(AltId a) const {
  if (a >= 0 && a < 32) return (mask_ >> a) & 1u;
  return std::binary_search(members_.begin(), members_.end(), a);
}

const char* validation_code_name(ValidationCode code) {
  switch (code) {
    case ValidationCode::kMenuTooSmall:
      return "MenuTooSmall";
    case ValidationCode::kChoiceNotInMenu:
      return "ChoiceNotInMenu";
    case ValidationCode::kDuplicateMenu:
      return "DuplicateMenu";
    case ValidationCode::kUnknownAlternative:
      return "UnknownAlternative";
    case ValidationCode::kBundleSumMismatch:
      return "BundleSumMismatch";
    case ValidationCode::kInvalidUniverse:
      return "InvalidUniverse";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void fail(ValidationCode code, const std::string& detail) {
  std::ostringstream os;
  os << validation_code_name(code) << ": " << detail;
  throw ValidationError(code, os.str());
}

}  // namespace

ChoiceDataset validate_dataset(ChoiceDataset raw,
                               const ValidationOptions& opts) {
  const int n = raw.n();
  if (n <= 0) fail(ValidationCode::kInvalidUniverse, "empty universe");
  if (n > 31) {
    fail(ValidationCode::kInvalidUniverse,
         "universe too large (max 31 alternatives)");
  }
  for (int i = 0; i < n; ++i) {
    const Alternative& alt = raw.universe[i];
    if (alt.id != i) {
      fail(ValidationCode::kInvalidUniverse,
           "alternative ids must be dense 0..n-1, got id " +
               std::to_string(alt.id) + " at position " + std::to_string(i));
    }
    if (alt.payments) {
      int sum = std::accumulate(alt.payments->begin(), alt.payments->end(), 0);
      if (sum != opts.bundle_total) {
        fail(ValidationCode::kBundleSumMismatch,
             "payments of '" + alt.label + "' sum to " + std::to_string(sum) +
                 ", expected " + std::to_string(opts.bundle_total));
      }
    }
  }

  std::map<Menu, int> seen;
  for (std::size_t i = 0; i < raw.observations.size(); ++i) {
    Observation& obs = raw.observations[i];
    obs.menu = Menu(obs.menu.members());  // normalize
    if (obs.menu.size() < 2) {
      fail(ValidationCode::kMenuTooSmall,
           "observation " + std::to_string(i) + " has menu of size " +
               std::to_string(obs.menu.size()));
    }
    for (AltId a : obs.menu.members()) {
      if (a < 0 || a >= n) {
        fail(ValidationCode::kUnknownAlternative,
             "observation " + std::to_string(i) + " references id " +
                 std::to_string(a));
      }
    }
    if (!obs.menu.contains(obs.choice)) {
      fail(ValidationCode::kChoiceNotInMenu,
           "observation " + std::to_string(i) + " chose id " +
               std::to_string(obs.choice) + " outside its menu");
    }
    auto [it, inserted] = seen.emplace(obs.menu, static_cast<int>(i));
    if (!inserted) {
      fail(ValidationCode::kDuplicateMenu,
           "observations " + std::to_string(it->second) + " and " +
               std::to_string(i) + " share a menu");
    }
  }
  return raw;
}

ChoiceDataset make_dataset(
    int n, const std::vector<std::pair<std::vector<AltId>, AltId>>& obs) {
  ChoiceDataset d;
  d.universe.reserve(n);
  for (int i = 0; i < n; ++i) {
    d.universe.push_back({i, "x" + std::to_string(i + 1), std::nullopt});
  }
  d.observations.reserve(obs.size());
  for (const auto& [members, choice] : obs) {
    d.observations.push_back({Menu(members), choice});
  }
  return validate_dataset(std::move(d));
}

}  // namespace revpref
