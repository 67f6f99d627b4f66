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

#include "revpref/oracle.hpp"

#include <algorithm>
#include <bit>

#include "revpref/diagnostics.hpp"

namespace revpref::oracle {

namespace {

using models::ModelSpec;
using models::Variant;

// Per-menu checks a table must additionally pass to fit a dataset: the
// observed choice must be shortlisted, amended menus carry a minimum
// shortlist size, and the forced dominances must stay acyclic.
struct DataConstraints {
  std::array<std::int8_t, 16> required;  // member id, or -1
  std::array<std::int8_t, 16> min_size;  // 1 when unconstrained

  DataConstraints() {
    required.fill(-1);
    min_size.fill(1);
  }
};

std::vector<int> menus_largest_first(int n) {
  std::vector<int> masks;
  for (int m = 1; m < (1 << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](int a, int b) {
    return std::popcount(static_cast<unsigned>(a)) >
           std::popcount(static_cast<unsigned>(b));
  });
  return masks;
}

Variant base_family(const ModelSpec& model) { return model.variant; }

// Enumerates the non-relational families (rational / NC / attention /
// competition) menu by menu down the lattice, pruning by the filter
// property and, when data is present, by choice fit and cycle freedom.
class LatticeEnumerator {
 public:
  LatticeEnumerator(const ModelSpec& model, int n, const DataConstraints* data,
                    const ChoiceDataset* d,
                    const std::function<bool(const FilterTable&)>& visit)
      : model_(model),
        n_(n),
        data_(data),
        dom_(n),
        visit_(visit),
        order_(menus_largest_first(n)) {
    table_.n = n;
    choice_of_.fill(-1);
    if (d != nullptr) {
      for (const Observation& obs : d->observations) {
        choice_of_[obs.menu.mask()] = static_cast<std::int8_t>(obs.choice);
      }
    }
  }

  void run() { rec(0); }

 private:
  bool admissible(int mask, int value) const {
    if (data_ == nullptr) return true;
    if (data_->required[mask] >= 0 &&
        !((value >> data_->required[mask]) & 1)) {
      return false;
    }
    if (std::popcount(static_cast<unsigned>(value)) < data_->min_size[mask]) {
      return false;
    }
    return true;
  }

  void try_value(std::size_t level, int mask, int value) {
    if (!admissible(mask, value)) return;
    int choice = choice_of_[mask];
    BinaryRelation saved(0);
    if (choice >= 0) {
      saved = dom_;
      for (int y = 0; y < n_; ++y) {
        if (y != choice && ((value >> y) & 1)) dom_.add(choice, y);
      }
      if (!dom_.acyclic()) {
        dom_ = saved;
        return;
      }
    }
    table_.f[mask] = static_cast<std::uint8_t>(value);
    rec(level + 1);
    if (choice >= 0) dom_ = saved;
  }

  void rec(std::size_t level) {
    if (stopped_) return;
    if (level == order_.size()) {
      if (!visit_(table_)) stopped_ = true;
      return;
    }
    const int mask = order_[level];

    switch (base_family(model_)) {
      case Variant::kRational:
        try_value(level, mask, mask);
        break;
      case Variant::kNc: {
        const int need = std::min(model_.nc_k,
                                  std::popcount(static_cast<unsigned>(mask)));
        for (int s = mask; s; s = (s - 1) & mask) {
          if (std::popcount(static_cast<unsigned>(s)) >= need) {
            try_value(level, mask, s);
          }
          if (stopped_) return;
        }
        break;
      }
      case Variant::kLa: {
        // Unnoticed removals pin this menu to its parent's shortlist.
        int forced = 0;
        bool conflict = false;
        for (int x = 0; x < n_ && !conflict; ++x) {
          if ((mask >> x) & 1) continue;
          int parent = mask | (1 << x);
          if (parent >= (1 << n_)) continue;
          if ((table_.f[parent] >> x) & 1) continue;  // x was noticed
          if (forced == 0) {
            forced = table_.f[parent];
          } else if (forced != table_.f[parent]) {
            conflict = true;
          }
        }
        if (conflict) break;
        if (forced != 0) {
          try_value(level, mask, forced);
          break;
        }
        for (int s = mask; s; s = (s - 1) & mask) {
          try_value(level, mask, s);
          if (stopped_) return;
        }
        break;
      }
      case Variant::kLc: {
        // Everything shortlisted in an assigned superset survives here.
        int lower = 0;
        for (int p = mask + 1; p < (1 << n_); ++p) {
          if ((p & mask) == mask) lower |= (table_.f[p] & mask);
        }
        const int free = mask & ~lower;
        for (int t = free;; t = (t - 1) & free) {
          int s = lower | t;
          if (s != 0) try_value(level, mask, s);
          if (stopped_) return;
          if (t == 0) break;
        }
        break;
      }
      default:
        break;
    }
  }

  const ModelSpec& model_;
  int n_;
  const DataConstraints* data_;
  FilterTable table_;
  BinaryRelation dom_;
  std::array<std::int8_t, 16> choice_of_;
  const std::function<bool(const FilterTable&)>& visit_;
  std::vector<int> order_;
  bool stopped_ = false;
};

// RSM/TRSM: walk over asymmetric (optionally transitive) first-stage
// relations; a relation is skipped if some menu would end up with an empty
// set of undominated elements.
void enumerate_relational(const ModelSpec& model, int n,
                          const DataConstraints* data, const ChoiceDataset* d,
                          const std::function<bool(const FilterTable&)>& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  }
  const bool transitive = model.variant == Variant::kTrsm;

  std::array<std::int8_t, 16> choice_of;
  choice_of.fill(-1);
  if (d != nullptr) {
    for (const Observation& obs : d->observations) {
      choice_of[obs.menu.mask()] = static_cast<std::int8_t>(obs.choice);
    }
  }

  BinaryRelation stage1(n);
  FilterTable table;
  table.n = n;
  bool stopped = false;

  auto leaf = [&]() {
    if (transitive && !stage1.transitive()) return;
    for (int mask = 1; mask < (1 << n); ++mask) {
      int shortlist = 0;
      for (int x = 0; x < n; ++x) {
        if (!((mask >> x) & 1)) continue;
        bool dominated = false;
        for (int z = 0; z < n && !dominated; ++z) {
          if (z != x && ((mask >> z) & 1) && stage1.contains(z, x)) {
            dominated = true;
          }
        }
        if (!dominated) shortlist |= (1 << x);
      }
      if (shortlist == 0) return;  // not a filter: some menu empties out
      table.f[mask] = static_cast<std::uint8_t>(shortlist);
    }
    if (data != nullptr) {
      BinaryRelation dom(n);
      for (int mask = 1; mask < (1 << n); ++mask) {
        int choice = choice_of[mask];
        if (data->required[mask] >= 0 &&
            !((table.f[mask] >> data->required[mask]) & 1)) {
          return;
        }
        if (std::popcount(static_cast<unsigned>(table.f[mask])) <
            data->min_size[mask]) {
          return;
        }
        if (choice >= 0) {
          for (int y = 0; y < n; ++y) {
            if (y != choice && ((table.f[mask] >> y) & 1)) dom.add(choice, y);
          }
        }
      }
      if (!dom.acyclic()) return;
    }
    if (!visit(table)) stopped = true;
  };

  auto rec = [&](auto&& self, std::size_t level) -> void {
    if (stopped) return;
    if (level == pairs.size()) {
      leaf();
      return;
    }
    auto [x, y] = pairs[level];
    self(self, level + 1);  // unrelated
    if (stopped) return;
    stage1.add(x, y);
    self(self, level + 1);
    stage1.remove(x, y);
    if (stopped) return;
    stage1.add(y, x);
    self(self, level + 1);
    stage1.remove(y, x);
  };
  rec(rec, 0);
}

void enumerate_impl(const ModelSpec& model, int n, const DataConstraints* data,
                    const ChoiceDataset* d,
                    const std::function<bool(const FilterTable&)>& visit) {
  if (n < 1 || n > kMaxOracleUniverse) {
    throw UniverseTooLarge("oracle handles at most " +
                           std::to_string(kMaxOracleUniverse) +
                           " alternatives, got " + std::to_string(n));
  }
  switch (base_family(model)) {
    case Variant::kRsm:
    case Variant::kTrsm:
      enumerate_relational(model, n, data, d, visit);
      break;
    default: {
      LatticeEnumerator e(model, n, data, d, visit);
      e.run();
      break;
    }
  }
}

DataConstraints constraints_for(const ModelSpec& model, const ChoiceDataset& d) {
  DataConstraints out;
  for (const Observation& obs : d.observations) {
    out.required[obs.menu.mask()] = static_cast<std::int8_t>(obs.choice);
    if (model.is_amended()) {
      out.min_size[obs.menu.mask()] = static_cast<std::int8_t>(
          std::min(*model.amended_min_size, obs.menu.size()));
    }
  }
  return out;
}

BinaryRelation forced_dominance(const FilterTable& table,
                                const ChoiceDataset& d) {
  BinaryRelation dom(d.n());
  for (const Observation& obs : d.observations) {
    int shortlist = table.f[obs.menu.mask()];
    for (int y = 0; y < d.n(); ++y) {
      if (y != obs.choice && ((shortlist >> y) & 1)) dom.add(obs.choice, y);
    }
  }
  return dom;
}

}  // namespace

void enumerate_filters(const ModelSpec& model, int n,
                       const std::function<bool(const FilterTable&)>& visit) {
  enumerate_impl(model, n, nullptr, nullptr, visit);
}

BruteResult brute_rationalizable(const ModelSpec& model,
                                 const ChoiceDataset& d) {
  DataConstraints data = constraints_for(model, d);
  BruteResult out;
  enumerate_impl(model, d.n(), &data, &d,
                 [&](const FilterTable& table) {
                   BinaryRelation dom = forced_dominance(table, d);
                   out.rationalizable = true;
                   out.witness = BruteWitness{table, topological_order(dom)};
                   return false;
                 });
  return out;
}

BinaryRelation brute_revealed(const ModelSpec& model, const ChoiceDataset& d) {
  const int n = d.n();
  BinaryRelation acc(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) acc.add(x, y);
    }
  }
  bool found = false;
  DataConstraints data = constraints_for(model, d);
  enumerate_impl(model, n, &data, &d, [&](const FilterTable& table) {
    found = true;
    acc.intersect_with(forced_dominance(table, d).transitive_closure());
    return acc.pair_count() > 0;  // empty intersections stay empty
  });
  if (!found) {
    throw models::NotRationalizable("no rationalization under " + model.name());
  }
  return acc;
}

double exact_pass_probability(const ModelSpec& model, int n,
                              const std::vector<Menu>& menus) {
  if (n < 1 || n > kMaxOracleUniverse) {
    throw UniverseTooLarge("pass probability needs an oracle-sized universe");
  }
  std::uint64_t space = 1;
  for (const Menu& menu : menus) {
    space *= static_cast<std::uint64_t>(menu.size());
    if (space > 1'000'000) {
      throw SpaceTooLarge("choice-function space exceeds 10^6");
    }
  }

  ChoiceDataset base;
  for (int i = 0; i < n; ++i) {
    base.universe.push_back({i, "x" + std::to_string(i + 1), std::nullopt});
  }
  for (const Menu& menu : menus) {
    base.observations.push_back({menu, menu.members().front()});
  }
  base = validate_dataset(std::move(base));

  std::uint64_t hits = 0;
  std::vector<int> digit(menus.size(), 0);
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    for (std::size_t i = 0; i < menus.size(); ++i) {
      base.observations[i].choice = menus[i].members()[digit[i]];
    }
    if (brute_rationalizable(model, base).rationalizable) ++hits;
    for (std::size_t i = 0; i < menus.size(); ++i) {
      if (++digit[i] < menus[i].size()) break;
      digit[i] = 0;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(space);
}

}  // namespace revpref::oracle
