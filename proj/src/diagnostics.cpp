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

#include "revpref/diagnostics.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace revpref {

namespace {

std::vector<AltId> mask_to_sorted(std::uint32_t mask, int n) {
  std::vector<AltId> out;
  for (int x = 0; x < n; ++x) {
    if ((mask >> x) & 1u) out.push_back(x);
  }
  return out;
}

// witness[u][v] = smallest observation index showing u chosen over v, or -1.
std::vector<std::vector<int>> edge_witnesses(const ChoiceDataset& d) {
  const int n = d.n();
  std::vector<std::vector<int>> w(n, std::vector<int>(n, -1));
  for (int i = 0; i < static_cast<int>(d.observations.size()); ++i) {
    const Observation& obs = d.observations[i];
    for (AltId y : obs.menu.members()) {
      if (y != obs.choice && w[obs.choice][y] < 0) w[obs.choice][y] = i;
    }
  }
  return w;
}

// Converts a vertex cycle u_0 -> u_1 -> ... -> u_{k-1} -> u_0 into an
// observation tuple (B_1..B_k) with c(B_j) in B_{j+1}, rotated so the
// smallest observation index leads.
std::vector<int> cycle_to_menus(const std::vector<AltId>& cycle,
                                const std::vector<std::vector<int>>& witness) {
  const std::size_t k = cycle.size();
  std::vector<int> menus(k);
  // Edge (u_i, u_{i+1}) is witnessed by the menu choosing u_i; listing the
  // witnesses in reverse cycle order gives consecutive containment.
  for (std::size_t i = 0; i < k; ++i) {
    int m = witness[cycle[i]][cycle[(i + 1) % k]];
    menus[k - 1 - i] = m;
  }
  auto lead = std::min_element(menus.begin(), menus.end());
  std::rotate(menus.begin(), lead, menus.end());
  return menus;
}

}  // namespace

BinaryRelation direct_relation(const ChoiceDataset& d) {
  BinaryRelation rel(d.n());
  for (const Observation& obs : d.observations) {
    for (AltId y : obs.menu.members()) {
      if (y != obs.choice) rel.add(obs.choice, y);
    }
  }
  return rel;
}

std::vector<std::pair<int, int>> find_warp_pairs(const ChoiceDataset& d) {
  std::vector<std::pair<int, int>> out;
  const auto& obs = d.observations;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    for (std::size_t j = i + 1; j < obs.size(); ++j) {
      if (obs[i].choice == obs[j].choice) continue;
      std::uint32_t overlap = obs[i].menu.mask() & obs[j].menu.mask();
      if (((overlap >> obs[i].choice) & 1u) &&
          ((overlap >> obs[j].choice) & 1u)) {
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

bool has_warp_violation(const ChoiceDataset& d) {
  return !find_warp_pairs(d).empty();
}

std::optional<SarpWitness> find_sarp_violation(const ChoiceDataset& d) {
  const int n = d.n();
  BinaryRelation rel = direct_relation(d);

  // Iterative DFS for the first back edge; vertices tried in id order.
  std::vector<int> color(n, 0);  // 0 white, 1 gray, 2 black
  std::vector<AltId> stack;
  std::vector<int> parent(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    stack.push_back(root);
    parent[root] = -1;
    while (!stack.empty()) {
      AltId u = stack.back();
      if (color[u] == 0) color[u] = 1;
      bool advanced = false;
      for (int v = 0; v < n && !advanced; ++v) {
        if (!rel.contains(u, v)) continue;
        if (color[v] == 1) {
          // Found a cycle v -> ... -> u -> v along the gray path.
          std::vector<AltId> cycle;
          for (AltId w = u; w != v; w = parent[w]) cycle.push_back(w);
          cycle.push_back(v);
          std::reverse(cycle.begin(), cycle.end());
          return SarpWitness{cycle_to_menus(cycle, edge_witnesses(d))};
        }
        if (color[v] == 0) {
          parent[v] = u;
          stack.push_back(v);
          advanced = true;
        }
      }
      if (!advanced) {
        color[u] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

bool has_sarp_violation(const ChoiceDataset& d) {
  return !direct_relation(d).acyclic();
}

std::vector<AltId> warp_involved(const ChoiceDataset& d) {
  std::uint32_t acc = 0;
  for (auto [i, j] : find_warp_pairs(d)) {
    acc |= d.observations[i].menu.mask() & d.observations[j].menu.mask();
  }
  return mask_to_sorted(acc, d.n());
}

std::vector<AltId> warp_directly_involved(const ChoiceDataset& d) {
  std::uint32_t acc = 0;
  for (auto [i, j] : find_warp_pairs(d)) {
    acc |= (1u << d.observations[i].choice);
    acc |= (1u << d.observations[j].choice);
  }
  return mask_to_sorted(acc, d.n());
}

namespace {

// Is v on a simple directed cycle of length >= 3?
bool on_long_cycle(const BinaryRelation& rel, AltId v) {
  const int n = rel.size();
  std::uint32_t visited = (1u << v);
  // DFS over simple paths v -> ... -> u; accept on returning to v after
  // at least three edges. Early exit keeps this fast in practice.
  std::vector<std::pair<AltId, int>> stack;  // (vertex, edges so far)
  auto push_children = [&](auto&& self, AltId u, int len) -> bool {
    for (int x = 0; x < n; ++x) {
      if (!rel.contains(u, x)) continue;
      if (x == v) {
        if (len + 1 >= 3) return true;
        continue;
      }
      if ((visited >> x) & 1u) continue;
      visited |= (1u << x);
      if (self(self, x, len + 1)) return true;
      visited &= ~(1u << x);
    }
    return false;
  };
  return push_children(push_children, v, 0);
}

}  // namespace

std::vector<AltId> pure_sarp_only(const ChoiceDataset& d) {
  BinaryRelation rel = direct_relation(d);
  std::vector<AltId> winv = warp_involved(d);
  std::uint32_t excluded = 0;
  for (AltId x : winv) excluded |= (1u << x);
  std::vector<AltId> out;
  for (int v = 0; v < d.n(); ++v) {
    if ((excluded >> v) & 1u) continue;
    if (on_long_cycle(rel, v)) out.push_back(v);
  }
  return out;
}

PivotSets observed_pivots(const ChoiceDataset& d) {
  const int n = d.n();
  std::uint32_t chosen = 0;
  std::map<std::uint32_t, int> by_mask;
  for (int i = 0; i < static_cast<int>(d.observations.size()); ++i) {
    chosen |= (1u << d.observations[i].choice);
    by_mask[d.observations[i].menu.mask()] = i;
  }

  std::uint32_t type2 = 0;
  for (const Observation& obs : d.observations) {
    for (AltId p : obs.menu.members()) {
      if (p == obs.choice) continue;
      auto it = by_mask.find(obs.menu.mask() & ~(1u << p));
      if (it == by_mask.end()) continue;
      if (d.observations[it->second].choice != obs.choice) type2 |= (1u << p);
    }
  }
  return PivotSets{mask_to_sorted(chosen, n), mask_to_sorted(type2, n)};
}

int distinct_chosen(const ChoiceDataset& d) {
  std::uint32_t chosen = 0;
  for (const Observation& obs : d.observations) {
    chosen |= (1u << obs.choice);
  }
  return std::popcount(chosen);
}

BinaryRelation rational_revealed(const ChoiceDataset& d) {
  BinaryRelation rel = direct_relation(d);
  if (!rel.acyclic()) {
    throw IrrationalError("dataset has a choice cycle");
  }
  return rel.transitive_closure();
}

std::optional<BinaryRelation> try_rational_revealed(const ChoiceDataset& d) {
  BinaryRelation rel = direct_relation(d);
  if (!rel.acyclic()) return std::nullopt;
  return rel.transitive_closure();
}

namespace {

// Enumerates simple cycles rooted at their minimum vertex, in increasing
// root order. Stops once cap cycles are collected.
void enumerate_cycles(const BinaryRelation& rel, std::size_t cap,
                      std::vector<std::vector<AltId>>* cycles,
                      bool* truncated) {
  const int n = rel.size();
  std::vector<AltId> path;
  std::uint32_t visited = 0;
  auto dfs = [&](auto&& self, int root, AltId u) -> bool {
    for (int x = root; x < n; ++x) {
      if (!rel.contains(u, x)) continue;
      if (x == root) {
        if (cycles->size() >= cap) {
          *truncated = true;
          return false;
        }
        cycles->push_back(path);
      } else if (!((visited >> x) & 1u)) {
        visited |= (1u << x);
        path.push_back(x);
        bool keep = self(self, root, x);
        path.pop_back();
        visited &= ~(1u << x);
        if (!keep) return false;
      }
    }
    return true;
  };
  for (int root = 0; root < n; ++root) {
    visited = (1u << root);
    path.assign(1, root);
    if (!dfs(dfs, root, root)) return;
  }
}

}  // namespace

ViolationReport analyze_violations(const ChoiceDataset& d,
                                   std::size_t cycle_cap) {
  ViolationReport report;
  report.warp_pairs = find_warp_pairs(d);
  report.involved = warp_involved(d);
  report.directly_involved = warp_directly_involved(d);
  report.pure_sarp = pure_sarp_only(d);

  BinaryRelation rel = direct_relation(d);
  std::vector<std::vector<AltId>> cycles;
  enumerate_cycles(rel, cycle_cap, &cycles, &report.sarp_cycles_truncated);
  auto witness = edge_witnesses(d);
  report.sarp_cycles.reserve(cycles.size());
  for (const auto& cyc : cycles) {
    report.sarp_cycles.push_back(cycle_to_menus(cyc, witness));
  }
  return report;
}

}  // namespace revpref
