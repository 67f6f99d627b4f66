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

#include "revpref/relation.hpp"

#include <bit>
#include <stdexcept>

namespace revpref {

BinaryRelation::BinaryRelation(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > 31) throw std::invalid_argument("relation universe size");
}

void BinaryRelation::add(AltId x, AltId y) { adj_[x] |= (1u << y); }

void BinaryRelation::remove(AltId x, AltId y) { adj_[x] &= ~(1u << y); }

bool BinaryRelation::contains(AltId x, AltId y) const {
  return (adj_[x] >> y) & 1u;
}

int BinaryRelation::pair_count() const {
  int total = 0;
  for (std::uint32_t row : adj_) total += std::popcount(row);
  return total;
}

int BinaryRelation::comparable_pair_count() const {
  int total = 0;
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      if (contains(x, y) || contains(y, x)) ++total;
    }
  }
  return total;
}

std::vector<std::pair<AltId, AltId>> BinaryRelation::pairs() const {
  std::vector<std::pair<AltId, AltId>> out;
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      if (contains(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

bool BinaryRelation::asymmetric() const {
  for (int x = 0; x < n_; ++x) {
    if (contains(x, x)) return false;
    for (int y = x + 1; y < n_; ++y) {
      if (contains(x, y) && contains(y, x)) return false;
    }
  }
  return true;
}

bool BinaryRelation::transitive() const {
  for (int x = 0; x < n_; ++x) {
    std::uint32_t reach = adj_[x];
    for (int y = 0; y < n_; ++y) {
      if ((reach >> y) & 1u) {
        if ((adj_[y] & ~adj_[x]) != 0) return false;
      }
    }
  }
  return true;
}

bool BinaryRelation::total() const {
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      if (!contains(x, y) && !contains(y, x)) return false;
    }
  }
  return true;
}

bool BinaryRelation::is_strict_linear_order() const {
  return asymmetric() && transitive() && total();
}

bool BinaryRelation::acyclic() const {
  // Kahn-style peeling: repeatedly delete vertices with no incoming edge.
  std::uint32_t alive = (n_ >= 31) ? 0x7fffffffu : ((1u << n_) - 1);
  bool changed = true;
  while (alive && changed) {
    changed = false;
    std::uint32_t has_in = 0;
    for (int x = 0; x < n_; ++x) {
      if ((alive >> x) & 1u) has_in |= (adj_[x] & alive);
    }
    std::uint32_t sources = alive & ~has_in;
    if (sources) {
      alive &= ~sources;
      changed = true;
    }
  }
  return alive == 0;
}

BinaryRelation BinaryRelation::transitive_closure() const {
  BinaryRelation out = *this;
  for (int k = 0; k < n_; ++k) {
    for (int x = 0; x < n_; ++x) {
      if ((out.adj_[x] >> k) & 1u) out.adj_[x] |= out.adj_[k];
    }
  }
  return out;
}

void BinaryRelation::intersect_with(const BinaryRelation& other) {
  if (other.n_ != n_) throw std::invalid_argument("universe size mismatch");
  for (int x = 0; x < n_; ++x) adj_[x] &= other.adj_[x];
}

double density(const BinaryRelation& rel, int n) {
  if (n < 2 || rel.size() != n) {
    throw std::invalid_argument("density requires n >= 2 matching relation");
  }
  double total = 0.5 * n * (n - 1);
  return rel.comparable_pair_count() / total;
}

std::vector<AltId> topological_order(const BinaryRelation& rel) {
  const int n = rel.size();
  std::vector<AltId> order;
  order.reserve(n);
  std::uint32_t placed = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int x = 0; x < n && pick < 0; ++x) {
      if ((placed >> x) & 1u) continue;
      bool dominated = false;
      for (int y = 0; y < n; ++y) {
        if (y != x && !((placed >> y) & 1u) && rel.contains(y, x)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) pick = x;
    }
    if (pick < 0) throw std::invalid_argument("relation has a cycle");
    order.push_back(pick);
    placed |= (1u << pick);
  }
  return order;
}

}  // namespace revpref
