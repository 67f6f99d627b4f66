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

#include "revpref/models.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "revpref/diagnostics.hpp"

namespace revpref::models {

namespace {

using cnf::Clause;
using cnf::ConstraintSystem;
using cnf::consider_atom;
using cnf::neg;
using cnf::order_atom;
using cnf::pos;
using cnf::stage1_atom;

bool uses_stage1(const ModelSpec& m) {
  return m.variant == Variant::kRsm || m.variant == Variant::kTrsm;
}

const char* base_name(Variant v) {
  switch (v) {
    case Variant::kRational:
      return "rational";
    case Variant::kNc:
      return "nc";
    case Variant::kLa:
      return "la";
    case Variant::kLc:
      return "lc";
    case Variant::kRsm:
      return "rsm";
    case Variant::kTrsm:
      return "trsm";
  }
  return "?";
}

// "At least k of lits are true", clause-only: every subset that drops
// k-1 literals must still contain a true one.
void append_at_least(ConstraintSystem& sys, const std::vector<cnf::Literal>& lits,
                     int k) {
  const int m = static_cast<int>(lits.size());
  if (k <= 0) return;
  if (k > m) throw std::logic_error("cardinality bound exceeds literal count");
  const int pick = m - k + 1;
  std::vector<int> idx(pick);
  Clause clause(pick);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == pick) {
      for (int i = 0; i < pick; ++i) clause[i] = lits[idx[i]];
      sys.append_clause(clause);
      return;
    }
    for (int i = start; i <= m - (pick - depth); ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

void append_rational_clauses(ConstraintSystem& sys, const ChoiceDataset& d) {
  for (const Observation& obs : d.observations) {
    for (AltId y : obs.menu.members()) {
      if (y != obs.choice) sys.append_clause({pos(order_atom(obs.choice, y))});
    }
  }
}

void append_nc_clauses(ConstraintSystem& sys, const ChoiceDataset& d, int k) {
  if (k <= 1) return;
  for (int i = 0; i < static_cast<int>(d.observations.size()); ++i) {
    const Observation& obs = d.observations[i];
    if (k == 2) {
      // Some second shortlisted alternative exists and loses to the choice.
      Clause clause;
      for (AltId y : obs.menu.members()) {
        if (y != obs.choice) clause.push_back(pos(order_atom(obs.choice, y)));
      }
      sys.append_clause(clause);
      continue;
    }
    sys.declare_consider_family(i, obs.menu.members());
    sys.append_clause({pos(consider_atom(i, obs.choice))});
    std::vector<cnf::Literal> members;
    for (AltId y : obs.menu.members()) {
      members.push_back(pos(consider_atom(i, y)));
      if (y != obs.choice) {
        sys.append_clause(
            {neg(consider_atom(i, y)), pos(order_atom(obs.choice, y))});
      }
    }
    append_at_least(sys, members, std::min(k, obs.menu.size()));
  }
}

void append_la_clauses(ConstraintSystem& sys, const ChoiceDataset& d) {
  for (auto [i, j] : find_warp_pairs(d)) {
    const Observation& s = d.observations[i];
    const Observation& t = d.observations[j];
    Clause clause;
    for (AltId z : s.menu.members()) {
      if (!t.menu.contains(z)) clause.push_back(pos(order_atom(s.choice, z)));
    }
    for (AltId z : t.menu.members()) {
      if (!s.menu.contains(z)) clause.push_back(pos(order_atom(t.choice, z)));
    }
    sys.append_clause(clause);
  }
}

void append_lc_clauses(ConstraintSystem& sys, const ChoiceDataset& d) {
  const auto& obs = d.observations;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    for (std::size_t j = 0; j < obs.size(); ++j) {
      if (i == j) continue;
      std::uint32_t small = obs[i].menu.mask();
      std::uint32_t big = obs[j].menu.mask();
      if ((small & ~big) != 0 || small == big) continue;  // need S strictly inside T
      if (!obs[i].menu.contains(obs[j].choice)) continue;
      if (obs[i].choice == obs[j].choice) continue;
      sys.append_clause({pos(order_atom(obs[i].choice, obs[j].choice))});
    }
  }
}

void append_rsm_clauses(ConstraintSystem& sys, const ChoiceDataset& d) {
  for (const Observation& obs : d.observations) {
    for (AltId z : obs.menu.members()) {
      if (z != obs.choice) {
        sys.append_clause({neg(stage1_atom(z, obs.choice))});
      }
    }
    for (AltId y : obs.menu.members()) {
      if (y == obs.choice) continue;
      Clause clause;
      for (AltId z : obs.menu.members()) {
        if (z != y) clause.push_back(pos(stage1_atom(z, y)));
      }
      clause.push_back(pos(order_atom(obs.choice, y)));
      sys.append_clause(clause);
    }
  }
}

void append_amended_clauses(ConstraintSystem& sys, const ChoiceDataset& d,
                            const ModelSpec& model) {
  const int k = *model.amended_min_size;
  const auto& obs = d.observations;

  for (int i = 0; i < static_cast<int>(obs.size()); ++i) {
    sys.declare_consider_family(i, obs[i].menu.members());
  }
  for (int i = 0; i < static_cast<int>(obs.size()); ++i) {
    const Observation& o = obs[i];
    sys.append_clause({pos(consider_atom(i, o.choice))});
    std::vector<cnf::Literal> members;
    for (AltId y : o.menu.members()) {
      members.push_back(pos(consider_atom(i, y)));
      if (y != o.choice) {
        sys.append_clause(
            {neg(consider_atom(i, y)), pos(order_atom(o.choice, y))});
      }
    }
    append_at_least(sys, members, std::min(k, o.menu.size()));
  }

  switch (model.variant) {
    case Variant::kLa:
      // Attention on the observed lattice: if the removed alternative went
      // unnoticed, the shortlist is unchanged.
      for (std::size_t i = 0; i < obs.size(); ++i) {
        for (std::size_t j = 0; j < obs.size(); ++j) {
          std::uint32_t big = obs[i].menu.mask();
          std::uint32_t small = obs[j].menu.mask();
          if ((small & ~big) != 0 || std::popcount(big & ~small) != 1) continue;
          AltId x = std::countr_zero(big & ~small);
          for (AltId z : obs[j].menu.members()) {
            sys.append_clause({pos(consider_atom(i, x)),
                               neg(consider_atom(i, z)),
                               pos(consider_atom(j, z))});
            sys.append_clause({pos(consider_atom(i, x)),
                               pos(consider_atom(i, z)),
                               neg(consider_atom(j, z))});
          }
        }
      }
      break;
    case Variant::kLc:
      // Shortlists shrink consistently down the observed lattice.
      for (std::size_t i = 0; i < obs.size(); ++i) {
        for (std::size_t j = 0; j < obs.size(); ++j) {
          if (i == j) continue;
          std::uint32_t big = obs[i].menu.mask();
          std::uint32_t small = obs[j].menu.mask();
          if ((small & ~big) != 0 || small == big) continue;
          for (AltId y : obs[j].menu.members()) {
            sys.append_clause(
                {neg(consider_atom(i, y)), pos(consider_atom(j, y))});
          }
        }
      }
      break;
    case Variant::kRsm:
    case Variant::kTrsm:
      // Shortlist membership is exactly first-stage undominatedness.
      for (int i = 0; i < static_cast<int>(obs.size()); ++i) {
        const Observation& o = obs[i];
        for (AltId y : o.menu.members()) {
          Clause all_dominators{pos(consider_atom(i, y))};
          for (AltId z : o.menu.members()) {
            if (z == y) continue;
            sys.append_clause(
                {neg(consider_atom(i, y)), neg(stage1_atom(z, y))});
            all_dominators.push_back(pos(stage1_atom(z, y)));
          }
          sys.append_clause(all_dominators);
        }
      }
      break;
    default:
      break;
  }
}

}  // namespace

ModelSpec ModelSpec::nc(int k) {
  if (k < 1) throw std::invalid_argument("NC needs k >= 1");
  return {Variant::kNc, k, {}};
}

ModelSpec ModelSpec::amended(int k) const {
  if (variant == Variant::kRational || variant == Variant::kNc) {
    throw std::invalid_argument("amendment applies to la/lc/rsm/trsm only");
  }
  if (k < 2) throw std::invalid_argument("amended minimum size needs k >= 2");
  ModelSpec out = *this;
  out.amended_min_size = k;
  return out;
}

std::string ModelSpec::name() const {
  std::string out = base_name(variant);
  if (variant == Variant::kNc) out += std::to_string(nc_k);
  if (amended_min_size) out += std::to_string(*amended_min_size);
  return out;
}

std::optional<ModelSpec> ModelSpec::parse(const std::string& name) {
  std::size_t split = 0;
  while (split < name.size() &&
         !std::isdigit(static_cast<unsigned char>(name[split]))) {
    ++split;
  }
  std::string stem = name.substr(0, split);
  std::string digits = name.substr(split);
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  int num = digits.empty() ? -1 : std::stoi(digits);

  if (stem == "rational" && digits.empty()) return rational();
  if (stem == "nc" && num >= 1) return nc(num);
  ModelSpec base;
  if (stem == "la") {
    base = la();
  } else if (stem == "lc") {
    base = lc();
  } else if (stem == "rsm") {
    base = rsm();
  } else if (stem == "trsm") {
    base = trsm();
  } else {
    return std::nullopt;
  }
  if (digits.empty()) return base;
  if (num < 2) return std::nullopt;
  return base.amended(num);
}

std::vector<ModelSpec> standard_models() {
  return {ModelSpec::rational(),
          ModelSpec::nc(1),
          ModelSpec::nc(2),
          ModelSpec::la(),
          ModelSpec::lc(),
          ModelSpec::rsm(),
          ModelSpec::trsm(),
          ModelSpec::la().amended(),
          ModelSpec::lc().amended(),
          ModelSpec::rsm().amended(),
          ModelSpec::trsm().amended()};
}

cnf::ConstraintSystem build_system(const ModelSpec& model,
                                   const ChoiceDataset& d) {
  ConstraintSystem sys(d.n());
  sys.declare_order_family();
  if (uses_stage1(model)) sys.declare_stage1_family();

  sys.append_clauses(cnf::order_axioms(d.n()));
  if (uses_stage1(model)) {
    sys.append_clauses(
        cnf::stage1_axioms(d.n(), model.variant == Variant::kTrsm));
  }
  sys.seal_axioms();

  switch (model.variant) {
    case Variant::kRational:
      append_rational_clauses(sys, d);
      break;
    case Variant::kNc:
      append_nc_clauses(sys, d, model.nc_k);
      break;
    case Variant::kLa:
      append_la_clauses(sys, d);
      break;
    case Variant::kLc:
      append_lc_clauses(sys, d);
      break;
    case Variant::kRsm:
    case Variant::kTrsm:
      append_rsm_clauses(sys, d);
      break;
  }
  if (model.is_amended()) append_amended_clauses(sys, d, model);
  return sys;
}

bool is_rationalizable(const ModelSpec& model, const ChoiceDataset& d,
                       const cnf::SolveOptions& opts) {
  return cnf::satisfiable(build_system(model, d), opts).status ==
         cnf::SolveStatus::kSat;
}

std::vector<AltId> theorem_screen(const ModelSpec& model,
                                  const ChoiceDataset& d) {
  if (model.is_amended() || model.variant == Variant::kRational ||
      model.variant == Variant::kNc) {
    throw InapplicableModel("no involvement theorem for " + model.name());
  }
  if (model.variant == Variant::kTrsm) return warp_involved(d);
  return warp_directly_involved(d);
}

RevealedResult analyze(const ModelSpec& model, const ChoiceDataset& d,
                       const AnalyzeOptions& opts) {
  const int n = d.n();
  RevealedResult out;
  out.revealed = BinaryRelation(n);

  cnf::ConstraintSystem sys = build_system(model, d);
  out.rationalizable =
      cnf::satisfiable(sys, opts.solve).status == cnf::SolveStatus::kSat;
  if (!out.rationalizable) return out;

  std::uint32_t left_mask = (1u << n) - 1;
  bool screened = opts.use_screen && !model.is_amended() &&
                  model.variant != Variant::kRational &&
                  model.variant != Variant::kNc;
  if (screened) {
    left_mask = 0;
    for (AltId x : theorem_screen(model, d)) left_mask |= (1u << x);
  }

  for (int x = 0; x < n; ++x) {
    if (!((left_mask >> x) & 1u)) continue;
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      if (cnf::entails(sys, order_atom(x, y), opts.solve)) {
        out.revealed.add(x, y);
      }
    }
  }

  out.lower_contours.resize(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (out.revealed.contains(x, y)) out.lower_contours[x].push_back(y);
    }
  }

  // Syntactic restriction scan: alternatives whose order row is still
  // constrained once the forced literals are propagated away.
  cnf::RootPropagation root = cnf::propagate_units(sys);
  std::uint32_t restricted = 0;
  for (int v = 0; v < sys.num_vars(); ++v) {
    if (root.value[v] == 1 &&
        sys.atom_of(v).kind == cnf::AtomKind::kOrder) {
      restricted |= (1u << sys.atom_of(v).a);
    }
  }
  const auto& clauses = sys.clauses();
  for (std::size_t ci = sys.axiom_clause_count(); ci < clauses.size(); ++ci) {
    if (root.satisfied[ci]) continue;
    for (int lit : clauses[ci]) {
      const cnf::Atom& atom = sys.atom_of(cnf::lit_var(lit));
      if (cnf::lit_positive(lit) && atom.kind == cnf::AtomKind::kOrder) {
        restricted |= (1u << atom.a);
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    if ((restricted >> x) & 1u) out.restricted.push_back(x);
  }
  return out;
}

RevealedResult revealed(const ModelSpec& model, const ChoiceDataset& d,
                        const AnalyzeOptions& opts) {
  RevealedResult out = analyze(model, d, opts);
  if (!out.rationalizable) {
    throw NotRationalizable("dataset is not rationalizable under " +
                            model.name());
  }
  return out;
}

std::vector<AltId> lower_contour(const ModelSpec& model, const ChoiceDataset& d,
                                 AltId x, const AnalyzeOptions& opts) {
  RevealedResult res = revealed(model, d, opts);
  return res.lower_contours.at(x);
}

}  // namespace revpref::models
