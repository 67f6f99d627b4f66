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

#include "revpref/pool.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace revpref::harness {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ChoiceDataset subject_dataset(const SubjectPool& pool,
                              const std::vector<AltId>& choices,
                              const ValidationOptions& opts) {
  ChoiceDataset d;
  d.universe = pool.universe;
  d.observations.reserve(pool.menus.size());
  for (std::size_t i = 0; i < pool.menus.size(); ++i) {
    d.observations.push_back({pool.menus[i], choices[i]});
  }
  return validate_dataset(std::move(d), opts);
}

SubjectPool assemble_pool(
    std::vector<Alternative> universe, std::vector<Menu> menus,
    const std::vector<std::pair<std::string, std::vector<AltId>>>& subjects,
    const ValidationOptions& opts) {
  SubjectPool pool;
  pool.universe = std::move(universe);
  pool.menus = std::move(menus);

  // Vet the shared structure once, with a placeholder subject; menu-level
  // problems are schema problems, not per-subject ones.
  if (pool.menus.empty()) throw SchemaError("pool has no menus");
  try {
    std::vector<AltId> first_members;
    for (const Menu& m : pool.menus) {
      if (m.size() == 0) throw SchemaError("empty menu");
      first_members.push_back(m.members().front());
    }
    subject_dataset(pool, first_members, opts);
  } catch (const ValidationError& e) {
    throw SchemaError(std::string("invalid universe or menus: ") + e.what());
  }

  std::vector<std::string> failures;
  for (const auto& [id, choices] : subjects) {
    if (choices.size() != pool.menus.size()) {
      throw SchemaError("subject '" + id + "' has " +
                        std::to_string(choices.size()) + " choices for " +
                        std::to_string(pool.menus.size()) + " menus");
    }
    try {
      pool.subjects.push_back({id, subject_dataset(pool, choices, opts)});
    } catch (const ValidationError& e) {
      failures.push_back(id + ": " + e.what());
    }
  }
  if (!failures.empty()) {
    std::ostringstream os;
    os << failures.size() << " invalid subject(s):";
    for (const std::string& f : failures) os << "\n  " << f;
    throw PoolValidationError(os.str());
  }
  return pool;
}

SubjectPool load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("bad JSON in " + path + ": " + e.what());
  }

  try {
    if (!doc.is_object() || doc.value("schema", "") != "revpref-data/1") {
      throw SchemaError("expected schema \"revpref-data/1\"");
    }
    ValidationOptions opts;
    if (doc.contains("bundle_total")) {
      opts.bundle_total = doc.at("bundle_total").get<int>();
    }

    std::vector<Alternative> universe;
    for (const json& a : doc.at("alternatives")) {
      Alternative alt;
      alt.id = a.at("id").get<int>();
      alt.label = a.value("label", "x" + std::to_string(alt.id + 1));
      if (a.contains("payments")) {
        const json& p = a.at("payments");
        if (!p.is_array() || p.size() != 3) {
          throw SchemaError("payments must be three installments");
        }
        alt.payments = {{p[0].get<int>(), p[1].get<int>(), p[2].get<int>()}};
      }
      universe.push_back(std::move(alt));
    }

    std::vector<Menu> menus;
    for (const json& m : doc.at("menus")) {
      menus.emplace_back(m.get<std::vector<AltId>>());
    }

    std::vector<std::pair<std::string, std::vector<AltId>>> subjects;
    for (const json& s : doc.at("subjects")) {
      subjects.emplace_back(s.at("id").get<std::string>(),
                            s.at("choices").get<std::vector<AltId>>());
    }
    return assemble_pool(std::move(universe), std::move(menus), subjects,
                         opts);
  } catch (const json::exception& e) {
    throw SchemaError("malformed pool document: " + std::string(e.what()));
  }
}

std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad " + what + ": '" + s + "'");
  }
}

SubjectPool load_csv(const std::string& path, const std::string& menus_path) {
  if (menus_path.empty()) {
    throw ParseError("csv pools need a sidecar menus file");
  }

  std::map<int, std::vector<AltId>> menu_rows;
  for (const auto& row : read_csv_rows(menus_path)) {
    if (row.size() >= 1 && row[0] == "menu_index") continue;  // header
    if (row.size() != 2) throw ParseError("menus rows are menu_index,alt_id");
    menu_rows[parse_int(row[0], "menu index")].push_back(
        parse_int(row[1], "alternative id"));
  }
  std::vector<Menu> menus;
  for (const auto& [idx, members] : menu_rows) {
    if (idx != static_cast<int>(menus.size())) {
      throw SchemaError("menu indices must be dense from 0");
    }
    menus.emplace_back(members);
  }

  AltId max_id = -1;
  for (const Menu& m : menus) {
    for (AltId a : m.members()) max_id = std::max(max_id, a);
  }
  std::vector<Alternative> universe;
  for (AltId i = 0; i <= max_id; ++i) {
    universe.push_back({i, "x" + std::to_string(i + 1), std::nullopt});
  }

  std::vector<std::pair<std::string, std::vector<AltId>>> subjects;
  std::map<std::string, std::size_t> index_of;
  std::vector<std::map<int, AltId>> picks;
  for (const auto& row : read_csv_rows(path)) {
    if (row.size() >= 1 && row[0] == "subject_id") continue;  // header
    if (row.size() != 3) {
      throw ParseError("data rows are subject_id,menu_index,choice_id");
    }
    auto [it, inserted] = index_of.emplace(row[0], subjects.size());
    if (inserted) {
      subjects.emplace_back(row[0], std::vector<AltId>{});
      picks.emplace_back();
    }
    int menu_index = parse_int(row[1], "menu index");
    if (menu_index < 0 || menu_index >= static_cast<int>(menus.size())) {
      throw SchemaError("menu index " + std::to_string(menu_index) +
                        " out of range");
    }
    if (!picks[it->second].emplace(menu_index, parse_int(row[2], "choice id"))
             .second) {
      throw SchemaError("subject '" + row[0] + "' repeats menu " +
                        std::to_string(menu_index));
    }
  }
  for (std::size_t s = 0; s < subjects.size(); ++s) {
    if (picks[s].size() != menus.size()) {
      throw SchemaError("subject '" + subjects[s].first +
                        "' does not cover every menu");
    }
    subjects[s].second.resize(menus.size());
    for (const auto& [menu_index, choice] : picks[s]) {
      subjects[s].second[menu_index] = choice;
    }
  }
  return assemble_pool(std::move(universe), std::move(menus), subjects, {});
}

}  // namespace

SubjectPool make_pool(
    std::vector<Alternative> universe, std::vector<Menu> menus,
    const std::vector<std::pair<std::string, std::vector<AltId>>>& subjects) {
  return assemble_pool(std::move(universe), std::move(menus), subjects, {});
}

SubjectPool load_pool(const std::string& path, FileFormat format,
                      const std::string& menus_path) {
  return format == FileFormat::kJson ? load_json(path)
                                     : load_csv(path, menus_path);
}

void save_pool(const SubjectPool& pool, const std::string& path) {
  ordered_json doc;
  doc["schema"] = "revpref-data/1";
  doc["alternatives"] = ordered_json::array();
  for (const Alternative& alt : pool.universe) {
    ordered_json a;
    a["id"] = alt.id;
    a["label"] = alt.label;
    if (alt.payments) a["payments"] = *alt.payments;
    doc["alternatives"].push_back(std::move(a));
  }
  doc["menus"] = ordered_json::array();
  for (const Menu& m : pool.menus) doc["menus"].push_back(m.members());
  doc["subjects"] = ordered_json::array();
  for (const Subject& s : pool.subjects) {
    ordered_json subject;
    subject["id"] = s.id;
    std::vector<AltId> choices;
    for (const Observation& obs : s.data.observations) {
      choices.push_back(obs.choice);
    }
    subject["choices"] = choices;
    doc["subjects"].push_back(std::move(subject));
  }

  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << doc.dump(2) << "\n";
}

std::string pool_digest(const SubjectPool& pool) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  mix("n=" + std::to_string(pool.n()));
  for (const Menu& m : pool.menus) {
    std::string repr = "|m";
    for (AltId a : m.members()) repr += ":" + std::to_string(a);
    mix(repr);
  }
  for (const Subject& s : pool.subjects) {
    std::string repr = "|s" + s.id;
    for (const Observation& obs : s.data.observations) {
      repr += ":" + std::to_string(obs.choice);
    }
    mix(repr);
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace revpref::harness
