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

#ifndef REVPREF_POOL_H_
#define REVPREF_POOL_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "revpref/dataset.hpp"

namespace revpref::harness {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Aggregates per-subject dataset validation failures.
class PoolValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Subject {
  std::string id;
  ChoiceDataset data;
};

// Many subjects choosing over one shared menu collection.
struct SubjectPool {
  std::vector<Alternative> universe;
  std::vector<Menu> menus;
  std::vector<Subject> subjects;

  int n() const { return static_cast<int>(universe.size()); }
};

enum class FileFormat { kJson, kCsv };

// Builds and validates a pool from parallel choice rows (choices[i] is the
// pick from menus[i]). Subject-level validation failures are collected
// into one PoolValidationError naming the offending subjects.
SubjectPool make_pool(
    std::vector<Alternative> universe, std::vector<Menu> menus,
    const std::vector<std::pair<std::string, std::vector<AltId>>>& subjects);

// JSON ("revpref-data/1") or CSV long format (subject_id,menu_index,
// choice_id; menus come from the sidecar file menu_index,alt_id).
SubjectPool load_pool(const std::string& path, FileFormat format,
                      const std::string& menus_path = "");

void save_pool(const SubjectPool& pool, const std::string& path);

// Stable 64-bit content digest (hex) of universe, menus and choices.
std::string pool_digest(const SubjectPool& pool);

}  // namespace revpref::harness

#endif  // REVPREF_POOL_H_
