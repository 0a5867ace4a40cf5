// Copyright 2026 The covercraft Authors.
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "covercraft/covering.hpp"

namespace covercraft {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int threads = 1;  // accepted for interface symmetry; results never depend on it
  SearchBudget budget;
};

/// Names: phi-table, fedthm-scan, criterion-equiv, ajt-equiv, packing,
/// flows, hyperplane-min.
std::vector<std::string> suite_names();

/// Runs one named suite and returns its report: per-item pass/fail plus the
/// data the evidence report consumes. Identical (name, seed) inputs yield
/// identical JSON. Throws std::invalid_argument for unknown names.
nlohmann::json run_suite(const std::string& name, const SuiteConfig& config = {});

/// All cyclic decompositions (unordered, factors >= 2) of every order in
/// [2, max_order], as parse-able spec strings, deterministic order.
std::vector<std::string> group_table(int max_order);

}  // namespace covercraft
