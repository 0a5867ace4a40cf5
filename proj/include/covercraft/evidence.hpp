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

#include <optional>
#include <string>

#include <json.hpp>

#include "covercraft/suites.hpp"

namespace covercraft {

/// Consolidated finite evidence per conjecture, with the implication
/// hierarchy reproduced as documentation. Suites are run inline unless
/// cached_dir points at files named <suite>.json; missing caches leave
/// "not yet computed" markers. No entry claims a proof.
nlohmann::json evidence_report(const SuiteConfig& config = {},
                               const std::optional<std::string>& cached_dir = std::nullopt);

}  // namespace covercraft
