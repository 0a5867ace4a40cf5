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

#include <json.hpp>

#include "covercraft/covering.hpp"
#include "covercraft/gf.hpp"
#include "covercraft/parity.hpp"

namespace covercraft {

inline constexpr int kSchemaVersion = 1;

nlohmann::json coset_to_json(const Coset& c);
nlohmann::json system_to_json(const CosetSystem& system);
nlohmann::json cover_report_to_json(const CoverReport& report);
nlohmann::json search_result_to_json(const char* invariant, const FiniteAbelianGroup& group,
                                     const CoverSearchResult& result);

nlohmann::json affine_hyperplane_to_json(const AffineHyperplane& h);

/// Parity bitsets travel as lowercase hex with the group descriptor.
nlohmann::json cube_set_to_json(const CubeSet& c);

/// { "group": "C6", "cosets": [{"subgroup_elements": [...],
///   "representative": i}, ...], "target": "all" | "punctured" | [indices] }
struct AuditRequest {
  CosetSystem system;
  Bitset target;
};
AuditRequest parse_audit_request(const nlohmann::json& j, long element_count_limit);

/// k affine hyperplanes as "q n k" then k lines of n normal entries plus the
/// offset.
std::vector<AffineHyperplane> read_affine_system(std::istream& in);

/// Accepts the matrix text format or its JSON twin
/// {"q": 4, "rows": [[...], ...]}.
MatrixGF parse_matrix(const std::string& text);

}  // namespace covercraft
