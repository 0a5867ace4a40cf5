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

#include "covercraft/report.hpp"

#include <istream>
#include <sstream>

namespace covercraft {

using nlohmann::json;

MatrixGF parse_matrix(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = json::parse(text);
    FieldSpec field = FieldSpec::make(j.at("q").get<int>());
    auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
    int n = static_cast<int>(rows.size());
    int m = n ? static_cast<int>(rows[0].size()) : 0;
    std::vector<int> e;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m)
        throw std::invalid_argument("ragged rows in JSON matrix");
      e.insert(e.end(), row.begin(), row.end());
    }
    return MatrixGF(field, n, m, std::move(e));
  }
  std::istringstream in(text);
  return read_matrix(in);
}

json coset_to_json(const Coset& c) {
  json subgroup_elements = json::array();
  c.subgroup().member_bits().for_each_set(
      [&](std::size_t e) { subgroup_elements.push_back(e); });
  return json{{"subgroup_elements", subgroup_elements},
              {"representative", c.representative_index()}};
}

json system_to_json(const CosetSystem& system) {
  json out = json::array();
  for (const Coset& c : system.cosets) out.push_back(coset_to_json(c));
  return out;
}

json cover_report_to_json(const CoverReport& report) {
  json intersection = json::array();
  report.subgroup_intersection.member_bits().for_each_set(
      [&](std::size_t e) { intersection.push_back(e); });
  json out{{"covers_target", report.covers_target},
           {"removable_indices", report.removable_indices},
           {"irredundant", report.irredundant()},
           {"subgroup_intersection", intersection}};
  if (report.uncovered_witness)
    out["uncovered_witness"] = *report.uncovered_witness;
  else
    out["uncovered_witness"] = nullptr;
  return out;
}

json search_result_to_json(const char* invariant, const FiniteAbelianGroup& group,
                           const CoverSearchResult& result) {
  json out{{"schema", kSchemaVersion},
           {"invariant", invariant},
           {"group", group.spec_string()},
           {"nodes_expanded", result.nodes_expanded},
           {"status", to_string(result.status)}};
  if (result.attained) {
    out["value"] = result.value;
    out["witness"] = result.witness ? system_to_json(*result.witness) : json::array();
  } else if (result.unattainable) {
    out["value"] = "unattainable";
    out["witness"] = json::array();
  } else {
    out["value"] = nullptr;
    out["lower_bound"] = result.value;
    out["witness"] = json::array();
  }
  return out;
}

json affine_hyperplane_to_json(const AffineHyperplane& h) {
  return json{{"normal", h.hyperplane().normal().e}, {"offset", h.offset()}};
}

json cube_set_to_json(const CubeSet& c) {
  return json{{"p", c.group.p}, {"n", c.group.n}, {"bits_hex", c.parity_bits.to_hex()}};
}

AuditRequest parse_audit_request(const json& j, long element_count_limit) {
  if (!j.is_object() || !j.contains("group") || !j.contains("cosets"))
    throw std::invalid_argument("audit request needs 'group' and 'cosets'");
  FiniteAbelianGroup group =
      parse_group(j.at("group").get<std::string>(), element_count_limit);

  CosetSystem system{group, {}};
  for (const json& cj : j.at("cosets")) {
    Bitset bits(static_cast<std::size_t>(group.order()));
    for (long e : cj.at("subgroup_elements").get<std::vector<long>>()) {
      if (e < 0 || e >= group.order())
        throw std::invalid_argument("subgroup element index out of range");
      bits.set(static_cast<std::size_t>(e));
    }
    Subgroup h(group, std::move(bits));
    long rep = cj.at("representative").get<long>();
    if (rep < 0 || rep >= group.order())
      throw std::invalid_argument("representative index out of range");
    system.cosets.emplace_back(std::move(h), rep);
  }

  Bitset target(static_cast<std::size_t>(group.order()), true);
  if (j.contains("target")) {
    const json& t = j.at("target");
    if (t.is_string() && t.get<std::string>() == "all") {
      // full group, already set
    } else if (t.is_string() && t.get<std::string>() == "punctured") {
      target.set(0, false);
    } else if (t.is_array()) {
      target = Bitset(static_cast<std::size_t>(group.order()));
      for (long e : t.get<std::vector<long>>()) {
        if (e < 0 || e >= group.order())
          throw std::invalid_argument("target index out of range");
        target.set(static_cast<std::size_t>(e));
      }
    } else {
      throw std::invalid_argument("target must be 'all', 'punctured', or an index array");
    }
  }
  return AuditRequest{std::move(system), std::move(target)};
}

std::vector<AffineHyperplane> read_affine_system(std::istream& in) {
  int q, n, k;
  if (!(in >> q >> n >> k)) throw std::invalid_argument("system header must be 'q n k'");
  FieldSpec field = FieldSpec::make(q);
  std::vector<AffineHyperplane> out;
  for (int i = 0; i < k; ++i) {
    std::vector<int> normal(static_cast<std::size_t>(n));
    for (int& x : normal)
      if (!(in >> x)) throw std::invalid_argument("system body is short");
    int offset;
    if (!(in >> offset)) throw std::invalid_argument("system body is short");
    out.emplace_back(gf_vector(field, std::move(normal)), offset);
  }
  return out;
}

}  // namespace covercraft
