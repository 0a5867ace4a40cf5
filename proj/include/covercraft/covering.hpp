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
#include <vector>

#include "covercraft/group.hpp"

namespace covercraft {

/// Ordered family of cosets, all living in the same group. Repeated
/// subgroups with different representatives are allowed.
struct CosetSystem {
  FiniteAbelianGroup group;
  std::vector<Coset> cosets;
};

/// Full audit of a coset system against a target element set: coverage with
/// the minimal uncovered witness, which members are removable, and the
/// intersection of the underlying subgroups.
struct CoverReport {
  bool covers_target = false;
  std::optional<long> uncovered_witness;
  std::vector<int> removable_indices;
  Subgroup subgroup_intersection;

  bool irredundant() const { return removable_indices.empty(); }
};

struct SearchBudget {
  int max_cosets = 0;  // 0 picks tau(|G|) + 2
  long long node_limit = 10'000'000;
  double time_limit_sec = 300.0;
};

enum class SearchStatus { kComplete, kNodeLimit, kTimeLimit, kCosetCap };

const char* to_string(SearchStatus status);

/// Outcome of a minimal-cover search. When `attained`, `value` is the
/// minimum and `witness` a system realizing it. `unattainable` means the
/// search exhausted every family size and none qualifies (possible only in
/// subgroup mode). Otherwise, on a spent budget, `value` carries the best
/// lower bound established so far.
struct CoverSearchResult {
  SearchStatus status = SearchStatus::kComplete;
  bool attained = false;
  bool unattainable = false;
  int value = 0;
  std::optional<CosetSystem> witness;
  long long nodes_expanded = 0;

  bool conclusive() const { return status == SearchStatus::kComplete; }
};

/// Exact audit; the uncovered witness is the minimal-index uncovered element.
CoverReport audit(const CosetSystem& system, const Bitset& target);

/// Minimal number of cosets whose union is exactly G minus the identity,
/// with a witness. The value is checked against tau(|G|) on completion.
CoverSearchResult phi(const FiniteAbelianGroup& group, const SearchBudget& budget = {});

/// Constructive cover of G minus the identity by exactly tau(|G|) cosets,
/// built by recursive index-p splitting: peel the p-1 nontrivial cosets of a
/// maximal subgroup of smallest prime index, then recurse into the subgroup.
CosetSystem punctured_cover_construct(const FiniteAbelianGroup& group);

enum class CoverMode { kCosets, kSubgroups };

/// f(G) in coset mode, g(G) in subgroup mode: the minimal size of an
/// irredundant covering of all of G whose subgroup intersection is trivial.
/// Subgroup mode forces every representative to the identity and may be
/// unattainable.
CoverSearchResult min_trivial_intersection_cover(const FiniteAbelianGroup& group,
                                                 CoverMode mode,
                                                 const SearchBudget& budget = {});

/// True when the computed f(G), and g(G) whenever attainable, sit above
/// 1 + lambda(|G|), with g(G) >= f(G). Throws on a spent budget.
bool verify_cover_bounds(const FiniteAbelianGroup& group, const SearchBudget& budget = {});

/// For an irredundant covering {H_i x_i} of its group with k members, checks
/// k >= 1 + tau(|G:H_i|) for every i (which implies k >= 1 + log2 |G:H_i|).
/// Throws if the system is not an irredundant covering.
bool verify_coset_index_bound(const CosetSystem& system);

struct BlockingResult {
  SearchStatus status = SearchStatus::kComplete;
  int value = 0;
  std::vector<long> witness_points;
  long long nodes_expanded = 0;
};

/// Smallest subset of the affine space AG(n, p) meeting every affine
/// hyperplane, found by exhaustive search and checked against 1 + n(p-1).
BlockingResult blocking_number(int n, int p, const SearchBudget& budget = {});

}  // namespace covercraft
