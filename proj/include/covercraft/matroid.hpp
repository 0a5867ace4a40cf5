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
#include <span>
#include <vector>

#include "covercraft/gf.hpp"

namespace covercraft {

/// Linear matroid: a multiset of vectors in GF(q)^n with the usual span rank.
struct LinearMatroid {
  FieldSpec field;
  int dimension;
  std::vector<VectorGF> ground;
};

LinearMatroid linear_matroid(const FieldSpec& field, int dimension,
                             std::vector<VectorGF> ground);

/// Columns of the matrix file become the ground set.
LinearMatroid matroid_from_matrix(const MatrixGF& m);

int rank_subset(const LinearMatroid& m, std::span<const int> subset);

struct BasePacking {
  std::vector<int> subset;                // X, as ground indices
  std::vector<std::vector<int>> bases;    // pairwise disjoint bases of X
};

struct PackingResult {
  int value = 0;
  BasePacking packing;
};

/// Maximum number of pairwise disjoint bases of X, with an explicit packing.
/// The value is the partition-theorem minimum of
/// floor((|X|-|Y|)/(r(X)-r(Y))) over Y with r(Y) < r(X), evaluated exactly by
/// subset enumeration when |X| <= 12 and cross-checked against the
/// augmenting-path packing either way. Requires r(X) >= 1.
PackingResult max_disjoint_bases(const LinearMatroid& m, std::span<const int> x);

/// A subset X of the ground set holding k disjoint bases of itself: the
/// minimum-size loop-free subset with |X| >= r(X) k, which is
/// inclusion-minimal and therefore packs. When only degenerate subsets
/// (empty or loops) satisfy the count, the empty subset is returned and its
/// k disjoint bases are k copies of the empty basis; absent when the count
/// fails everywhere. Ground sets beyond 20 elements are rejected.
std::optional<std::vector<int>> packing_subset(const LinearMatroid& m, int k);

}  // namespace covercraft
