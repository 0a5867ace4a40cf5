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

#include "covercraft/matroid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace covercraft {

LinearMatroid linear_matroid(const FieldSpec& field, int dimension,
                             std::vector<VectorGF> ground) {
  if (dimension < 0) throw std::invalid_argument("dimension must be nonnegative");
  for (const VectorGF& v : ground)
    if (v.field != field || static_cast<int>(v.size()) != dimension)
      throw std::invalid_argument("ground vector shape mismatch");
  return LinearMatroid{field, dimension, std::move(ground)};
}

LinearMatroid matroid_from_matrix(const MatrixGF& m) {
  std::vector<VectorGF> ground;
  for (int c = 0; c < m.cols(); ++c) ground.push_back(m.col(c));
  return linear_matroid(m.field(), m.rows(), std::move(ground));
}

namespace {

int rank_of_vectors(const LinearMatroid& m, const std::vector<int>& indices) {
  if (indices.empty()) return 0;
  std::vector<VectorGF> rows;
  rows.reserve(indices.size());
  for (int i : indices) rows.push_back(m.ground[static_cast<std::size_t>(i)]);
  return rank(MatrixGF::from_rows(rows));
}

bool independent_with(const LinearMatroid& m, const std::vector<int>& set, int extra) {
  std::vector<int> joined = set;
  joined.push_back(extra);
  return rank_of_vectors(m, joined) == static_cast<int>(joined.size());
}

bool independent_swap(const LinearMatroid& m, const std::vector<int>& set, int out,
                      int in) {
  std::vector<int> swapped;
  swapped.reserve(set.size());
  for (int i : set)
    if (i != out) swapped.push_back(i);
  swapped.push_back(in);
  return rank_of_vectors(m, swapped) == static_cast<int>(swapped.size());
}

/// Partition as much of X as possible into k independent sets by breadth
/// first augmenting paths in the exchange digraph. Elements are processed in
/// ascending index order, so the result is deterministic.
std::vector<std::vector<int>> partition_into_k(const LinearMatroid& m,
                                               const std::vector<int>& x, int k) {
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(k));
  for (int e : x) {
    // BFS over displaced elements; parent tracks who pushes whom out of
    // which set.
    struct Arrival {
      int displaced_by;
      int from_set;
    };
    std::vector<int> order;
    std::vector<Arrival> how;
    std::vector<char> visited(m.ground.size(), 0);
    std::deque<int> queue{e};
    visited[static_cast<std::size_t>(e)] = 1;

    int final_element = -1, final_set = -1;
    std::vector<Arrival> arrival(m.ground.size());
    while (!queue.empty() && final_element < 0) {
      int u = queue.front();
      queue.pop_front();
      for (int j = 0; j < k && final_element < 0; ++j) {
        if (independent_with(m, sets[static_cast<std::size_t>(j)], u)) {
          final_element = u;
          final_set = j;
          break;
        }
        for (int f : sets[static_cast<std::size_t>(j)]) {
          if (visited[static_cast<std::size_t>(f)]) continue;
          if (!independent_swap(m, sets[static_cast<std::size_t>(j)], f, u)) continue;
          visited[static_cast<std::size_t>(f)] = 1;
          arrival[static_cast<std::size_t>(f)] = Arrival{u, j};
          queue.push_back(f);
        }
      }
    }
    if (final_element < 0) continue;  // e stays unplaced

    // Unwind: insert the tail, then let each predecessor take the slot its
    // successor vacated.
    int current = final_element;
    int target = final_set;
    while (true) {
      auto& dst = sets[static_cast<std::size_t>(target)];
      if (current != e) {
        Arrival a = arrival[static_cast<std::size_t>(current)];
        auto& src = sets[static_cast<std::size_t>(a.from_set)];
        src.erase(std::find(src.begin(), src.end(), current));
        dst.push_back(current);
        std::sort(dst.begin(), dst.end());
        current = a.displaced_by;
        target = a.from_set;
      } else {
        dst.push_back(current);
        std::sort(dst.begin(), dst.end());
        break;
      }
    }
  }
  return sets;
}

std::optional<std::vector<std::vector<int>>> pack_k_bases(const LinearMatroid& m,
                                                          const std::vector<int>& x, int k,
                                                          int rank_x) {
  std::vector<std::vector<int>> sets = partition_into_k(m, x, k);
  for (const std::vector<int>& s : sets)
    if (static_cast<int>(s.size()) != rank_x) return std::nullopt;
  return sets;
}

int edmonds_formula(const LinearMatroid& m, const std::vector<int>& x, int rank_x) {
  int best = static_cast<int>(x.size());  // Y empty: |X| / r(X) dominates this
  unsigned long total = 1UL << x.size();
  for (unsigned long mask = 0; mask < total; ++mask) {
    std::vector<int> y;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (mask & (1UL << i)) y.push_back(x[i]);
    int ry = rank_of_vectors(m, y);
    if (ry >= rank_x) continue;
    int bound = (static_cast<int>(x.size()) - static_cast<int>(y.size())) / (rank_x - ry);
    best = std::min(best, bound);
  }
  return best;
}

}  // namespace

int rank_subset(const LinearMatroid& m, std::span<const int> subset) {
  std::vector<int> indices(subset.begin(), subset.end());
  for (int i : indices)
    if (i < 0 || i >= static_cast<int>(m.ground.size()))
      throw std::invalid_argument("ground index out of range");
  return rank_of_vectors(m, indices);
}

PackingResult max_disjoint_bases(const LinearMatroid& m, std::span<const int> x) {
  std::vector<int> indices(x.begin(), x.end());
  std::sort(indices.begin(), indices.end());
  int r = rank_subset(m, indices);
  if (r < 1) throw std::invalid_argument("packing needs rank at least 1");

  // Largest k whose packing succeeds; bounded by |X| / r.
  int value = 0;
  std::vector<std::vector<int>> bases;
  for (int k = 1; k * r <= static_cast<int>(indices.size()); ++k) {
    auto packed = pack_k_bases(m, indices, k, r);
    if (!packed) break;
    value = k;
    bases = std::move(*packed);
  }

  if (indices.size() <= 12) {
    int formula = edmonds_formula(m, indices, r);
    if (formula != value)
      throw std::logic_error("partition packing disagrees with the rank formula");
  }
  return PackingResult{value, BasePacking{indices, std::move(bases)}};
}

std::optional<std::vector<int>> packing_subset(const LinearMatroid& m, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (m.ground.size() > 20)
    throw std::invalid_argument("ground set too large for the exact minimal-subset search");
  std::vector<int> all(m.ground.size());
  for (std::size_t i = 0; i < m.ground.size(); ++i) all[i] = static_cast<int>(i);
  int r_all = rank_of_vectors(m, all);

  // A minimum-size loop-free subset with |Y| >= r(Y) k is inclusion-minimal
  // among all qualifying subsets, and inclusion-minimality forces the packing
  // bound through: greedy single-element peeling can stall on non-minimal
  // sets that do not pack. Loops never help a packing, so only nonzero
  // vectors enter.
  std::vector<int> loop_free;
  for (int i : all)
    if (!is_zero(m.ground[static_cast<std::size_t>(i)])) loop_free.push_back(i);

  std::vector<int> pick;
  std::optional<std::vector<int>> found;
  auto search = [&](auto&& self, std::size_t start, std::size_t size) -> bool {
    if (pick.size() == size) {
      int r = rank_of_vectors(m, pick);
      if (static_cast<long>(pick.size()) >= static_cast<long>(r) * k) {
        found = pick;
        return true;
      }
      return false;
    }
    for (std::size_t i = start; i < loop_free.size(); ++i) {
      if (loop_free.size() - i < size - pick.size()) break;
      pick.push_back(loop_free[i]);
      if (self(self, i + 1, size)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t size = static_cast<std::size_t>(k);
       size <= loop_free.size() && !found; ++size) {
    pick.clear();
    search(search, 0, size);
  }

  if (found) {
    PackingResult packed = max_disjoint_bases(m, *found);
    if (packed.value < k)
      throw std::logic_error("minimal counting subset failed to pack k bases");
    return found;
  }

  // No loop-free subset qualifies. If the counting hypothesis still holds,
  // the minimal qualifying subset is degenerate (empty or loops only) and
  // its k disjoint bases are k copies of the empty set.
  if (static_cast<long>(all.size()) >= static_cast<long>(r_all) * k)
    return std::vector<int>{};
  return std::nullopt;
}

}  // namespace covercraft
