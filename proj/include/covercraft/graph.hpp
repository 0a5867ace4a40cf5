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

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "covercraft/gf.hpp"
#include "covercraft/group.hpp"
#include "covercraft/parity.hpp"

namespace covercraft {

/// Finite loopless graph with multi-edges, and a fixed orientation per edge.
/// By default edges are oriented from the lower vertex index to the higher;
/// pass normalize_orientation = false to keep the input direction.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
        bool normalize_orientation = true);

  int vertex_count() const { return vertices_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int connected_components() const;

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

/// Text format: first line "V E", then E lines "u v" (0-based).
Graph read_graph(std::istream& in);

/// One vector per edge in the coloring space W = GF(q)^V: +1 on the first
/// endpoint, -1 on the second, 0 elsewhere.
std::vector<VectorGF> edge_vectors(const Graph& g, int q);

/// Backtracking proper coloring with colors 0..q-1, or absent.
std::optional<std::vector<int>> colorable_naive(const Graph& g, int q);

/// Colorability through hyperplane coverage: q-colorable iff the spaces
/// orthogonal to the edge vectors do not cover all of W.
bool colorable_via_cover(const Graph& g, int q);

/// Colorability through subset-sum parity (odd prime q): some vector of W is
/// reached by an odd number of zero-one combinations of the edge vectors.
bool colorable_via_parity(const Graph& g, int q);

/// The group of A-valued flows on the fixed orientation, parameterized by
/// the non-tree edges of a spanning forest: each non-tree edge carries a free
/// value and tree edges balance through the fundamental cycles, so the flow
/// group is A^(|E| - |V| + m).
class FlowSpace {
 public:
  FlowSpace(Graph graph, FiniteAbelianGroup group);

  const Graph& graph() const { return graph_; }
  const FiniteAbelianGroup& group() const { return group_; }
  int dimension() const { return static_cast<int>(free_edges_.size()); }
  long flow_count() const;
  const std::vector<int>& free_edges() const { return free_edges_; }

  /// Edge values (group element indices) of the flow with the given
  /// assignment of element indices to the non-tree edges.
  std::vector<long> flow_at(const std::vector<long>& assignment) const;

  /// Flow values by the mixed-radix index of the assignment.
  std::vector<long> flow_by_index(long index) const;

  bool conserves(const std::vector<long>& edge_values) const;
  bool edge_is_bridge(int edge) const;

 private:
  Graph graph_;
  FiniteAbelianGroup group_;
  std::vector<int> free_edges_;                  // non-tree edge ids
  std::vector<std::vector<int>> cycle_coeff_;    // per free edge: -1/0/+1 per edge
};

FlowSpace flow_space(const Graph& g, const FiniteAbelianGroup& a);

/// First nowhere-zero A-flow in mixed-radix order, or absent. Implemented by
/// enumerating the flow group and checking membership in the edge subgroups
/// of flows vanishing on a given edge.
std::optional<std::vector<GroupElement>> nz_flow_exists(const Graph& g,
                                                        const FiniteAbelianGroup& a);

}  // namespace covercraft
