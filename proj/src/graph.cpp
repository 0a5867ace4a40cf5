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

#include "covercraft/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <stdexcept>

namespace covercraft {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             bool normalize_orientation)
    : vertices_(vertex_count), edges_(std::move(edges)) {
  if (vertices_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
  for (auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (normalize_orientation && u > v) std::swap(u, v);
  }
}

int Graph::connected_components() const {
  std::vector<int> parent(static_cast<std::size_t>(vertices_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = vertices_;
  for (const auto& [u, v] : edges_) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(ru)] = rv;
      --components;
    }
  }
  return components;
}

Graph read_graph(std::istream& in) {
  int v, e;
  if (!(in >> v >> e)) throw std::invalid_argument("graph header must be 'V E'");
  if (e < 0) throw std::invalid_argument("negative edge count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    int a, b;
    if (!(in >> a >> b)) throw std::invalid_argument("graph body is short");
    edges.emplace_back(a, b);
  }
  return Graph(v, std::move(edges));
}

std::vector<VectorGF> edge_vectors(const Graph& g, int q) {
  FieldSpec field = field_make(q);
  std::vector<VectorGF> out;
  out.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const auto& [u, v] : g.edges()) {
    std::vector<int> e(static_cast<std::size_t>(g.vertex_count()), 0);
    e[static_cast<std::size_t>(u)] = 1;
    e[static_cast<std::size_t>(v)] = field.neg(1);
    out.push_back(gf_vector(field, std::move(e)));
  }
  return out;
}

std::optional<std::vector<int>> colorable_naive(const Graph& g, int q) {
  if (q < 1) throw std::invalid_argument("need at least one color");
  int n = g.vertex_count();
  std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    neighbors[static_cast<std::size_t>(u)].push_back(v);
    neighbors[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  auto assign = [&](auto&& self, int vertex) -> bool {
    if (vertex == n) return true;
    for (int c = 0; c < q; ++c) {
      bool clash = false;
      for (int w : neighbors[static_cast<std::size_t>(vertex)])
        if (color[static_cast<std::size_t>(w)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color[static_cast<std::size_t>(vertex)] = c;
      if (self(self, vertex + 1)) return true;
      color[static_cast<std::size_t>(vertex)] = -1;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return color;
}

bool colorable_via_cover(const Graph& g, int q) {
  FieldSpec field = field_make(q);
  long points = 1;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (points > kDefaultElementLimit / q)
      throw std::invalid_argument("coloring space exceeds the element limit");
    points *= q;
  }
  std::vector<VectorGF> vectors = edge_vectors(g, q);
  for (long idx = 0; idx < points; ++idx) {
    VectorGF w = point_at(field, g.vertex_count(), idx);
    bool on_some_orthogonal = false;
    for (const VectorGF& ve : vectors)
      if (scalar_product(ve, w) == 0) {
        on_some_orthogonal = true;
        break;
      }
    if (!on_some_orthogonal) return true;  // w is a proper coloring
  }
  return false;
}

bool colorable_via_parity(const Graph& g, int q) {
  auto factors = factorize(q);
  if (factors.size() != 1 || factors[0].second != 1 || q == 2)
    throw std::invalid_argument("parity colorability needs an odd prime q");
  if (g.edge_count() > kCubeSetLimit)
    throw std::invalid_argument("edge count exceeds the cube limit");
  GroupPn group{q, g.vertex_count()};
  CubeSet c = cube_set(group, edge_vectors(g, q));
  return c.parity_bits.any();
}

FlowSpace::FlowSpace(Graph graph, FiniteAbelianGroup group)
    : graph_(std::move(graph)), group_(std::move(group)) {
  int n = graph_.vertex_count();
  int m = graph_.edge_count();

  // Spanning forest in edge-index order.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<char> in_tree(static_cast<std::size_t>(m), 0);
  std::vector<std::vector<std::pair<int, int>>> tree_adj(static_cast<std::size_t>(n));
  for (int e = 0; e < m; ++e) {
    auto [u, v] = graph_.edges()[static_cast<std::size_t>(e)];
    if (find(u) != find(v)) {
      parent[static_cast<std::size_t>(find(u))] = find(v);
      in_tree[static_cast<std::size_t>(e)] = 1;
      tree_adj[static_cast<std::size_t>(u)].emplace_back(v, e);
      tree_adj[static_cast<std::size_t>(v)].emplace_back(u, e);
    } else {
      free_edges_.push_back(e);
    }
  }

  // Fundamental cycle of each non-tree edge: the edge itself (+1) plus the
  // tree path from its head back to its tail, signed by traversal direction.
  for (int e : free_edges_) {
    auto [u, v] = graph_.edges()[static_cast<std::size_t>(e)];
    std::vector<int> coeff(static_cast<std::size_t>(m), 0);
    coeff[static_cast<std::size_t>(e)] = 1;

    // BFS path v -> u through the forest.
    std::vector<int> prev_vertex(static_cast<std::size_t>(n), -1);
    std::vector<int> prev_edge(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{v};
    seen[static_cast<std::size_t>(v)] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      if (x == u) break;
      for (auto [y, te] : tree_adj[static_cast<std::size_t>(x)]) {
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        prev_vertex[static_cast<std::size_t>(y)] = x;
        prev_edge[static_cast<std::size_t>(y)] = te;
        queue.push_back(y);
      }
    }
    if (!seen[static_cast<std::size_t>(u)])
      throw std::logic_error("non-tree edge endpoints must be forest-connected");
    int walk = u;
    while (walk != v) {
      int te = prev_edge[static_cast<std::size_t>(walk)];
      int from = prev_vertex[static_cast<std::size_t>(walk)];
      auto [a, b] = graph_.edges()[static_cast<std::size_t>(te)];
      // Walking from `from` to `walk`; the tree edge points a -> b.
      coeff[static_cast<std::size_t>(te)] += (a == from && b == walk) ? 1 : -1;
      walk = from;
    }

    // Conservation is an integer identity per vertex; check it outright.
    std::vector<int> net(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < m; ++i) {
      auto [a, b] = graph_.edges()[static_cast<std::size_t>(i)];
      net[static_cast<std::size_t>(a)] += coeff[static_cast<std::size_t>(i)];
      net[static_cast<std::size_t>(b)] -= coeff[static_cast<std::size_t>(i)];
    }
    for (int x : net)
      if (x != 0) throw std::logic_error("fundamental cycle violates conservation");
    cycle_coeff_.push_back(std::move(coeff));
  }

  int expected = m - n + graph_.connected_components();
  if (static_cast<int>(free_edges_.size()) != expected)
    throw std::logic_error("flow dimension disagrees with |E| - |V| + m");
}

long FlowSpace::flow_count() const {
  long count = 1;
  for (int i = 0; i < dimension(); ++i) {
    if (count > kDefaultElementLimit / group_.order())
      throw std::invalid_argument("flow group exceeds the element limit");
    count *= group_.order();
  }
  return count;
}

std::vector<long> FlowSpace::flow_at(const std::vector<long>& assignment) const {
  if (assignment.size() != free_edges_.size())
    throw std::invalid_argument("assignment arity does not match the flow dimension");
  std::vector<long> values(static_cast<std::size_t>(graph_.edge_count()), 0);
  for (std::size_t j = 0; j < free_edges_.size(); ++j) {
    long t = assignment[j];
    if (t < 0 || t >= group_.order()) throw std::invalid_argument("assignment out of range");
    long neg_t = group_.negate_index(t);
    const std::vector<int>& coeff = cycle_coeff_[j];
    for (int e = 0; e < graph_.edge_count(); ++e) {
      int c = coeff[static_cast<std::size_t>(e)];
      while (c > 0) {
        values[static_cast<std::size_t>(e)] =
            group_.add_index(values[static_cast<std::size_t>(e)], t);
        --c;
      }
      while (c < 0) {
        values[static_cast<std::size_t>(e)] =
            group_.add_index(values[static_cast<std::size_t>(e)], neg_t);
        ++c;
      }
    }
  }
  return values;
}

std::vector<long> FlowSpace::flow_by_index(long index) const {
  std::vector<long> assignment(free_edges_.size());
  for (std::size_t j = 0; j < free_edges_.size(); ++j) {
    assignment[j] = index % group_.order();
    index /= group_.order();
  }
  return flow_at(assignment);
}

bool FlowSpace::conserves(const std::vector<long>& edge_values) const {
  std::vector<long> in(static_cast<std::size_t>(graph_.vertex_count()), 0);
  std::vector<long> out(static_cast<std::size_t>(graph_.vertex_count()), 0);
  for (int e = 0; e < graph_.edge_count(); ++e) {
    auto [u, v] = graph_.edges()[static_cast<std::size_t>(e)];
    out[static_cast<std::size_t>(u)] =
        group_.add_index(out[static_cast<std::size_t>(u)], edge_values[static_cast<std::size_t>(e)]);
    in[static_cast<std::size_t>(v)] =
        group_.add_index(in[static_cast<std::size_t>(v)], edge_values[static_cast<std::size_t>(e)]);
  }
  return in == out;
}

bool FlowSpace::edge_is_bridge(int edge) const {
  for (const std::vector<int>& coeff : cycle_coeff_)
    if (coeff[static_cast<std::size_t>(edge)] != 0) return false;
  return true;  // an edge on no cycle carries zero in every flow
}

FlowSpace flow_space(const Graph& g, const FiniteAbelianGroup& a) {
  return FlowSpace(g, a);
}

std::optional<std::vector<GroupElement>> nz_flow_exists(const Graph& g,
                                                        const FiniteAbelianGroup& a) {
  FlowSpace space(g, a);
  long total = space.flow_count();

  bool connected = g.connected_components() == 1;
  bool bridgeless = true;
  for (int e = 0; e < g.edge_count(); ++e)
    if (space.edge_is_bridge(e)) bridgeless = false;

  long vanishing_everywhere = 0;
  std::optional<std::vector<long>> witness;
  for (long idx = 0; idx < total; ++idx) {
    std::vector<long> values = space.flow_by_index(idx);
    if (!space.conserves(values)) throw std::logic_error("enumerated flow not conserved");
    bool all_zero = true;
    bool in_some_edge_subgroup = false;  // vanishes on some edge
    for (long v : values) {
      if (v != 0) all_zero = false;
      if (v == 0) in_some_edge_subgroup = true;
    }
    if (all_zero) ++vanishing_everywhere;
    if (!in_some_edge_subgroup && !witness) witness = values;
  }

  // The intersection of the edge subgroups is the zero flow alone; on
  // connected bridgeless inputs assert it outright.
  if (connected && bridgeless && g.edge_count() > 0 && vanishing_everywhere != 1)
    throw std::logic_error("edge subgroup intersection is not trivial");

  if (!witness) return std::nullopt;
  std::vector<GroupElement> out;
  out.reserve(witness->size());
  for (long v : *witness) out.push_back(a.element(v));
  return out;
}

}  // namespace covercraft
