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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "covercraft/graph.hpp"
#include "covercraft/rng.hpp"

using namespace covercraft;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},  // outer cycle
                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},  // spokes
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});  // inner star
}

bool proper(const Graph& g, const std::vector<int>& color) {
  for (const auto& [u, v] : g.edges())
    if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) return false;
  return true;
}

}  // namespace

TEST_CASE("graph construction and parsing") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 5}}), std::invalid_argument);

  std::stringstream s("4 2\n3 1\n0 2\n");
  Graph g = read_graph(s);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges()[0] == std::pair<int, int>{1, 3});  // normalized low -> high
  CHECK(g.connected_components() == 2);

  // multi-edges allowed
  Graph multi(2, {{0, 1}, {0, 1}});
  CHECK(multi.edge_count() == 2);
}

TEST_CASE("edge_vectors") {
  Graph single(2, {{0, 1}});
  std::vector<VectorGF> v3 = edge_vectors(single, 3);
  REQUIRE(v3.size() == 1);
  CHECK(v3[0].e == std::vector<int>{1, 2});

  for (const VectorGF& v : edge_vectors(triangle(), 3)) {
    int ones = 0, twos = 0;
    for (int x : v.e) {
      if (x == 1) ++ones;
      if (x == 2) ++twos;
    }
    CHECK(ones == 1);
    CHECK(twos == 1);
  }

  std::vector<VectorGF> v2 = edge_vectors(single, 2);
  CHECK(v2[0].e == std::vector<int>{1, 1});
}

TEST_CASE("colorable_naive") {
  auto c = colorable_naive(triangle(), 3);
  REQUIRE(c.has_value());
  CHECK(proper(triangle(), *c));

  CHECK(!colorable_naive(k4(), 3).has_value());
  CHECK(colorable_naive(k4(), 4).has_value());
  CHECK(colorable_naive(Graph(3, {}), 1).has_value());
  CHECK(!colorable_naive(Graph(2, {{0, 1}}), 1).has_value());
}

TEST_CASE("colorable_via_cover matches the documented counts") {
  CHECK(colorable_via_cover(triangle(), 3));
  CHECK(!colorable_via_cover(k4(), 3));
  CHECK(colorable_via_cover(Graph(1, {}), 2));

  // triangle over GF(3): 27 vectors, 21 covered, 6 proper colorings
  FieldSpec f3 = field_make(3);
  std::vector<VectorGF> vecs = edge_vectors(triangle(), 3);
  int uncovered = 0;
  for (long idx = 0; idx < 27; ++idx) {
    VectorGF w = point_at(f3, 3, idx);
    bool covered = false;
    for (const VectorGF& ve : vecs)
      if (scalar_product(ve, w) == 0) covered = true;
    if (!covered) ++uncovered;
  }
  CHECK(uncovered == 6);
}

TEST_CASE("colorable_via_parity") {
  CHECK(colorable_via_parity(triangle(), 3));
  CHECK(!colorable_via_parity(k4(), 3));
  CHECK(colorable_via_parity(Graph(3, {}), 3));
  CHECK_THROWS_AS(colorable_via_parity(triangle(), 2), std::invalid_argument);
  CHECK_THROWS_AS(colorable_via_parity(triangle(), 9), std::invalid_argument);
}

TEST_CASE("parity criterion survives rescaling the edge vectors") {
  Rng rng(23);
  FieldSpec f3 = field_make(3);
  for (const Graph& g : {triangle(), k4(), Graph(4, {{0, 1}, {1, 2}, {2, 3}})}) {
    bool expected = colorable_naive(g, 3).has_value();
    GroupPn group{3, g.vertex_count()};
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<VectorGF> scaled;
      for (const VectorGF& v : edge_vectors(g, 3))
        scaled.push_back(vec_scale(rng.between(1, 2), v));
      CHECK(cube_set(group, scaled).parity_bits.any() == expected);
    }
  }
}

TEST_CASE("all three colorability routes agree on every small graph") {
  // every graph on 5 labelled vertices (all subsets of the 10 edges)
  std::vector<std::pair<int, int>> all_edges;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) all_edges.emplace_back(u, v);
  for (unsigned mask = 0; mask < (1u << 10); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 10; ++i)
      if (mask & (1u << i)) edges.push_back(all_edges[static_cast<std::size_t>(i)]);
    Graph g(5, edges);
    for (int q : {2, 3}) {
      bool naive = colorable_naive(g, q).has_value();
      CHECK(colorable_via_cover(g, q) == naive);
      if (q == 3) CHECK(colorable_via_parity(g, q) == naive);
    }
  }
}

TEST_CASE("flow space dimensions") {
  FiniteAbelianGroup c3 = parse_group("C3");
  CHECK(flow_space(k4(), c3).dimension() == 3);
  CHECK(flow_space(petersen(), c3).dimension() == 6);

  Graph tree(4, {{0, 1}, {1, 2}, {2, 3}});
  FlowSpace ts = flow_space(tree, c3);
  CHECK(ts.dimension() == 0);
  CHECK(ts.flow_count() == 1);
  std::vector<long> zero = ts.flow_by_index(0);
  for (long v : zero) CHECK(v == 0);
}

TEST_CASE("flow count is exactly |A|^dimension and flows conserve") {
  FiniteAbelianGroup v4 = parse_group("C2*C2");
  FlowSpace space = flow_space(k4(), v4);
  CHECK(space.flow_count() == 64);
  std::set<std::vector<long>> distinct;
  for (long idx = 0; idx < space.flow_count(); ++idx) {
    std::vector<long> flow = space.flow_by_index(idx);
    CHECK(space.conserves(flow));
    distinct.insert(flow);
  }
  CHECK(distinct.size() == 64);
}

TEST_CASE("nowhere-zero flow facts") {
  FiniteAbelianGroup c3 = parse_group("C3");
  FiniteAbelianGroup c4 = parse_group("C4");
  FiniteAbelianGroup v4 = parse_group("C2*C2");

  CHECK(!nz_flow_exists(k4(), c3).has_value());
  CHECK(nz_flow_exists(k4(), c4).has_value());
  auto w = nz_flow_exists(k4(), v4);
  REQUIRE(w.has_value());
  for (const GroupElement& e : *w) CHECK(v4.index_of(e) != 0);

  // a bridge forces zero on itself
  Graph bridged(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK(!nz_flow_exists(bridged, c3).has_value());
  CHECK(!nz_flow_exists(bridged, v4).has_value());
}

TEST_CASE("orientation does not change nowhere-zero flow existence") {
  FiniteAbelianGroup c3 = parse_group("C3");
  FiniteAbelianGroup v4 = parse_group("C2*C2");
  std::vector<std::pair<int, int>> base = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (unsigned mask = 0; mask < (1u << 6); ++mask) {
    std::vector<std::pair<int, int>> flipped = base;
    for (int i = 0; i < 6; ++i)
      if (mask & (1u << i))
        std::swap(flipped[static_cast<std::size_t>(i)].first,
                  flipped[static_cast<std::size_t>(i)].second);
    Graph g(4, flipped, /*normalize_orientation=*/false);
    CHECK(!nz_flow_exists(g, c3).has_value());
    CHECK(nz_flow_exists(g, v4).has_value());
  }
}
