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

#include <numeric>
#include <set>

#include "covercraft/covering.hpp"

using namespace covercraft;

namespace {

Bitset bits_of(const FiniteAbelianGroup& g, std::initializer_list<long> indices) {
  Bitset b(static_cast<std::size_t>(g.order()));
  for (long i : indices) b.set(static_cast<std::size_t>(i));
  return b;
}

Bitset all_but_identity(const FiniteAbelianGroup& g) {
  Bitset b(static_cast<std::size_t>(g.order()), true);
  b.set(0, false);
  return b;
}

Bitset everything(const FiniteAbelianGroup& g) {
  return Bitset(static_cast<std::size_t>(g.order()), true);
}

CosetSystem translated(const CosetSystem& system, long t) {
  CosetSystem out{system.group, {}};
  for (const Coset& c : system.cosets)
    out.cosets.emplace_back(c.subgroup(),
                            system.group.add_index(c.representative_index(), t));
  return out;
}

Bitset translated(const FiniteAbelianGroup& g, const Bitset& set, long t) {
  Bitset out(set.size());
  set.for_each_set([&](std::size_t e) {
    out.set(static_cast<std::size_t>(g.add_index(static_cast<long>(e), t)));
  });
  return out;
}

void check_valid_trivial_intersection_witness(const CosetSystem& witness) {
  CoverReport report = audit(witness, everything(witness.group));
  CHECK(report.covers_target);
  CHECK(report.irredundant());
  CHECK(report.subgroup_intersection.is_trivial());
}

}  // namespace

TEST_CASE("audit: the three documented shapes") {
  FiniteAbelianGroup c6 = parse_group("C6");
  Subgroup h2(c6, bits_of(c6, {0, 3}));
  Subgroup trivial(c6, bits_of(c6, {0}));
  CosetSystem lem0{c6, {Coset(h2, 1), Coset(h2, 2), Coset(trivial, 3)}};
  CoverReport r = audit(lem0, all_but_identity(c6));
  CHECK(r.covers_target);
  CHECK(r.irredundant());
  CHECK(r.subgroup_intersection.is_trivial());

  CosetSystem empty{c6, {}};
  CoverReport re = audit(empty, bits_of(c6, {0}));
  CHECK(!re.covers_target);
  CHECK(re.uncovered_witness == 0);

  Bitset full_bits(static_cast<std::size_t>(c6.order()), true);
  CosetSystem with_full{c6, {Coset(Subgroup(c6, full_bits), 0L), Coset(h2, 1), Coset(trivial, 3)}};
  CoverReport rf = audit(with_full, everything(c6));
  CHECK(rf.covers_target);
  CHECK(rf.removable_indices == std::vector<int>{1, 2});
}

TEST_CASE("phi: documented values") {
  CHECK(phi(parse_group("C2")).value == 1);
  CoverSearchResult c6 = phi(parse_group("C6"));
  CHECK(c6.value == 3);
  CHECK(c6.attained);
  CHECK(phi(parse_group("C2*C2*C3")).value == 4);
}

TEST_CASE("phi witnesses avoid the identity and cover everything else") {
  for (const char* spec : {"C2", "C4", "C6", "C2*C2", "C8", "C9", "C2*C2*C3"}) {
    FiniteAbelianGroup g = parse_group(spec);
    CoverSearchResult res = phi(g);
    REQUIRE(res.attained);
    REQUIRE(res.witness.has_value());
    Bitset covered(static_cast<std::size_t>(g.order()));
    for (const Coset& c : res.witness->cosets) covered |= c.member_bits();
    CHECK(covered == all_but_identity(g));
  }
}

TEST_CASE("punctured_cover_construct unrolls the prime-index recursion") {
  FiniteAbelianGroup c4 = parse_group("C4");
  CosetSystem w4 = punctured_cover_construct(c4);
  REQUIRE(w4.cosets.size() == 2);
  CHECK(w4.cosets[0].member_bits() == bits_of(c4, {1, 3}));
  CHECK(w4.cosets[1].member_bits() == bits_of(c4, {2}));

  FiniteAbelianGroup c3 = parse_group("C3");
  CosetSystem w3 = punctured_cover_construct(c3);
  REQUIRE(w3.cosets.size() == 2);
  CHECK(w3.cosets[0].member_bits() == bits_of(c3, {1}));
  CHECK(w3.cosets[1].member_bits() == bits_of(c3, {2}));

  FiniteAbelianGroup v = parse_group("C2*C2");
  CosetSystem wv = punctured_cover_construct(v);
  REQUIRE(wv.cosets.size() == 2);
  CHECK(wv.cosets[0].member_bits() == bits_of(v, {2, 3}));  // {(0,0),(1,0)} + (0,1)
  CHECK(wv.cosets[1].member_bits() == bits_of(v, {1}));     // {(1,0)}

  for (const char* spec : {"C12", "C2*C2*C2", "C16", "C9", "C24"}) {
    FiniteAbelianGroup g = parse_group(spec);
    CosetSystem w = punctured_cover_construct(g);
    CHECK(static_cast<int>(w.cosets.size()) == tau_of(g.order()));
  }
}

TEST_CASE("min_trivial_intersection_cover: documented values") {
  CoverSearchResult f_v = min_trivial_intersection_cover(parse_group("C2*C2"), CoverMode::kCosets);
  CHECK(f_v.value == 3);
  check_valid_trivial_intersection_witness(*f_v.witness);

  CoverSearchResult f_c4 = min_trivial_intersection_cover(parse_group("C4"), CoverMode::kCosets);
  CHECK(f_c4.value == 3);
  check_valid_trivial_intersection_witness(*f_c4.witness);

  CoverSearchResult g_c4 = min_trivial_intersection_cover(parse_group("C4"), CoverMode::kSubgroups);
  CHECK(g_c4.unattainable);
  CHECK(g_c4.conclusive());
  CHECK(!g_c4.attained);

  CoverSearchResult g_v = min_trivial_intersection_cover(parse_group("C2*C2"), CoverMode::kSubgroups);
  CHECK(g_v.value == 3);
  check_valid_trivial_intersection_witness(*g_v.witness);
}

TEST_CASE("every attained witness passes the full audit") {
  for (const char* spec : {"C2", "C6", "C8", "C2*C4", "C2*C2*C2", "C12", "C3*C3"}) {
    FiniteAbelianGroup g = parse_group(spec);
    for (CoverMode mode : {CoverMode::kCosets, CoverMode::kSubgroups}) {
      CoverSearchResult res = min_trivial_intersection_cover(g, mode);
      REQUIRE(res.conclusive());
      if (res.attained) check_valid_trivial_intersection_witness(*res.witness);
    }
  }
}

TEST_CASE("verify_cover_bounds on the documented groups") {
  CHECK(verify_cover_bounds(parse_group("C2*C2")));
  CHECK(verify_cover_bounds(parse_group("C6")));
  CHECK(verify_cover_bounds(parse_group("C8")));
}

TEST_CASE("verify_coset_index_bound") {
  FiniteAbelianGroup c4 = parse_group("C4");
  Subgroup h2(c4, bits_of(c4, {0, 2}));
  Subgroup trivial(c4, bits_of(c4, {0}));
  CosetSystem three{c4, {Coset(h2, 1), Coset(trivial, 0L), Coset(trivial, 2)}};
  CHECK(verify_coset_index_bound(three));

  Bitset full(static_cast<std::size_t>(c4.order()), true);
  CosetSystem whole{c4, {Coset(Subgroup(c4, full), 0L)}};
  CHECK(verify_coset_index_bound(whole));

  // (C2)^3 covered by the three coordinate hyperplane subgroups plus the
  // singleton at (1,1,1): k = 4 meets 1 + log2(8) exactly.
  FiniteAbelianGroup e3 = parse_group("C2*C2*C2");
  std::vector<Coset> cosets;
  for (const Subgroup& h : enumerate_subgroups(e3)) {
    if (h.size() != 4) continue;
    bool coordinate_plane = false;
    for (int axis = 0; axis < 3 && !coordinate_plane; ++axis) {
      bool matches = true;
      h.member_bits().for_each_set([&](std::size_t e) {
        if (e3.element(static_cast<long>(e)).coords[static_cast<std::size_t>(axis)] != 0)
          matches = false;
      });
      coordinate_plane = matches;
    }
    if (coordinate_plane) cosets.emplace_back(h, 0L);
  }
  REQUIRE(cosets.size() == 3);
  Subgroup t3(e3, bits_of(e3, {0}));
  cosets.emplace_back(t3, e3.index_of(GroupElement{{1, 1, 1}}));
  CosetSystem tight{e3, cosets};
  CHECK(verify_coset_index_bound(tight));
  CHECK(tight.cosets.size() == 4);

  // redundant system rejected
  CosetSystem redundant{c4, {Coset(Subgroup(c4, full), 0L), Coset(h2, 1)}};
  CHECK_THROWS_AS(verify_coset_index_bound(redundant), std::invalid_argument);
}

TEST_CASE("translation invariance of audits") {
  FiniteAbelianGroup g = parse_group("C2*C2*C3");
  Subgroup h = subgroup_generated(g, std::vector<GroupElement>{GroupElement{{1, 0, 0}}});
  Subgroup k = subgroup_generated(g, std::vector<GroupElement>{GroupElement{{0, 0, 1}}});
  CosetSystem system{g, {Coset(h, 1), Coset(k, 2), Coset(h, 5)}};
  Bitset target = bits_of(g, {1, 2, 5, 7, 9});
  CoverReport base = audit(system, target);
  for (long t = 0; t < g.order(); ++t) {
    CoverReport moved = audit(translated(system, t), translated(g, target, t));
    CHECK(moved.covers_target == base.covers_target);
    CHECK(moved.removable_indices == base.removable_indices);
    CHECK(moved.subgroup_intersection.member_bits() ==
          base.subgroup_intersection.member_bits());
    if (!base.covers_target) {
      REQUIRE(moved.uncovered_witness.has_value());
      // witness translates to a (possibly different) uncovered element
      Bitset uncovered = translated(g, target, t);
      Bitset covered(static_cast<std::size_t>(g.order()));
      for (const Coset& c : translated(system, t).cosets) covered |= c.member_bits();
      CHECK(!covered.test(static_cast<std::size_t>(*moved.uncovered_witness)));
    }
  }
}

TEST_CASE("phi is superadditive over coprime direct factors") {
  struct Pair {
    const char* b;
    const char* c;
    const char* product;
  };
  for (const Pair& pair : {Pair{"C2", "C3", "C2*C3"}, Pair{"C4", "C3", "C4*C3"},
                           Pair{"C2*C2", "C3", "C2*C2*C3"}, Pair{"C3", "C5", "C3*C5"},
                           Pair{"C8", "C2", "C16"}}) {
    int pb = phi(parse_group(pair.b)).value;
    int pc = phi(parse_group(pair.c)).value;
    int pbc = phi(parse_group(pair.product)).value;
    bool coprime =
        std::gcd(parse_group(pair.b).order(), parse_group(pair.c).order()) == 1;
    if (coprime) CHECK(pbc >= pb + pc);
  }
}

TEST_CASE("blocking numbers") {
  CHECK(blocking_number(2, 2).value == 3);
  CHECK(blocking_number(1, 3).value == 3);
  CHECK(blocking_number(2, 3).value == 5);
  CHECK_THROWS_AS(blocking_number(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(blocking_number(0, 3), std::invalid_argument);
}

TEST_CASE("blocking witness actually blocks") {
  BlockingResult res = blocking_number(2, 3);
  FiniteAbelianGroup g = parse_group("C3*C3");
  std::set<long> points(res.witness_points.begin(), res.witness_points.end());
  for (const Subgroup& h : enumerate_subgroups(g)) {
    if (h.size() != 3) continue;
    Bitset seen(static_cast<std::size_t>(g.order()));
    for (long x = 0; x < g.order(); ++x) {
      if (seen.test(static_cast<std::size_t>(x))) continue;
      Coset line(h, x);
      seen |= line.member_bits();
      bool hit = false;
      for (long pt : points)
        if (line.contains(pt)) hit = true;
      CHECK(hit);
    }
  }
}

TEST_CASE("searches are deterministic") {
  FiniteAbelianGroup g = parse_group("C2*C2*C3");
  CoverSearchResult a = phi(g);
  CoverSearchResult b = phi(g);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.nodes_expanded == b.nodes_expanded);
  REQUIRE(a.witness->cosets.size() == b.witness->cosets.size());
  for (std::size_t i = 0; i < a.witness->cosets.size(); ++i)
    CHECK(a.witness->cosets[i] == b.witness->cosets[i]);

  CoverSearchResult fa = min_trivial_intersection_cover(g, CoverMode::kCosets);
  CoverSearchResult fb = min_trivial_intersection_cover(g, CoverMode::kCosets);
  CHECK(fa.value == fb.value);
  CHECK(fa.nodes_expanded == fb.nodes_expanded);
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  SearchBudget tiny;
  tiny.node_limit = 3;
  CoverSearchResult res = min_trivial_intersection_cover(parse_group("C2*C2*C3"),
                                                         CoverMode::kCosets, tiny);
  CHECK(!res.conclusive());
  CHECK(res.status == SearchStatus::kNodeLimit);
  CHECK(!res.attained);
  CHECK_THROWS_AS(verify_cover_bounds(parse_group("C2*C2*C3"), tiny), BudgetExhausted);

  SearchBudget hurried;
  hurried.time_limit_sec = 1e-9;  // expires at the first 1024-node heartbeat
  CoverSearchResult timed = min_trivial_intersection_cover(
      parse_group("C2*C2*C2*C2"), CoverMode::kCosets, hurried);
  CHECK(!timed.conclusive());
  CHECK(timed.status == SearchStatus::kTimeLimit);
}

namespace {

// Plain combination-enumeration oracle for the trivial-intersection cover
// searches: no branching heuristics, no bans, no pruning.
struct BruteCover {
  bool attainable = false;
  int value = 0;
};

BruteCover brute_min_trivial_cover(const FiniteAbelianGroup& g, CoverMode mode) {
  std::vector<Coset> cands;
  for (const Subgroup& h : enumerate_subgroups(g)) {
    if (h.is_whole_group() && g.order() > 1) continue;
    if (mode == CoverMode::kSubgroups) {
      cands.emplace_back(h, 0L);
    } else {
      Bitset seen(static_cast<std::size_t>(g.order()));
      for (long x = 0; x < g.order(); ++x) {
        if (seen.test(static_cast<std::size_t>(x))) continue;
        Coset c(h, x);
        seen |= c.member_bits();
        cands.push_back(std::move(c));
      }
    }
  }
  Bitset target(static_cast<std::size_t>(g.order()), true);
  for (int k = 1; k <= static_cast<int>(cands.size()); ++k) {
    std::vector<int> pick;
    bool found = false;
    auto combos = [&](auto&& self, int start) -> void {
      if (found) return;
      if (static_cast<int>(pick.size()) == k) {
        CosetSystem system{g, {}};
        for (int i : pick) system.cosets.push_back(cands[static_cast<std::size_t>(i)]);
        CoverReport r = audit(system, target);
        if (r.covers_target && r.irredundant() && r.subgroup_intersection.is_trivial())
          found = true;
        return;
      }
      for (int i = start; i < static_cast<int>(cands.size()) && !found; ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    combos(combos, 0);
    if (found) return BruteCover{true, k};
  }
  return BruteCover{};
}

}  // namespace

TEST_CASE("search minima agree with plain combination enumeration") {
  for (const char* spec : {"C2", "C3", "C4", "C2*C2", "C5", "C6", "C7", "C8",
                           "C2*C4", "C2*C2*C2"}) {
    FiniteAbelianGroup g = parse_group(spec);
    for (CoverMode mode : {CoverMode::kCosets, CoverMode::kSubgroups}) {
      BruteCover brute = brute_min_trivial_cover(g, mode);
      CoverSearchResult search = min_trivial_intersection_cover(g, mode);
      REQUIRE(search.conclusive());
      CHECK(search.attained == brute.attainable);
      if (brute.attainable) CHECK(search.value == brute.value);
    }
  }
}

TEST_CASE("blocking numbers agree with plain subset enumeration") {
  struct Case {
    int n, p;
  };
  for (const Case& c : {Case{2, 2}, Case{1, 3}, Case{1, 5}, Case{2, 3}}) {
    FiniteAbelianGroup g{std::vector<int>(static_cast<std::size_t>(c.n), c.p)};
    std::vector<Bitset> hyperplanes;
    for (const Subgroup& h : enumerate_subgroups(g)) {
      if (h.size() != g.order() / c.p) continue;
      Bitset seen(static_cast<std::size_t>(g.order()));
      for (long x = 0; x < g.order(); ++x) {
        if (seen.test(static_cast<std::size_t>(x))) continue;
        Coset coset(h, x);
        seen |= coset.member_bits();
        hyperplanes.push_back(coset.member_bits());
      }
    }
    int brute = -1;
    for (int size = 1; size <= g.order() && brute < 0; ++size) {
      std::vector<long> pick;
      bool found = false;
      auto combos = [&](auto&& self, long start) -> void {
        if (found) return;
        if (static_cast<int>(pick.size()) == size) {
          for (const Bitset& hp : hyperplanes) {
            bool hit = false;
            for (long x : pick)
              if (hp.test(static_cast<std::size_t>(x))) hit = true;
            if (!hit) return;
          }
          found = true;
          return;
        }
        for (long x = start; x < g.order() && !found; ++x) {
          pick.push_back(x);
          self(self, x + 1);
          pick.pop_back();
        }
      };
      combos(combos, 0);
      if (found) brute = size;
    }
    CHECK(blocking_number(c.n, c.p).value == brute);
  }
}
