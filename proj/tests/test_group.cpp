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

#include <algorithm>
#include <numeric>
#include <set>

#include "covercraft/group.hpp"

using namespace covercraft;

namespace {

GroupElement el(std::vector<int> coords) { return GroupElement{std::move(coords)}; }

Bitset bits_of(const FiniteAbelianGroup& g, std::initializer_list<long> indices) {
  Bitset b(static_cast<std::size_t>(g.order()));
  for (long i : indices) b.set(static_cast<std::size_t>(i));
  return b;
}

// Independent oracle for enumerate_subgroups: close every subset of elements
// and deduplicate. Only usable for tiny groups.
std::set<Bitset> subgroups_by_subset_closure(const FiniteAbelianGroup& g) {
  std::set<Bitset> out;
  long n = g.order();
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::vector<GroupElement> gens;
    for (long i = 0; i < n; ++i)
      if (mask & (1L << i)) gens.push_back(g.element(i));
    out.insert(subgroup_generated(g, gens).member_bits());
  }
  return out;
}

std::vector<FiniteAbelianGroup> sample_groups_up_to_24() {
  std::vector<FiniteAbelianGroup> out;
  for (const char* spec : {"C2", "C3", "C4", "C2*C2", "C6", "C8", "C2*C4", "C2*C2*C2",
                           "C9", "C3*C3", "C12", "C2*C2*C3", "C16", "C2*C2*C2*C2",
                           "C18", "C20", "C24", "C2*C3*C4"})
    out.push_back(parse_group(spec));
  return out;
}

}  // namespace

TEST_CASE("parse_group accepts both grammars") {
  FiniteAbelianGroup g = parse_group("C2*C2*C3");
  CHECK(g.cyclic_orders() == std::vector<int>{2, 2, 3});
  CHECK(g.order() == 12);

  CHECK(parse_group("C5").order() == 5);
  CHECK(parse_group(" 2 , 2 ,3 ").order() == 12);
  CHECK(parse_group("c4 * c2").cyclic_orders() == std::vector<int>{4, 2});

  CHECK_THROWS_AS(parse_group("C1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("C2**C2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("C8192"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("C100", 50), std::invalid_argument);
}

TEST_CASE("mixed radix indexing is a bijection") {
  FiniteAbelianGroup g = parse_group("C2*C3*C4");
  std::set<long> seen;
  for (long i = 0; i < g.order(); ++i) {
    GroupElement e = g.element(i);
    CHECK(g.index_of(e) == i);
    seen.insert(i);
  }
  CHECK(static_cast<long>(seen.size()) == g.order());
  CHECK(g.index_of(g.identity()) == 0);

  // add/negate agree between element form and index form
  for (long a = 0; a < g.order(); ++a)
    for (long b = 0; b < g.order(); ++b)
      CHECK(g.add_index(a, b) == g.index_of(g.add(g.element(a), g.element(b))));
  for (long a = 0; a < g.order(); ++a)
    CHECK(g.add_index(a, g.negate_index(a)) == 0);
}

TEST_CASE("subgroup_generated closure examples") {
  FiniteAbelianGroup c4 = parse_group("C4");
  Subgroup h = subgroup_generated(c4, std::vector<GroupElement>{el({2})});
  CHECK(h.member_bits() == bits_of(c4, {0, 2}));

  FiniteAbelianGroup v = parse_group("C2*C2");
  CHECK(subgroup_generated(v, std::vector<GroupElement>{}).member_bits() == bits_of(v, {0}));
  Subgroup whole =
      subgroup_generated(v, std::vector<GroupElement>{el({1, 0}), el({0, 1})});
  CHECK(whole.size() == 4);
}

TEST_CASE("enumerate_subgroups matches the subset-closure oracle") {
  for (const char* spec : {"C2*C2", "C6", "C8", "C2*C4", "C3*C3"}) {
    FiniteAbelianGroup g = parse_group(spec);
    std::set<Bitset> oracle = subgroups_by_subset_closure(g);
    std::vector<Subgroup> got = enumerate_subgroups(g);
    CHECK(got.size() == oracle.size());
    for (const Subgroup& h : got) CHECK(oracle.count(h.member_bits()) == 1);
    // sorted by (size, bits), no duplicates
    for (std::size_t i = 1; i < got.size(); ++i) {
      bool ordered = got[i - 1].size() < got[i].size() ||
                     (got[i - 1].size() == got[i].size() &&
                      got[i - 1].member_bits() < got[i].member_bits());
      CHECK(ordered);
    }
  }
}

TEST_CASE("subgroup counts for the documented cases") {
  CHECK(enumerate_subgroups(parse_group("C2*C2")).size() == 5);
  CHECK(enumerate_subgroups(parse_group("C6")).size() == 4);
  CHECK(enumerate_subgroups(parse_group("C5")).size() == 2);
  CHECK(enumerate_subgroups(parse_group("C7")).size() == 2);
}

TEST_CASE("every enumerated subgroup is closed, unital, Lagrange") {
  for (const FiniteAbelianGroup& g : sample_groups_up_to_24()) {
    for (const Subgroup& h : enumerate_subgroups(g)) {
      CHECK(h.contains(0));
      CHECK(g.order() % h.size() == 0);
      std::vector<std::size_t> members = h.member_bits().to_indices();
      for (std::size_t a : members) {
        CHECK(h.contains(g.negate_index(static_cast<long>(a))));
        for (std::size_t b : members)
          CHECK(h.contains(g.add_index(static_cast<long>(a), static_cast<long>(b))));
      }
    }
  }
}

TEST_CASE("intersect_subgroups") {
  FiniteAbelianGroup c6 = parse_group("C6");
  Subgroup h2(c6, bits_of(c6, {0, 3}));
  Subgroup h3(c6, bits_of(c6, {0, 2, 4}));
  std::vector<Subgroup> pair{h2, h3};
  CHECK(intersect_subgroups(pair).member_bits() == bits_of(c6, {0}));

  std::vector<Subgroup> twice{h2, h2};
  CHECK(intersect_subgroups(twice).member_bits() == h2.member_bits());

  FiniteAbelianGroup v = parse_group("C2*C2");
  std::vector<Subgroup> three;
  for (const Subgroup& h : enumerate_subgroups(v))
    if (h.size() == 2) three.push_back(h);
  REQUIRE(three.size() == 3);
  CHECK(intersect_subgroups(three).is_trivial());

  CHECK_THROWS_AS(intersect_subgroups(std::vector<Subgroup>{}), std::invalid_argument);
  std::vector<Subgroup> mismatch{h2, Subgroup(v, bits_of(v, {0}))};
  CHECK_THROWS_AS(intersect_subgroups(mismatch), std::invalid_argument);
}

TEST_CASE("coset canonicalization and equality") {
  FiniteAbelianGroup c6 = parse_group("C6");
  Subgroup h(c6, bits_of(c6, {0, 3}));
  Coset a(h, 1);
  Coset b(h, 4);  // 4 + {0,3} = {4,1} = same coset
  CHECK(a == b);
  CHECK(a.representative_index() == 1);
  CHECK(a.member_bits() == bits_of(c6, {1, 4}));
  CHECK(a.size() == 2);
}

TEST_CASE("quotient examples") {
  FiniteAbelianGroup c4 = parse_group("C4");
  QuotientMap q = quotient(c4, Subgroup(c4, bits_of(c4, {0, 2})));
  CHECK(q.target().order() == 2);
  CHECK(q.map_index(0) == 0);
  CHECK(q.map_index(2) == 0);
  CHECK(q.map_index(1) == 1);
  CHECK(q.map_index(3) == 1);

  // trivial kernel: isomorphic copy
  FiniteAbelianGroup g = parse_group("C2*C2*C3");
  QuotientMap iso = quotient(g, Subgroup(g, bits_of(g, {0})));
  CHECK(iso.target().order() == g.order());
  std::set<long> images;
  for (long x = 0; x < g.order(); ++x) images.insert(iso.map_index(x));
  CHECK(static_cast<long>(images.size()) == g.order());

  FiniteAbelianGroup v = parse_group("C2*C2");
  QuotientMap diag = quotient(v, Subgroup(v, bits_of(v, {0, 3})));
  CHECK(diag.target().cyclic_orders() == std::vector<int>{2});

  // quotient by the whole group is trivial
  Bitset all(static_cast<std::size_t>(v.order()), true);
  CHECK(quotient(v, Subgroup(v, all)).target().order() == 1);
}

TEST_CASE("quotient map is a homomorphism and pushes cosets") {
  FiniteAbelianGroup g = parse_group("C4*C2");
  for (const Subgroup& m : enumerate_subgroups(g)) {
    QuotientMap q = quotient(g, m);
    for (long a = 0; a < g.order(); ++a)
      for (long b = 0; b < g.order(); ++b)
        CHECK(q.map_index(g.add_index(a, b)) ==
              q.target().add_index(q.map_index(a), q.map_index(b)));
  }
  // pushing a coset through the map gives the coset of the images
  Subgroup m(g, subgroup_generated(g, std::vector<GroupElement>{el({2, 0})}).member_bits());
  QuotientMap q = quotient(g, m);
  Subgroup h = subgroup_generated(g, std::vector<GroupElement>{el({0, 1})});
  Coset c(h, 1);
  Coset image = q.map_coset(c);
  Bitset expect(static_cast<std::size_t>(q.target().order()));
  c.member_bits().for_each_set([&](std::size_t x) {
    expect.set(static_cast<std::size_t>(q.map_index(static_cast<long>(x))));
  });
  CHECK(image.member_bits() == expect);
}

TEST_CASE("quotient commutes with subgroup intersection") {
  // image of the intersection equals the intersection of images when the
  // kernel sits inside every subgroup being intersected
  for (const char* spec : {"C4*C2", "C2*C2*C3", "C12"}) {
    FiniteAbelianGroup g = parse_group(spec);
    std::vector<Subgroup> subs = enumerate_subgroups(g);
    for (const Subgroup& h1 : subs)
      for (const Subgroup& h2 : subs) {
        std::vector<Subgroup> pair{h1, h2};
        Subgroup meet = intersect_subgroups(pair);
        for (const Subgroup& m : subs) {
          if (!m.member_bits().is_subset_of(meet.member_bits())) continue;
          QuotientMap q = quotient(g, m);
          std::vector<Subgroup> images{q.map_subgroup(h1), q.map_subgroup(h2)};
          CHECK(q.map_subgroup(meet).member_bits() ==
                intersect_subgroups(images).member_bits());
        }
      }
  }
}

TEST_CASE("cyclic_prime_power_separator examples") {
  FiniteAbelianGroup v = parse_group("C2*C2");
  Subgroup trivial_v(v, bits_of(v, {0}));
  Subgroup k = cyclic_prime_power_separator(v, trivial_v, el({1, 0}));
  CHECK(k.member_bits() == bits_of(v, {0, 2}));  // {(0,0),(0,1)}

  FiniteAbelianGroup c6 = parse_group("C6");
  Subgroup trivial_6(c6, bits_of(c6, {0}));
  Subgroup k6 = cyclic_prime_power_separator(c6, trivial_6, el({3}));
  CHECK(k6.member_bits() == bits_of(c6, {0, 2, 4}));
  CHECK(quotient(c6, k6).target().cyclic_orders() == std::vector<int>{2});

  FiniteAbelianGroup c4 = parse_group("C4");
  Subgroup trivial_4(c4, bits_of(c4, {0}));
  Subgroup k4 = cyclic_prime_power_separator(c4, trivial_4, el({2}));
  CHECK(k4.is_trivial());
  CHECK(quotient(c4, k4).target().cyclic_orders() == std::vector<int>{4});

  CHECK_THROWS_AS(cyclic_prime_power_separator(c4, Subgroup(c4, bits_of(c4, {0, 2})), el({2})),
                  std::invalid_argument);
}

TEST_CASE("separator satisfies all three clauses on every small instance") {
  for (const FiniteAbelianGroup& g : sample_groups_up_to_24()) {
    std::vector<Subgroup> subs = enumerate_subgroups(g);
    for (const Subgroup& h : subs) {
      for (long x = 0; x < g.order(); ++x) {
        if (h.contains(x)) continue;
        GroupElement e = g.element(x);
        Subgroup k = cyclic_prime_power_separator(g, h, e);
        CHECK(h.member_bits().is_subset_of(k.member_bits()));
        CHECK(!k.contains(x));
        QuotientMap q = quotient(g, k);
        const std::vector<int>& t = q.target().cyclic_orders();
        REQUIRE(t.size() == 1);
        CHECK(factorize(t[0]).size() == 1);
        // maximality: no strictly larger subgroup admissible
        for (const Subgroup& k2 : subs)
          if (k2.size() > k.size() && !k2.contains(x))
            CHECK(!h.member_bits().is_subset_of(k2.member_bits()));
      }
    }
  }
}

TEST_CASE("lambda and tau") {
  CHECK(lambda_of(12) == 3);
  CHECK(tau_of(12) == 4);
  CHECK(lambda_of(1) == 0);
  CHECK(tau_of(1) == 0);
  CHECK(tau_of(9) == 4);
  CHECK(tau_of(6) == 3);
  CHECK_THROWS_AS(lambda_of(0), std::invalid_argument);
  CHECK_THROWS_AS(tau_of(-3), std::invalid_argument);

  // additivity over coprime factors
  for (long a = 1; a <= 40; ++a)
    for (long b = 1; b <= 40; ++b)
      if (std::gcd(a, b) == 1) {
        CHECK(lambda_of(a * b) == lambda_of(a) + lambda_of(b));
        CHECK(tau_of(a * b) == tau_of(a) + tau_of(b));
      }
}

TEST_CASE("oversized subgroup lattices are refused, not attempted") {
  // (C2)^7 already has about thirty thousand subgroups
  FiniteAbelianGroup g{std::vector<int>(7, 2)};
  CHECK_THROWS_AS(enumerate_subgroups(g), BudgetExhausted);
}

TEST_CASE("quotient decompositions come out as divisibility chains") {
  for (const char* spec : {"C4*C2", "C2*C2*C3", "C12", "C8*C2", "C2*C2*C2"}) {
    FiniteAbelianGroup g = parse_group(spec);
    for (const Subgroup& m : enumerate_subgroups(g)) {
      QuotientMap q = quotient(g, m);
      const std::vector<int>& orders = q.target().cyclic_orders();
      for (std::size_t i = 1; i < orders.size(); ++i)
        CHECK(orders[i] % orders[i - 1] == 0);
    }
  }
}
