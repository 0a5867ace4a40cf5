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

#include "covercraft/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace covercraft {

namespace {

long checked_product(const std::vector<int>& orders, long limit) {
  long product = 1;
  for (int n : orders) {
    if (n < 2) throw std::invalid_argument("cyclic order must be >= 2");
    if (product > limit / n)
      throw std::invalid_argument("group order exceeds element count limit");
    product *= n;
  }
  return product;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders,
                                       long element_count_limit)
    : orders_(std::move(cyclic_orders)), limit_(element_count_limit) {
  if (limit_ < 1) throw std::invalid_argument("element count limit must be positive");
  order_ = checked_product(orders_, limit_);
}

long FiniteAbelianGroup::index_of(const GroupElement& e) const {
  if (e.coords.size() != orders_.size())
    throw std::invalid_argument("element arity does not match group");
  long index = 0;
  long radix = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    int c = e.coords[i];
    if (c < 0 || c >= orders_[i]) throw std::invalid_argument("coordinate out of range");
    index += c * radix;
    radix *= orders_[i];
  }
  return index;
}

GroupElement FiniteAbelianGroup::element(long index) const {
  if (index < 0 || index >= order_) throw std::invalid_argument("element index out of range");
  GroupElement e{std::vector<int>(orders_.size(), 0)};
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e.coords[i] = static_cast<int>(index % orders_[i]);
    index /= orders_[i];
  }
  return e;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (a.coords.size() != orders_.size() || b.coords.size() != orders_.size())
    throw std::invalid_argument("element arity does not match group");
  GroupElement out{std::vector<int>(orders_.size(), 0)};
  for (std::size_t i = 0; i < orders_.size(); ++i)
    out.coords[i] = (a.coords[i] + b.coords[i]) % orders_[i];
  return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  GroupElement out{std::vector<int>(orders_.size(), 0)};
  for (std::size_t i = 0; i < orders_.size(); ++i)
    out.coords[i] = a.coords[i] == 0 ? 0 : orders_[i] - a.coords[i];
  return out;
}

long FiniteAbelianGroup::add_index(long a, long b) const {
  long index = 0;
  long radix = 1;
  for (int n : orders_) {
    index += ((a + b) % n) * radix;
    a /= n;
    b /= n;
    radix *= n;
  }
  return index;
}

long FiniteAbelianGroup::negate_index(long a) const {
  long index = 0;
  long radix = 1;
  for (int n : orders_) {
    long c = a % n;
    index += (c == 0 ? 0 : n - c) * radix;
    a /= n;
    radix *= n;
  }
  return index;
}

std::string FiniteAbelianGroup::spec_string() const {
  if (orders_.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out.push_back('*');
    out.push_back('C');
    out += std::to_string(orders_[i]);
  }
  return out;
}

FiniteAbelianGroup parse_group(std::string_view spec, long element_count_limit) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty group spec");

  char sep;
  bool c_form = (s[0] == 'C' || s[0] == 'c');
  sep = c_form ? '*' : ',';

  std::vector<int> orders;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(sep, pos);
    if (end == std::string::npos) end = s.size();
    std::string token = s.substr(pos, end - pos);
    if (c_form) {
      if (token.size() < 2 || (token[0] != 'C' && token[0] != 'c'))
        throw std::invalid_argument("expected C<int> token in group spec");
      token = token.substr(1);
    }
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        }))
      throw std::invalid_argument("expected integer in group spec");
    long value = std::strtol(token.c_str(), nullptr, 10);
    if (value < 2) throw std::invalid_argument("cyclic order must be >= 2");
    if (value > element_count_limit)
      throw std::invalid_argument("group order exceeds element count limit");
    orders.push_back(static_cast<int>(value));
    if (end == s.size()) break;
    pos = end + 1;
  }
  return FiniteAbelianGroup(std::move(orders), element_count_limit);
}

Subgroup::Subgroup(FiniteAbelianGroup group, Bitset member_bits,
                   std::vector<GroupElement> generators)
    : group_(std::move(group)), bits_(std::move(member_bits)), gens_(std::move(generators)) {
  if (static_cast<long>(bits_.size()) != group_.order())
    throw std::invalid_argument("membership bitset size does not match group order");
  if (!bits_.test(0)) throw std::invalid_argument("subgroup must contain the identity");
  // Closure under addition and negation; Lagrange on the way out.
  std::vector<std::size_t> members = bits_.to_indices();
  for (std::size_t a : members) {
    if (!bits_.test(static_cast<std::size_t>(group_.negate_index(static_cast<long>(a)))))
      throw std::invalid_argument("subgroup not closed under negation");
    for (std::size_t b : members)
      if (!bits_.test(static_cast<std::size_t>(
              group_.add_index(static_cast<long>(a), static_cast<long>(b)))))
        throw std::invalid_argument("subgroup not closed under addition");
  }
  if (group_.order() % static_cast<long>(members.size()) != 0)
    throw std::logic_error("subgroup size does not divide group order");
}

Coset::Coset(Subgroup subgroup, const GroupElement& shift)
    : Coset(subgroup, subgroup.group().index_of(shift)) {}

Coset::Coset(Subgroup subgroup, long shift_index)
    : subgroup_(std::move(subgroup)), rep_(0),
      members_(static_cast<std::size_t>(subgroup_.group().order())) {
  const FiniteAbelianGroup& g = subgroup_.group();
  if (shift_index < 0 || shift_index >= g.order())
    throw std::invalid_argument("coset shift out of range");
  std::size_t min_index = Bitset::npos;
  subgroup_.member_bits().for_each_set([&](std::size_t h) {
    std::size_t m = static_cast<std::size_t>(g.add_index(static_cast<long>(h), shift_index));
    members_.set(m);
    if (m < min_index) min_index = m;
  });
  rep_ = static_cast<long>(min_index);
}

Subgroup subgroup_generated(const FiniteAbelianGroup& group,
                            std::span<const GroupElement> generators) {
  Bitset bits(static_cast<std::size_t>(group.order()));
  bits.set(0);
  for (const GroupElement& gen : generators) {
    long g = group.index_of(gen);
    // The closure of a subgroup B and one new element g is the union of the
    // translates B + j*g, so walk the multiples of g until one lands inside.
    Bitset base = bits;
    long t = g;
    while (!bits.test(static_cast<std::size_t>(t))) {
      Bitset shifted(static_cast<std::size_t>(group.order()));
      base.for_each_set([&](std::size_t m) {
        shifted.set(static_cast<std::size_t>(group.add_index(static_cast<long>(m), t)));
      });
      bits |= shifted;
      t = group.add_index(t, g);
    }
  }
  return Subgroup(group, std::move(bits),
                  std::vector<GroupElement>(generators.begin(), generators.end()));
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& group) {
  if (group.order() > group.element_count_limit())
    throw std::invalid_argument("group order exceeds element count limit");

  struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
  };
  std::unordered_set<Bitset, BitsetHash> known;
  Bitset trivial(static_cast<std::size_t>(group.order()));
  trivial.set(0);
  known.insert(trivial);

  std::vector<Bitset> work{trivial};
  while (!work.empty()) {
    Bitset h = std::move(work.back());
    work.pop_back();
    for (long g = 1; g < group.order(); ++g) {
      if (h.test(static_cast<std::size_t>(g))) continue;
      Bitset grown = h;
      long t = g;
      while (!grown.test(static_cast<std::size_t>(t))) {
        Bitset shifted(static_cast<std::size_t>(group.order()));
        h.for_each_set([&](std::size_t m) {
          shifted.set(static_cast<std::size_t>(group.add_index(static_cast<long>(m), t)));
        });
        grown |= shifted;
        t = group.add_index(t, g);
      }
      if (!known.count(grown)) {
        if (static_cast<long>(known.size()) >= kMaxEnumeratedSubgroups)
          throw BudgetExhausted("subgroup lattice exceeds the enumeration bound");
        known.insert(grown);
        work.push_back(std::move(grown));
      }
    }
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const Bitset& bits : known) out.emplace_back(group, bits);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.member_bits() < b.member_bits();
  });
  return out;
}

Subgroup intersect_subgroups(std::span<const Subgroup> subgroups) {
  if (subgroups.empty()) throw std::invalid_argument("empty subgroup list");
  Bitset bits = subgroups[0].member_bits();
  for (std::size_t i = 1; i < subgroups.size(); ++i) {
    if (subgroups[i].group() != subgroups[0].group())
      throw std::invalid_argument("subgroups live in different groups");
    bits &= subgroups[i].member_bits();
  }
  return Subgroup(subgroups[0].group(), std::move(bits));
}

namespace {

/// Smith normal form over Z, tracking only the right transform V. Rows of `a`
/// generate the relation lattice; after reduction a is diagonal with
/// d1 | d2 | ... and the lattice in the new coordinates x -> x*V is
/// prod d_i Z.
void smith_normal_form(std::vector<std::vector<long>>& a, std::vector<std::vector<long>>& v) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  v.assign(cols, std::vector<long>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  auto swap_rows = [&](std::size_t r1, std::size_t r2) { std::swap(a[r1], a[r2]); };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][c1], a[r][c2]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(v[r][c1], v[r][c2]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, long mult) {
    for (std::size_t c = 0; c < cols; ++c) a[dst][c] += mult * a[src][c];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, long mult) {
    for (std::size_t r = 0; r < rows; ++r) a[r][dst] += mult * a[r][src];
    for (std::size_t r = 0; r < cols; ++r) v[r][dst] += mult * v[r][src];
  };

  std::size_t t = std::min(rows, cols);
  for (std::size_t k = 0; k < t; ++k) {
    while (true) {
      // Move a minimal nonzero entry of the trailing block to (k, k).
      std::size_t pr = Bitset::npos, pc = Bitset::npos;
      long best = 0;
      for (std::size_t r = k; r < rows; ++r)
        for (std::size_t c = k; c < cols; ++c)
          if (a[r][c] != 0 && (best == 0 || std::abs(a[r][c]) < best)) {
            best = std::abs(a[r][c]);
            pr = r;
            pc = c;
          }
      if (best == 0) break;
      if (pr != k) swap_rows(pr, k);
      if (pc != k) swap_cols(pc, k);
      if (a[k][k] < 0)
        for (std::size_t c = k; c < cols; ++c) a[k][c] = -a[k][c];

      bool reduced = true;
      for (std::size_t r = k + 1; r < rows; ++r)
        if (a[r][k] != 0) {
          add_row(r, k, -(a[r][k] / a[k][k]));
          if (a[r][k] != 0) reduced = false;
        }
      for (std::size_t c = k + 1; c < cols; ++c)
        if (a[k][c] != 0) {
          add_col(c, k, -(a[k][c] / a[k][k]));
          if (a[k][c] != 0) reduced = false;
        }
      if (!reduced) continue;

      // Divisibility: fold in any entry the pivot does not divide.
      bool divides_all = true;
      for (std::size_t r = k + 1; r < rows && divides_all; ++r)
        for (std::size_t c = k + 1; c < cols && divides_all; ++c)
          if (a[r][c] % a[k][k] != 0) {
            add_row(k, r, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
  }
}

std::vector<GroupElement> small_generating_set(const FiniteAbelianGroup& group,
                                               const Subgroup& m) {
  std::vector<GroupElement> gens;
  Bitset closed(static_cast<std::size_t>(group.order()));
  closed.set(0);
  m.member_bits().for_each_set([&](std::size_t x) {
    if (closed.test(x)) return;
    gens.push_back(group.element(static_cast<long>(x)));
    closed = subgroup_generated(group, gens).member_bits();
  });
  return gens;
}

}  // namespace

QuotientMap::QuotientMap(FiniteAbelianGroup source, Subgroup kernel,
                         FiniteAbelianGroup target, std::vector<long> image_index)
    : source_(std::move(source)), kernel_(std::move(kernel)),
      target_(std::move(target)), image_(std::move(image_index)) {}

GroupElement QuotientMap::map_element(const GroupElement& e) const {
  return target_.element(map_index(source_.index_of(e)));
}

Subgroup QuotientMap::map_subgroup(const Subgroup& h) const {
  Bitset bits(static_cast<std::size_t>(target_.order()));
  h.member_bits().for_each_set([&](std::size_t x) {
    bits.set(static_cast<std::size_t>(image_[x]));
  });
  return Subgroup(target_, std::move(bits));
}

Coset QuotientMap::map_coset(const Coset& c) const {
  return Coset(map_subgroup(c.subgroup()), map_index(c.representative_index()));
}

QuotientMap quotient(const FiniteAbelianGroup& group, const Subgroup& m) {
  if (m.group() != group) throw std::invalid_argument("kernel is not a subgroup of the group");

  const std::vector<int>& orders = group.cyclic_orders();
  std::size_t r = orders.size();
  std::vector<std::vector<long>> relations;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<long> row(r, 0);
    row[i] = orders[i];
    relations.push_back(std::move(row));
  }
  for (const GroupElement& g : small_generating_set(group, m)) {
    std::vector<long> row(r, 0);
    for (std::size_t i = 0; i < r; ++i) row[i] = g.coords[i];
    relations.push_back(std::move(row));
  }

  std::vector<std::vector<long>> v;
  smith_normal_form(relations, v);

  std::vector<long> divisors(r, 0);
  for (std::size_t i = 0; i < r && i < relations.size(); ++i) divisors[i] = relations[i][i];

  std::vector<int> target_orders;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < r; ++i)
    if (divisors[i] != 1) {
      target_orders.push_back(static_cast<int>(divisors[i]));
      kept.push_back(i);
    }
  FiniteAbelianGroup target(target_orders, group.element_count_limit());

  std::vector<long> image(static_cast<std::size_t>(group.order()));
  for (long x = 0; x < group.order(); ++x) {
    GroupElement e = group.element(x);
    GroupElement y{std::vector<int>(kept.size(), 0)};
    for (std::size_t j = 0; j < kept.size(); ++j) {
      long acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc += static_cast<long>(e.coords[i]) * v[i][kept[j]];
      long d = divisors[kept[j]];
      y.coords[j] = static_cast<int>(((acc % d) + d) % d);
    }
    image[static_cast<std::size_t>(x)] = target.index_of(y);
  }

  // Exactness: kernel is precisely m, image hits everything, orders divide.
  if (group.order() % target.order() != 0 ||
      group.order() / target.order() != m.size())
    throw std::logic_error("quotient target has wrong order");
  Bitset hit(static_cast<std::size_t>(target.order()));
  for (long x = 0; x < group.order(); ++x) {
    bool in_kernel = image[static_cast<std::size_t>(x)] == 0;
    if (in_kernel != m.contains(x)) throw std::logic_error("quotient kernel mismatch");
    hit.set(static_cast<std::size_t>(image[static_cast<std::size_t>(x)]));
  }
  if (static_cast<long>(hit.count()) != target.order())
    throw std::logic_error("quotient map not surjective");

  return QuotientMap(group, m, target, std::move(image));
}

Subgroup cyclic_prime_power_separator(const FiniteAbelianGroup& group,
                                      const Subgroup& h, const GroupElement& g) {
  if (h.group() != group) throw std::invalid_argument("subgroup from a different group");
  long g_index = group.index_of(g);
  if (h.contains(g_index)) throw std::invalid_argument("element already lies in the subgroup");

  std::optional<Subgroup> best;
  for (Subgroup& k : enumerate_subgroups(group)) {
    if (k.contains(g_index)) continue;
    if (!h.member_bits().is_subset_of(k.member_bits())) continue;
    if (!best || k.size() > best->size()) best = std::move(k);
  }
  // H itself avoids g, so a candidate always exists.
  QuotientMap q = quotient(group, *best);
  const std::vector<int>& t = q.target().cyclic_orders();
  bool cyclic_prime_power = t.size() == 1 && factorize(t[0]).size() == 1;
  if (!cyclic_prime_power)
    throw std::logic_error("separator quotient is not cyclic of prime power order");
  return *best;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n <= 0) throw std::invalid_argument("factorize requires a positive integer");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int lambda_of(long n) {
  int sum = 0;
  for (auto [p, a] : factorize(n)) sum += a;
  return sum;
}

int tau_of(long n) {
  int sum = 0;
  for (auto [p, a] : factorize(n)) sum += a * static_cast<int>(p - 1);
  return sum;
}

}  // namespace covercraft
