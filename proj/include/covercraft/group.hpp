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
#include <string>
#include <string_view>
#include <vector>

#include "covercraft/bitset.hpp"

namespace covercraft {

inline constexpr long kDefaultElementLimit = 4096;

/// Subgroup lattices can outgrow the element count by many orders of
/// magnitude (elementary abelian 2-groups most of all); enumeration refuses
/// past this many subgroups instead of exhausting memory.
inline constexpr long kMaxEnumeratedSubgroups = 10'000;

/// Signals work that exceeded a budget or structural bound before reaching
/// a conclusion.
struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Element of a finite abelian group, stored as the tuple of residues in the
/// group's cyclic decomposition.
struct GroupElement {
  std::vector<int> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Direct product of cyclic groups C_{n1} x ... x C_{nr}, written additively:
/// the identity is the all-zero tuple. Elements are indexed mixed-radix,
/// index(e) = sum e_i * prod_{j<i} n_j, a bijection onto [0, order).
///
/// The decomposition is kept exactly as given; isomorphic groups with
/// different decompositions are distinct values.
class FiniteAbelianGroup {
 public:
  /// Trivial group (order 1, empty decomposition); quotients may produce it.
  FiniteAbelianGroup() : order_(1), limit_(kDefaultElementLimit) {}
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders,
                              long element_count_limit = kDefaultElementLimit);

  const std::vector<int>& cyclic_orders() const { return orders_; }
  long order() const { return order_; }
  long element_count_limit() const { return limit_; }

  long index_of(const GroupElement& e) const;
  GroupElement element(long index) const;
  GroupElement identity() const { return GroupElement{std::vector<int>(orders_.size(), 0)}; }

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  long add_index(long a, long b) const;
  long negate_index(long a) const;

  /// "C2*C2*C3" style spelling of the decomposition; "C1" for the trivial group.
  std::string spec_string() const;

  /// Groups compare by decomposition; the element limit is configuration.
  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }
  friend bool operator!=(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return !(a == b);
  }

 private:
  std::vector<int> orders_;
  long order_ = 1;
  long limit_ = kDefaultElementLimit;
};

/// Parses "C<k>*C<k>*..." or a comma list of integers >= 2; whitespace is
/// ignored. Throws std::invalid_argument on malformed input or when the order
/// exceeds the element limit.
FiniteAbelianGroup parse_group(std::string_view spec,
                               long element_count_limit = kDefaultElementLimit);

/// Subgroup stored as the full membership bitset over element indices.
/// Construction verifies closure, the identity, and Lagrange's divisibility.
class Subgroup {
 public:
  Subgroup(FiniteAbelianGroup group, Bitset member_bits,
           std::vector<GroupElement> generators = {});

  const FiniteAbelianGroup& group() const { return group_; }
  const Bitset& member_bits() const { return bits_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  long size() const { return static_cast<long>(bits_.count()); }
  long index_in_group() const { return group_.order() / size(); }
  bool contains(long element_index) const { return bits_.test(static_cast<std::size_t>(element_index)); }
  bool is_trivial() const { return size() == 1; }
  bool is_whole_group() const { return size() == group_.order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.bits_ == b.bits_;
  }

 private:
  FiniteAbelianGroup group_;
  Bitset bits_;
  std::vector<GroupElement> gens_;
};

/// Coset H + x, canonicalized so the stored representative is the member of
/// smallest element index. Two cosets are equal iff subgroup bits and
/// canonical representative agree.
class Coset {
 public:
  Coset(Subgroup subgroup, const GroupElement& shift);
  Coset(Subgroup subgroup, long shift_index);

  const Subgroup& subgroup() const { return subgroup_; }
  long representative_index() const { return rep_; }
  GroupElement representative() const { return subgroup_.group().element(rep_); }
  const Bitset& member_bits() const { return members_; }
  long size() const { return subgroup_.size(); }
  bool contains(long element_index) const { return members_.test(static_cast<std::size_t>(element_index)); }

  friend bool operator==(const Coset& a, const Coset& b) {
    return a.rep_ == b.rep_ && a.subgroup_ == b.subgroup_;
  }

 private:
  Subgroup subgroup_;
  long rep_;
  Bitset members_;
};

/// Smallest subgroup containing the generators, by additive closure.
Subgroup subgroup_generated(const FiniteAbelianGroup& group,
                            std::span<const GroupElement> generators);

/// All distinct subgroups, each once, sorted by (size, member bits).
/// Iterative closure: grow every known subgroup by one new generator until
/// nothing new appears.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& group);

/// Bitwise AND of the membership sets. The list must be nonempty and all in
/// the same group.
Subgroup intersect_subgroups(std::span<const Subgroup> subgroups);

/// Surjective homomorphism G -> G/M with kernel exactly M. The target carries
/// a cyclic decomposition computed by Smith normal form, so pushing cosets
/// and subgroups through the map lands in an ordinary FiniteAbelianGroup.
class QuotientMap {
 public:
  QuotientMap(FiniteAbelianGroup source, Subgroup kernel,
              FiniteAbelianGroup target, std::vector<long> image_index);

  const FiniteAbelianGroup& source() const { return source_; }
  const FiniteAbelianGroup& target() const { return target_; }
  const Subgroup& kernel() const { return kernel_; }
  const std::vector<long>& image_table() const { return image_; }

  long map_index(long source_index) const { return image_[static_cast<std::size_t>(source_index)]; }
  GroupElement map_element(const GroupElement& e) const;
  Subgroup map_subgroup(const Subgroup& h) const;
  Coset map_coset(const Coset& c) const;

 private:
  FiniteAbelianGroup source_;
  Subgroup kernel_;
  FiniteAbelianGroup target_;
  std::vector<long> image_;
};

QuotientMap quotient(const FiniteAbelianGroup& group, const Subgroup& m);

/// Given H <= G and g outside H, returns a subgroup K maximal with H <= K and
/// g not in K. The quotient G/K is checked to be cyclic of prime power order
/// before returning.
Subgroup cyclic_prime_power_separator(const FiniteAbelianGroup& group,
                                      const Subgroup& h, const GroupElement& g);

/// (prime, exponent) pairs of n in increasing prime order.
std::vector<std::pair<long, int>> factorize(long n);

/// Number of prime factors with multiplicity; lambda_of(1) = 0.
int lambda_of(long n);

/// Sum of alpha_i * (p_i - 1) over the factorization; tau_of(1) = 0.
int tau_of(long n);

}  // namespace covercraft
