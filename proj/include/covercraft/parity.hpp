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

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "covercraft/gf.hpp"

namespace covercraft {

/// The elementary abelian group (C_p)^n; elements are indexed base p.
struct GroupPn {
  int p;
  int n;

  long size() const {
    long s = 1;
    for (int i = 0; i < n; ++i) s *= p;
    return s;
  }
  long add(long a, long b) const;
  long negate(long a) const;

  friend bool operator==(const GroupPn&, const GroupPn&) = default;
};

GroupPn group_of(const VectorGF& v);

/// Element of the group algebra of (C_p)^n over the two-element field:
/// a parity coefficient per group element. Addition is XOR, multiplication
/// is group convolution, and the identity is the delta at the zero vector.
class F2GroupAlgebraElement {
 public:
  explicit F2GroupAlgebraElement(GroupPn group)
      : group_(group), coeff_(static_cast<std::size_t>(group.size())) {}

  static F2GroupAlgebraElement identity(GroupPn group);
  static F2GroupAlgebraElement delta(GroupPn group, long element_index);

  const GroupPn& group() const { return group_; }
  const Bitset& coeff_bits() const { return coeff_; }
  Bitset& coeff_bits() { return coeff_; }
  bool is_zero() const { return coeff_.none(); }

  F2GroupAlgebraElement operator+(const F2GroupAlgebraElement& o) const;

  friend bool operator==(const F2GroupAlgebraElement& a, const F2GroupAlgebraElement& b) {
    return a.group_ == b.group_ && a.coeff_ == b.coeff_;
  }

 private:
  GroupPn group_;
  Bitset coeff_;
};

/// Convolution product with parity coefficients.
F2GroupAlgebraElement ga_multiply(const F2GroupAlgebraElement& a,
                                  const F2GroupAlgebraElement& b);

/// The set of vectors reached by an odd number of zero-one combinations of
/// the (ordered, multiset) source list.
struct CubeSet {
  GroupPn group;
  Bitset parity_bits;
  std::vector<VectorGF> source;
};

inline constexpr int kCubeSetLimit = 24;

/// Exact parity bitset by a Gray-code walk over all 2^|X| subsets.
CubeSet cube_set(GroupPn group, std::span<const VectorGF> x);

/// True iff the product of (delta_x + 1) over xs vanishes in the
/// characteristic-2 group algebra; equivalently the hyperplanes orthogonal
/// to the xs cover GF(p)^n. Requires odd prime p.
bool cover_product_zero(GroupPn group, std::span<const VectorGF> xs);

/// Same coverage criterion through the subset-sum parity route: true iff
/// every vector is reached by an even number of zero-one combinations.
bool parity_cover_check(GroupPn group, std::span<const VectorGF> xs);

/// Direct membership oracle: do the hyperplanes orthogonal to xs cover the
/// whole space? Works for every prime p.
bool naive_hyperplane_coverage(GroupPn group, std::span<const VectorGF> xs);

/// First nowhere-zero x with Mx nowhere zero, scanning coordinates in
/// odometer order; absent when M is not AJT.
std::optional<VectorGF> ajt_brute(const MatrixGF& m);

/// AJT through shifted-cube parity: some translate of the standard basis
/// cube meets the row cube in an odd number of points. Odd prime fields.
bool ajt_parity(const MatrixGF& m);

/// n coordinate pairs {a_i, b_i}; the cube is their product set.
struct CombinatorialCube {
  std::vector<std::array<int, 2>> coords;
};

/// AJT through combinatorial cubes: some cube meets the row cube oddly.
/// The scan runs over every nonzero edge tuple and anchor, which is exactly
/// the basis-rescaling sweep.
bool ajt_cube(const MatrixGF& m);
std::optional<CombinatorialCube> ajt_cube_witness(const MatrixGF& m);

struct TwoFamilyCover {
  std::vector<Hyperplane> family1;
  std::vector<Hyperplane> family2;
  MatrixGF non_ajt_matrix;  // nonsingular, verified non-AJT by brute force
};

/// Two independent hyperplane families whose union covers GF(p)^n, together
/// with the nonsingular non-AJT matrix built from them; absent when no such
/// pair of families exists.
std::optional<TwoFamilyCover> two_family_cover_search(int n, int p);

}  // namespace covercraft
