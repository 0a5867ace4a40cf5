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
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "covercraft/bitset.hpp"
#include "covercraft/covering.hpp"

namespace covercraft {

/// GF(q) for a prime power q <= 256, backed by full add/mul tables. Elements
/// are integers in [0, q) encoding polynomial coefficients base p (so GF(4)
/// is 0, 1, 2 = x, 3 = x + 1). The reduction modulus is pinned per q, which
/// makes every file format bit-exact. Copies share the tables.
class FieldSpec {
 public:
  static FieldSpec make(int q);

  int q() const { return t_->q; }
  int characteristic() const { return t_->p; }
  int degree() const { return t_->degree; }
  bool prime_field() const { return t_->degree == 1; }
  /// Coefficients of the reduction modulus, constant term first.
  const std::vector<int>& modulus() const { return t_->modulus; }

  int add(int a, int b) const { return t_->add[idx(a, b)]; }
  int mul(int a, int b) const { return t_->mul[idx(a, b)]; }
  int neg(int a) const { return t_->neg[static_cast<std::size_t>(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.t_->q == b.t_->q;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

 private:
  struct Tables {
    int q, p, degree;
    std::vector<int> modulus;
    std::vector<int> add, mul, neg, inv;
  };
  explicit FieldSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(t_->q) +
           static_cast<std::size_t>(b);
  }
  std::shared_ptr<const Tables> t_;
};

inline FieldSpec field_make(int q) { return FieldSpec::make(q); }

struct VectorGF {
  FieldSpec field;
  std::vector<int> e;

  std::size_t size() const { return e.size(); }
  int operator[](std::size_t i) const { return e[i]; }

  friend bool operator==(const VectorGF& a, const VectorGF& b) {
    return a.field == b.field && a.e == b.e;
  }
};

VectorGF gf_vector(const FieldSpec& field, std::vector<int> entries);
VectorGF vec_add(const VectorGF& a, const VectorGF& b);
VectorGF vec_sub(const VectorGF& a, const VectorGF& b);
VectorGF vec_scale(int c, const VectorGF& a);
int scalar_product(const VectorGF& a, const VectorGF& b);
bool is_zero(const VectorGF& a);

/// Row-major dense matrix over GF(q).
class MatrixGF {
 public:
  MatrixGF(FieldSpec field, int rows, int cols, std::vector<int> entries);
  static MatrixGF identity(const FieldSpec& field, int n);
  static MatrixGF from_rows(std::span<const VectorGF> rows);

  const FieldSpec& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  VectorGF row(int r) const;
  VectorGF col(int c) const;
  VectorGF mul_vec(const VectorGF& x) const;  // column vector x, length cols
  MatrixGF mul(const MatrixGF& other) const;

  friend bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  FieldSpec field_;
  int rows_, cols_;
  std::vector<int> e_;
};

int rank(const MatrixGF& m);
std::optional<MatrixGF> inverse(const MatrixGF& m);

/// Text format: first line "q n m", then n rows of m integers in [0, q).
/// Non-prime field elements are polynomial-coefficient integers base p.
MatrixGF read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const MatrixGF& m);

/// x-perp; the normal is canonicalized so its first nonzero entry is 1.
class Hyperplane {
 public:
  explicit Hyperplane(const VectorGF& normal);

  const VectorGF& normal() const { return normal_; }
  int dimension_of_space() const { return static_cast<int>(normal_.size()); }
  bool contains(const VectorGF& v) const { return scalar_product(normal_, v) == 0; }

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.normal_ == b.normal_;
  }

 private:
  VectorGF normal_;
};

/// { v : (normal, v) = offset }; the corresponding hyperplane is normal-perp.
class AffineHyperplane {
 public:
  AffineHyperplane(const VectorGF& normal, int offset);

  const Hyperplane& hyperplane() const { return hyperplane_; }
  int offset() const { return offset_; }
  bool contains(const VectorGF& v) const {
    return scalar_product(hyperplane_.normal(), v) == offset_;
  }

  friend bool operator==(const AffineHyperplane& a, const AffineHyperplane& b) {
    return a.hyperplane_ == b.hyperplane_ && a.offset_ == b.offset_;
  }

 private:
  Hyperplane hyperplane_;
  int offset_;
};

bool nowhere_zero(const VectorGF& v);

/// Coefficients, all nonzero, expressing v over the multiset union of the
/// given bases (each matrix's rows are one basis; coefficients are returned
/// flattened in basis-then-row order). Exhaustive below 10^6 combinations,
/// meet-in-the-middle above.
std::optional<std::vector<int>> nowhere_zero_combination(std::span<const MatrixGF> bases,
                                                         const VectorGF& v);

/// Indices of a sub-multiset summing to v, or absent.
std::optional<std::vector<int>> zero_one_representable(std::span<const VectorGF> vectors,
                                                       const VectorGF& v);

struct HyperplaneCoverResult {
  SearchStatus status = SearchStatus::kComplete;
  bool attained = false;
  bool unattainable = false;
  int value = 0;
  std::vector<AffineHyperplane> witness;
  /// Every valid system of the minimal size, populated when collect_all.
  std::vector<std::vector<AffineHyperplane>> all_minimal;
  long long nodes_expanded = 0;

  bool conclusive() const { return status == SearchStatus::kComplete; }
};

/// h_q(n) (linear mode) or l_q(n) (affine mode): the minimal k for which k
/// (affine) hyperplanes cover the space irredundantly with the corresponding
/// hyperplanes intersecting trivially. Linear mode in dimension 1 has no
/// covering at all and comes back unattainable.
HyperplaneCoverResult min_hyperplane_cover(int n, int q, bool affine,
                                           const SearchBudget& budget = {},
                                           bool collect_all = false);

struct HyperplaneRatioReport {
  int k = 0;
  int codimension = 0;
  bool covers = false;
  bool irredundant = false;
  bool theorem_applies = false;  // q a non-prime prime power
  bool bound_holds = false;      // codim < (2/3) k
};

HyperplaneRatioReport hyperplane_ratio_report(std::span<const AffineHyperplane> system);

/// For an irredundant affine covering over a non-prime prime power q:
/// true iff codim of the intersection of the corresponding hyperplanes is
/// strictly below (2/3)k. Throws when the preconditions fail.
bool codim_ratio_check(std::span<const AffineHyperplane> system);

/// The solution space U = { x : M x = v } of a failed nowhere-zero instance,
/// covered by the coordinate-zero affine hyperplanes of a minimal blocking
/// index set.
struct AffineCoverInstance {
  MatrixGF m;                    // n x nk, columns are the basis vectors
  VectorGF target;               // v
  VectorGF particular_solution;  // one point of U, in GF(q)^(nk)
  MatrixGF null_basis;           // columns parameterize U; nk x dim
  int dim_u = 0;                 // n(k-1)
  std::vector<int> blocking_indices;
  bool covers = false;
  bool irredundant = false;
  std::optional<double> cover_ratio;  // |blocking| / dim U
  std::optional<double> k_ratio;      // k / (k-1)
};

/// Turns bases with an unreachable target into an irredundant affine
/// covering of the solution space. Absent when the precondition fails, i.e. the
/// target does have a nowhere-zero combination.
std::optional<AffineCoverInstance> bases_to_affine_cover(std::span<const MatrixGF> bases,
                                                         const VectorGF& v);

/// Element index of a vector in the mixed-radix (base q) point ordering.
long point_index(const VectorGF& v);
VectorGF point_at(const FieldSpec& field, int n, long index);

}  // namespace covercraft
