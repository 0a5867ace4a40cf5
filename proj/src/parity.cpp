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

#include "covercraft/parity.hpp"

#include <stdexcept>

namespace covercraft {

namespace {

void require_group(const GroupPn& g) {
  if (g.n < 1) throw std::invalid_argument("group dimension must be at least 1");
  auto factors = factorize(g.p);
  if (factors.size() != 1 || factors[0].second != 1)
    throw std::invalid_argument("group characteristic must be prime");
  if (g.size() > kDefaultElementLimit)
    throw std::invalid_argument("group order exceeds the element limit");
}

void require_odd_prime(const GroupPn& g) {
  require_group(g);
  if (g.p == 2)
    throw std::invalid_argument("parity criteria need an odd prime characteristic");
}

long vector_index(const GroupPn& g, const VectorGF& v) {
  if (v.field.q() != g.p || static_cast<int>(v.size()) != g.n)
    throw std::invalid_argument("vector does not live in the group's space");
  return point_index(v);
}

}  // namespace

long GroupPn::add(long a, long b) const {
  long index = 0;
  long radix = 1;
  for (int i = 0; i < n; ++i) {
    index += ((a + b) % p) * radix;
    a /= p;
    b /= p;
    radix *= p;
  }
  return index;
}

long GroupPn::negate(long a) const {
  long index = 0;
  long radix = 1;
  for (int i = 0; i < n; ++i) {
    long c = a % p;
    index += (c == 0 ? 0 : p - c) * radix;
    a /= p;
    radix *= p;
  }
  return index;
}

GroupPn group_of(const VectorGF& v) {
  GroupPn g{v.field.q(), static_cast<int>(v.size())};
  require_group(g);
  return g;
}

F2GroupAlgebraElement F2GroupAlgebraElement::identity(GroupPn group) {
  return delta(group, 0);
}

F2GroupAlgebraElement F2GroupAlgebraElement::delta(GroupPn group, long element_index) {
  F2GroupAlgebraElement out(group);
  out.coeff_.set(static_cast<std::size_t>(element_index));
  return out;
}

F2GroupAlgebraElement F2GroupAlgebraElement::operator+(const F2GroupAlgebraElement& o) const {
  if (group_ != o.group_) throw std::invalid_argument("group mismatch");
  F2GroupAlgebraElement out = *this;
  out.coeff_ ^= o.coeff_;
  return out;
}

F2GroupAlgebraElement ga_multiply(const F2GroupAlgebraElement& a,
                                  const F2GroupAlgebraElement& b) {
  if (a.group() != b.group()) throw std::invalid_argument("group mismatch");
  const GroupPn& g = a.group();
  F2GroupAlgebraElement out(g);
  // Convolution in characteristic two: XOR the translate of b by every
  // support point of a.
  a.coeff_bits().for_each_set([&](std::size_t u) {
    Bitset shifted(static_cast<std::size_t>(g.size()));
    b.coeff_bits().for_each_set([&](std::size_t v) {
      shifted.set(static_cast<std::size_t>(g.add(static_cast<long>(u), static_cast<long>(v))));
    });
    out.coeff_bits() ^= shifted;
  });
  return out;
}

CubeSet cube_set(GroupPn group, std::span<const VectorGF> x) {
  require_group(group);
  if (x.size() > kCubeSetLimit)
    throw std::invalid_argument("cube_set source exceeds the enumeration limit");
  std::vector<long> indices;
  indices.reserve(x.size());
  for (const VectorGF& v : x) indices.push_back(vector_index(group, v));

  CubeSet out{group, Bitset(static_cast<std::size_t>(group.size())),
              std::vector<VectorGF>(x.begin(), x.end())};

  // Gray-code walk: one group addition (or subtraction) per subset.
  long running = 0;
  out.parity_bits.flip(0);  // empty subset
  unsigned long total = 1UL << x.size();
  unsigned long prev_gray = 0;
  for (unsigned long s = 1; s < total; ++s) {
    unsigned long gray = s ^ (s >> 1);
    unsigned long changed = gray ^ prev_gray;
    int j = __builtin_ctzl(changed);
    bool entered = gray & changed;
    long delta = entered ? indices[static_cast<std::size_t>(j)]
                         : group.negate(indices[static_cast<std::size_t>(j)]);
    running = group.add(running, delta);
    out.parity_bits.flip(static_cast<std::size_t>(running));
    prev_gray = gray;
  }
  return out;
}

bool cover_product_zero(GroupPn group, std::span<const VectorGF> xs) {
  require_odd_prime(group);
  F2GroupAlgebraElement acc = F2GroupAlgebraElement::identity(group);
  for (const VectorGF& x : xs) {
    F2GroupAlgebraElement factor =
        F2GroupAlgebraElement::delta(group, vector_index(group, x)) +
        F2GroupAlgebraElement::identity(group);
    acc = ga_multiply(acc, factor);
    if (acc.is_zero()) break;
  }
  return acc.is_zero();
}

bool parity_cover_check(GroupPn group, std::span<const VectorGF> xs) {
  require_odd_prime(group);
  return cube_set(group, xs).parity_bits.none();
}

bool naive_hyperplane_coverage(GroupPn group, std::span<const VectorGF> xs) {
  require_group(group);
  FieldSpec field = field_make(group.p);
  std::vector<long> indices;
  for (const VectorGF& x : xs) indices.push_back(vector_index(group, x));
  for (long v = 0; v < group.size(); ++v) {
    VectorGF point = point_at(field, group.n, v);
    bool covered = false;
    for (const VectorGF& x : xs)
      if (scalar_product(x, point) == 0) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

std::optional<VectorGF> ajt_brute(const MatrixGF& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("AJT needs a square matrix");
  if (m.rows() < 1) throw std::invalid_argument("AJT needs a positive dimension");
  const FieldSpec& f = m.field();
  int n = m.rows();
  int q = f.q();

  std::vector<int> c(static_cast<std::size_t>(n), 1);
  while (true) {
    VectorGF x{f, c};
    if (nowhere_zero(m.mul_vec(x))) return x;
    int i = n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == q - 1) {
      c[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) return std::nullopt;
    ++c[static_cast<std::size_t>(i)];
  }
}

bool ajt_parity(const MatrixGF& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("AJT needs a square matrix");
  if (m.rows() < 1) throw std::invalid_argument("AJT needs a positive dimension");
  GroupPn group{m.field().q(), m.rows()};
  require_odd_prime(group);
  if (m.rows() > kCubeSetLimit) throw std::invalid_argument("dimension exceeds the cube limit");

  std::vector<VectorGF> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  CubeSet cx = cube_set(group, rows);

  std::vector<VectorGF> basis;
  for (int r = 0; r < m.rows(); ++r) basis.push_back(MatrixGF::identity(m.field(), m.rows()).row(r));
  CubeSet cb = cube_set(group, basis);
  std::vector<std::size_t> cb_points = cb.parity_bits.to_indices();

  for (long v = 0; v < group.size(); ++v) {
    int count = 0;
    for (std::size_t b : cb_points)
      if (cx.parity_bits.test(static_cast<std::size_t>(group.add(static_cast<long>(b), v))))
        ++count;
    if (count % 2 == 1) return true;
  }
  return false;
}

std::optional<CombinatorialCube> ajt_cube_witness(const MatrixGF& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("AJT needs a square matrix");
  if (m.rows() < 1) throw std::invalid_argument("AJT needs a positive dimension");
  GroupPn group{m.field().q(), m.rows()};
  require_odd_prime(group);
  if (m.rows() > kCubeSetLimit) throw std::invalid_argument("dimension exceeds the cube limit");

  const FieldSpec& f = m.field();
  int n = m.rows();
  int q = f.q();
  std::vector<VectorGF> rows;
  for (int r = 0; r < n; ++r) rows.push_back(m.row(r));
  CubeSet cx = cube_set(group, rows);

  // Every combinatorial cube is {v_i, v_i + c_i} for a nonzero edge tuple c
  // and anchor v; sweeping c is the row-rescaling sweep of the basis cube.
  std::vector<int> edges(static_cast<std::size_t>(n), 1);
  while (true) {
    for (long anchor = 0; anchor < group.size(); ++anchor) {
      VectorGF a = point_at(f, n, anchor);
      int count = 0;
      for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        VectorGF corner = a;
        for (int i = 0; i < n; ++i)
          if (mask & (1UL << i))
            corner.e[static_cast<std::size_t>(i)] =
                f.add(corner.e[static_cast<std::size_t>(i)], edges[static_cast<std::size_t>(i)]);
        if (cx.parity_bits.test(static_cast<std::size_t>(point_index(corner)))) ++count;
      }
      if (count % 2 == 1) {
        CombinatorialCube cube;
        for (int i = 0; i < n; ++i)
          cube.coords.push_back(std::array<int, 2>{
              a.e[static_cast<std::size_t>(i)],
              f.add(a.e[static_cast<std::size_t>(i)], edges[static_cast<std::size_t>(i)])});
        return cube;
      }
    }
    int i = n - 1;
    while (i >= 0 && edges[static_cast<std::size_t>(i)] == q - 1) {
      edges[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) return std::nullopt;
    ++edges[static_cast<std::size_t>(i)];
  }
}

bool ajt_cube(const MatrixGF& m) { return ajt_cube_witness(m).has_value(); }

std::optional<TwoFamilyCover> two_family_cover_search(int n, int p) {
  GroupPn group{p, n};
  require_group(group);
  FieldSpec field = field_make(p);

  // Canonical hyperplane normals with their member bitsets.
  std::vector<VectorGF> normals;
  std::vector<Bitset> members;
  for (long idx = 1; idx < group.size(); ++idx) {
    VectorGF v = point_at(field, n, idx);
    int first = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v.e[i] != 0) {
        first = v.e[i];
        break;
      }
    if (first != 1) continue;
    Bitset bits(static_cast<std::size_t>(group.size()));
    for (long w = 0; w < group.size(); ++w)
      if (scalar_product(v, point_at(field, n, w)) == 0) bits.set(static_cast<std::size_t>(w));
    normals.push_back(std::move(v));
    members.push_back(std::move(bits));
  }

  // Independent families of maximal size n: any smaller covering pair
  // extends to one without losing coverage.
  std::vector<std::vector<int>> families;
  std::vector<int> pick;
  auto build = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == n) {
      families.push_back(pick);
      return;
    }
    for (int i = start; i < static_cast<int>(normals.size()); ++i) {
      pick.push_back(i);
      std::vector<VectorGF> chosen;
      for (int j : pick) chosen.push_back(normals[static_cast<std::size_t>(j)]);
      if (rank(MatrixGF::from_rows(chosen)) == static_cast<int>(pick.size()))
        self(self, i + 1);
      pick.pop_back();
    }
  };
  build(build, 0);

  std::vector<Bitset> family_union;
  for (const std::vector<int>& fam : families) {
    Bitset u(static_cast<std::size_t>(group.size()));
    for (int i : fam) u |= members[static_cast<std::size_t>(i)];
    family_union.push_back(std::move(u));
  }

  for (std::size_t a = 0; a < families.size(); ++a)
    for (std::size_t b = a; b < families.size(); ++b) {
      Bitset u = family_union[a];
      u |= family_union[b];
      if (u.count() != static_cast<std::size_t>(group.size())) continue;

      // Change coordinates so family a becomes the coordinate hyperplanes;
      // family b's normals become the rows of the non-AJT matrix.
      std::vector<VectorGF> ua, wb;
      for (int i : families[a]) ua.push_back(normals[static_cast<std::size_t>(i)]);
      for (int i : families[b]) wb.push_back(normals[static_cast<std::size_t>(i)]);
      MatrixGF u_mat = MatrixGF::from_rows(ua);
      MatrixGF w_mat = MatrixGF::from_rows(wb);
      auto u_inv = inverse(u_mat);
      if (!u_inv) throw std::logic_error("independent family matrix must be invertible");
      MatrixGF m = w_mat.mul(*u_inv);
      if (rank(m) != n) throw std::logic_error("derived matrix must be nonsingular");
      if (ajt_brute(m).has_value())
        throw std::logic_error("derived matrix admits a nowhere-zero image");

      TwoFamilyCover out{{}, {}, m};
      for (const VectorGF& v : ua) out.family1.emplace_back(v);
      for (const VectorGF& v : wb) out.family2.emplace_back(v);
      return out;
    }
  return std::nullopt;
}

}  // namespace covercraft
