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

#include "covercraft/gf.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace covercraft {

namespace {

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<int>;

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

/// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  int deg_m = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) > deg_m) {
    int lead = a.back();
    if (lead != 0) {
      int shift = static_cast<int>(a.size()) - 1 - deg_m;
      for (int i = 0; i <= deg_m; ++i) {
        int& c = a[static_cast<std::size_t>(i + shift)];
        c = ((c - lead * m[static_cast<std::size_t>(i)]) % p + p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

Poly decode_poly(int e, int p, int degree) {
  Poly out(static_cast<std::size_t>(degree), 0);
  for (int i = 0; i < degree; ++i) {
    out[static_cast<std::size_t>(i)] = e % p;
    e /= p;
  }
  return out;
}

int encode_poly(const Poly& a, int p, int degree) {
  int e = 0;
  for (int i = degree - 1; i >= 0; --i)
    e = e * p + (i < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(i)] : 0);
  return e;
}

bool poly_is_irreducible(const Poly& m, int p) {
  int deg = static_cast<int>(m.size()) - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      Poly divisor = decode_poly(static_cast<int>(code), p, d);
      divisor.push_back(1);
      Poly r = poly_mod(m, divisor, p);
      if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
    }
  }
  return true;
}

/// Pinned moduli for the fields the file formats care about; everything else
/// takes the irreducible whose non-leading coefficients have the smallest
/// base-p integer encoding.
Poly modulus_for(int p, int degree, int q) {
  switch (q) {
    case 4: return {1, 1, 1};         // x^2 + x + 1
    case 8: return {1, 1, 0, 1};      // x^3 + x + 1
    case 9: return {1, 0, 1};         // x^2 + 1
    case 16: return {1, 1, 0, 0, 1};  // x^4 + x + 1
    case 25: return {2, 1, 1};        // x^2 + x + 2
    default: break;
  }
  long count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (long code = 1; code < count; ++code) {
    Poly m = decode_poly(static_cast<int>(code), p, degree);
    m.push_back(1);
    if (poly_is_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible modulus found");
}

}  // namespace

FieldSpec FieldSpec::make(int q) {
  static std::mutex cache_mutex;
  static std::map<int, std::shared_ptr<const Tables>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(q);
    if (it != cache.end()) return FieldSpec(it->second);
  }

  if (q < 2 || q > 256) throw std::invalid_argument("field order must be in [2, 256]");
  auto factors = factorize(q);
  if (factors.size() != 1) throw std::invalid_argument("field order must be a prime power");
  int p = static_cast<int>(factors[0].first);
  int degree = factors[0].second;

  auto t = std::make_shared<Tables>();
  t->q = q;
  t->p = p;
  t->degree = degree;
  t->modulus = degree == 1 ? Poly{0, 1} : modulus_for(p, degree, q);
  t->add.resize(static_cast<std::size_t>(q) * q);
  t->mul.resize(static_cast<std::size_t>(q) * q);
  t->neg.resize(static_cast<std::size_t>(q));
  t->inv.assign(static_cast<std::size_t>(q), 0);

  for (int a = 0; a < q; ++a) {
    Poly pa = decode_poly(a, p, degree);
    Poly na(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
    t->neg[static_cast<std::size_t>(a)] = encode_poly(na, p, degree);
    for (int b = 0; b < q; ++b) {
      Poly pb = decode_poly(b, p, degree);
      Poly sum(pa.size());
      for (std::size_t i = 0; i < pa.size(); ++i) sum[i] = (pa[i] + pb[i]) % p;
      t->add[static_cast<std::size_t>(a) * q + b] = encode_poly(sum, p, degree);
      Poly prod = poly_mod(poly_mul(pa, pb, p), t->modulus, p);
      t->mul[static_cast<std::size_t>(a) * q + b] = encode_poly(prod, p, degree);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (t->mul[static_cast<std::size_t>(a) * q + b] == 1)
        t->inv[static_cast<std::size_t>(a)] = b;

  for (int a = 1; a < q; ++a)
    if (t->inv[static_cast<std::size_t>(a)] == 0)
      throw std::logic_error("field table has a non-invertible unit");
  // Exhaustive ring axioms for the small fields.
  if (q <= 16) {
    auto add = [&](int x, int y) { return t->add[static_cast<std::size_t>(x) * q + y]; };
    auto mul = [&](int x, int y) { return t->mul[static_cast<std::size_t>(x) * q + y]; };
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::logic_error("field multiplication not associative");
          if (add(add(a, b), c) != add(a, add(b, c)))
            throw std::logic_error("field addition not associative");
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            throw std::logic_error("field distributivity fails");
        }
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = cache.emplace(q, std::move(t));
  return FieldSpec(it->second);
}

int FieldSpec::inv(int a) const {
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  return t_->inv[static_cast<std::size_t>(a)];
}

VectorGF gf_vector(const FieldSpec& field, std::vector<int> entries) {
  for (int x : entries)
    if (x < 0 || x >= field.q()) throw std::invalid_argument("vector entry out of field range");
  return VectorGF{field, std::move(entries)};
}

VectorGF vec_add(const VectorGF& a, const VectorGF& b) {
  if (a.field != b.field || a.size() != b.size())
    throw std::invalid_argument("vector shape mismatch");
  VectorGF out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.e[i] = a.field.add(a.e[i], b.e[i]);
  return out;
}

VectorGF vec_sub(const VectorGF& a, const VectorGF& b) {
  if (a.field != b.field || a.size() != b.size())
    throw std::invalid_argument("vector shape mismatch");
  VectorGF out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.e[i] = a.field.sub(a.e[i], b.e[i]);
  return out;
}

VectorGF vec_scale(int c, const VectorGF& a) {
  VectorGF out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.e[i] = a.field.mul(c, a.e[i]);
  return out;
}

int scalar_product(const VectorGF& a, const VectorGF& b) {
  if (a.field != b.field || a.size() != b.size())
    throw std::invalid_argument("vector shape mismatch");
  int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc = a.field.add(acc, a.field.mul(a.e[i], b.e[i]));
  return acc;
}

bool is_zero(const VectorGF& a) {
  return std::all_of(a.e.begin(), a.e.end(), [](int x) { return x == 0; });
}

MatrixGF::MatrixGF(FieldSpec field, int rows, int cols, std::vector<int> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows_ < 0 || cols_ < 0 ||
      e_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
    throw std::invalid_argument("matrix shape mismatch");
  for (int x : e_)
    if (x < 0 || x >= field_.q()) throw std::invalid_argument("matrix entry out of field range");
}

MatrixGF MatrixGF::identity(const FieldSpec& field, int n) {
  std::vector<int> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
  return MatrixGF(field, n, n, std::move(e));
}

MatrixGF MatrixGF::from_rows(std::span<const VectorGF> rows) {
  if (rows.empty()) throw std::invalid_argument("cannot build a matrix from no rows");
  std::vector<int> e;
  for (const VectorGF& r : rows) {
    if (r.field != rows[0].field || r.size() != rows[0].size())
      throw std::invalid_argument("row shape mismatch");
    e.insert(e.end(), r.e.begin(), r.e.end());
  }
  return MatrixGF(rows[0].field, static_cast<int>(rows.size()),
                  static_cast<int>(rows[0].size()), std::move(e));
}

VectorGF MatrixGF::row(int r) const {
  std::vector<int> e(e_.begin() + static_cast<long>(r) * cols_,
                     e_.begin() + static_cast<long>(r + 1) * cols_);
  return VectorGF{field_, std::move(e)};
}

VectorGF MatrixGF::col(int c) const {
  std::vector<int> e(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) e[static_cast<std::size_t>(r)] = at(r, c);
  return VectorGF{field_, std::move(e)};
}

VectorGF MatrixGF::mul_vec(const VectorGF& x) const {
  if (x.field != field_ || static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("vector length does not match matrix");
  std::vector<int> out(static_cast<std::size_t>(rows_), 0);
  for (int r = 0; r < rows_; ++r) {
    int acc = 0;
    for (int c = 0; c < cols_; ++c)
      acc = field_.add(acc, field_.mul(at(r, c), x.e[static_cast<std::size_t>(c)]));
    out[static_cast<std::size_t>(r)] = acc;
  }
  return VectorGF{field_, std::move(out)};
}

MatrixGF MatrixGF::mul(const MatrixGF& other) const {
  if (field_ != other.field_ || cols_ != other.rows_)
    throw std::invalid_argument("matrix shapes incompatible");
  std::vector<int> out(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(other.cols_), 0);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      int a = at(r, k);
      if (a == 0) continue;
      for (int c = 0; c < other.cols_; ++c) {
        std::size_t pos = static_cast<std::size_t>(r) * other.cols_ + c;
        out[pos] = field_.add(out[pos], field_.mul(a, other.at(k, c)));
      }
    }
  return MatrixGF(field_, rows_, other.cols_, std::move(out));
}

namespace {

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> echelon(const FieldSpec& f, std::vector<std::vector<int>>& a) {
  std::vector<int> pivots;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pivot)]);
    int scale = f.inv(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    for (int j = c; j < cols; ++j)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
          f.mul(scale, a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      int factor = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (factor == 0) continue;
      for (int j = c; j < cols; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            f.sub(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                  f.mul(factor, a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<int>> to_rows(const MatrixGF& m) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(m.rows()),
                                  std::vector<int>(static_cast<std::size_t>(m.cols())));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
  return a;
}

}  // namespace

int rank(const MatrixGF& m) {
  std::vector<std::vector<int>> a = to_rows(m);
  return static_cast<int>(echelon(m.field(), a).size());
}

std::optional<MatrixGF> inverse(const MatrixGF& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse needs a square matrix");
  int n = m.rows();
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(2 * n), 0));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m.at(r, c);
    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + r)] = 1;
  }
  std::vector<int> pivots = echelon(m.field(), a);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  for (int p : pivots)
    if (p >= n) return std::nullopt;
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      e.push_back(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + c)]);
  return MatrixGF(m.field(), n, n, std::move(e));
}

MatrixGF read_matrix(std::istream& in) {
  int q, n, m;
  if (!(in >> q >> n >> m)) throw std::invalid_argument("matrix header must be 'q n m'");
  FieldSpec field = FieldSpec::make(q);
  std::vector<int> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int& x : e)
    if (!(in >> x)) throw std::invalid_argument("matrix body is short");
  return MatrixGF(field, n, m, std::move(e));
}

void write_matrix(std::ostream& out, const MatrixGF& m) {
  out << m.field().q() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
}

Hyperplane::Hyperplane(const VectorGF& normal) : normal_(normal) {
  if (is_zero(normal)) throw std::invalid_argument("hyperplane normal must be nonzero");
  for (std::size_t i = 0; i < normal_.size(); ++i)
    if (normal_.e[i] != 0) {
      normal_ = vec_scale(normal_.field.inv(normal_.e[i]), normal_);
      break;
    }
}

AffineHyperplane::AffineHyperplane(const VectorGF& normal, int offset)
    : hyperplane_(normal), offset_(0) {
  if (offset < 0 || offset >= normal.field.q())
    throw std::invalid_argument("offset out of field range");
  // Rescaling the normal rescales the offset with it.
  for (std::size_t i = 0; i < normal.size(); ++i)
    if (normal.e[i] != 0) {
      offset_ = normal.field.mul(normal.field.inv(normal.e[i]), offset);
      break;
    }
}

bool nowhere_zero(const VectorGF& v) {
  return std::all_of(v.e.begin(), v.e.end(), [](int x) { return x != 0; });
}

long point_index(const VectorGF& v) {
  long index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * v.field.q() + v.e[i];
  return index;
}

VectorGF point_at(const FieldSpec& field, int n, long index) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    e[static_cast<std::size_t>(i)] = static_cast<int>(index % field.q());
    index /= field.q();
  }
  return VectorGF{field, std::move(e)};
}

namespace {

struct CombinationProblem {
  FieldSpec field;
  int n;
  std::vector<VectorGF> positions;
};

CombinationProblem flatten_bases(std::span<const MatrixGF> bases) {
  if (bases.empty()) throw std::invalid_argument("at least one basis required");
  FieldSpec field = bases[0].field();
  int n = bases[0].rows();
  CombinationProblem out{field, n, {}};
  for (const MatrixGF& b : bases) {
    if (b.field() != field) throw std::invalid_argument("bases over different fields");
    if (b.rows() != n || b.cols() != n) throw std::invalid_argument("bases must be square");
    if (rank(b) != n) throw std::invalid_argument("a listed matrix is singular");
    for (int r = 0; r < n; ++r) out.positions.push_back(b.row(r));
  }
  return out;
}

/// Coefficient tuples in [lo, q)^m, odometer order with the last position
/// moving fastest; fn returning false stops the walk.
template <typename Fn>
void odometer(int q, int lo, int m, Fn&& fn) {
  std::vector<int> c(static_cast<std::size_t>(m), lo);
  if (m == 0) {
    fn(c);
    return;
  }
  while (true) {
    if (!fn(c)) return;
    int i = m - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == q - 1) {
      c[static_cast<std::size_t>(i)] = lo;
      --i;
    }
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
  }
}

}  // namespace

std::optional<std::vector<int>> nowhere_zero_combination(std::span<const MatrixGF> bases,
                                                         const VectorGF& v) {
  CombinationProblem prob = flatten_bases(bases);
  if (v.field != prob.field || static_cast<int>(v.size()) != prob.n)
    throw std::invalid_argument("target vector shape mismatch");
  int q = prob.field.q();
  int m = static_cast<int>(prob.positions.size());

  double total = 1;
  for (int i = 0; i < m; ++i) total *= q - 1;

  std::optional<std::vector<int>> result;
  if (total <= 1e6) {
    odometer(q, 1, m, [&](const std::vector<int>& c) {
      VectorGF sum = gf_vector(prob.field, std::vector<int>(static_cast<std::size_t>(prob.n), 0));
      for (int i = 0; i < m; ++i)
        sum = vec_add(sum, vec_scale(c[static_cast<std::size_t>(i)],
                                     prob.positions[static_cast<std::size_t>(i)]));
      if (sum == v) {
        result = c;
        return false;
      }
      return true;
    });
    return result;
  }

  // Meet in the middle over the two halves of the coefficient positions.
  int half = m / 2;
  std::map<std::vector<int>, std::vector<int>> right;  // sum entries -> first coefficients
  odometer(q, 1, m - half, [&](const std::vector<int>& c) {
    VectorGF sum = gf_vector(prob.field, std::vector<int>(static_cast<std::size_t>(prob.n), 0));
    for (int i = 0; i < m - half; ++i)
      sum = vec_add(sum, vec_scale(c[static_cast<std::size_t>(i)],
                                   prob.positions[static_cast<std::size_t>(half + i)]));
    right.emplace(sum.e, c);
    return true;
  });
  odometer(q, 1, half, [&](const std::vector<int>& c) {
    VectorGF sum = gf_vector(prob.field, std::vector<int>(static_cast<std::size_t>(prob.n), 0));
    for (int i = 0; i < half; ++i)
      sum = vec_add(sum, vec_scale(c[static_cast<std::size_t>(i)],
                                   prob.positions[static_cast<std::size_t>(i)]));
    auto it = right.find(vec_sub(v, sum).e);
    if (it != right.end()) {
      std::vector<int> full = c;
      full.insert(full.end(), it->second.begin(), it->second.end());
      result = std::move(full);
      return false;
    }
    return true;
  });
  return result;
}

std::optional<std::vector<int>> zero_one_representable(std::span<const VectorGF> vectors,
                                                       const VectorGF& v) {
  for (const VectorGF& x : vectors)
    if (x.field != v.field || x.size() != v.size())
      throw std::invalid_argument("vector shape mismatch");
  int m = static_cast<int>(vectors.size());

  auto subset_of_mask = [&](unsigned long mask, int offset) {
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
      if (mask & (1UL << i)) out.push_back(offset + i);
    return out;
  };

  if (m <= 20) {
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
      VectorGF sum = gf_vector(v.field, std::vector<int>(v.size(), 0));
      for (int i = 0; i < m; ++i)
        if (mask & (1UL << i)) sum = vec_add(sum, vectors[static_cast<std::size_t>(i)]);
      if (sum == v) return subset_of_mask(mask, 0);
    }
    return std::nullopt;
  }

  int half = m / 2;
  std::map<std::vector<int>, unsigned long> right;
  for (unsigned long mask = 0; mask < (1UL << (m - half)); ++mask) {
    VectorGF sum = gf_vector(v.field, std::vector<int>(v.size(), 0));
    for (int i = 0; i < m - half; ++i)
      if (mask & (1UL << i)) sum = vec_add(sum, vectors[static_cast<std::size_t>(half + i)]);
    right.emplace(sum.e, mask);
  }
  for (unsigned long mask = 0; mask < (1UL << half); ++mask) {
    VectorGF sum = gf_vector(v.field, std::vector<int>(v.size(), 0));
    for (int i = 0; i < half; ++i)
      if (mask & (1UL << i)) sum = vec_add(sum, vectors[static_cast<std::size_t>(i)]);
    auto it = right.find(vec_sub(v, sum).e);
    if (it != right.end()) {
      std::vector<int> out = subset_of_mask(mask, 0);
      std::vector<int> tail = subset_of_mask(it->second, half);
      out.insert(out.end(), tail.begin(), tail.end());
      return out;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<VectorGF> canonical_normals(const FieldSpec& field, int n) {
  std::vector<VectorGF> out;
  long points = 1;
  for (int i = 0; i < n; ++i) points *= field.q();
  for (long idx = 1; idx < points; ++idx) {
    VectorGF v = point_at(field, n, idx);
    int first = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v.e[i] != 0) {
        first = v.e[i];
        break;
      }
    if (first == 1) out.push_back(std::move(v));
  }
  return out;
}

struct PlaneCandidate {
  AffineHyperplane plane;
  Bitset members;
};

}  // namespace

HyperplaneCoverResult min_hyperplane_cover(int n, int q, bool affine,
                                           const SearchBudget& budget, bool collect_all) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  FieldSpec field = FieldSpec::make(q);
  long points = 1;
  for (int i = 0; i < n; ++i) {
    if (points > kDefaultElementLimit / q)
      throw std::invalid_argument("point count exceeds the element limit");
    points *= q;
  }

  std::vector<PlaneCandidate> cands;
  for (const VectorGF& normal : canonical_normals(field, n)) {
    for (int c = 0; c < (affine ? q : 1); ++c) {
      AffineHyperplane plane(normal, c);
      Bitset members(static_cast<std::size_t>(points));
      for (long idx = 0; idx < points; ++idx)
        if (plane.contains(point_at(field, n, idx))) members.set(static_cast<std::size_t>(idx));
      cands.push_back(PlaneCandidate{std::move(plane), std::move(members)});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const PlaneCandidate& a, const PlaneCandidate& b) {
    return a.members < b.members;
  });

  std::vector<std::vector<int>> at(static_cast<std::size_t>(points));
  for (int i = 0; i < static_cast<int>(cands.size()); ++i)
    cands[static_cast<std::size_t>(i)].members.for_each_set(
        [&](std::size_t e) { at[e].push_back(i); });
  long plane_size = points / q;

  Bitset target(static_cast<std::size_t>(points), true);

  HyperplaneCoverResult result;
  long long nodes = 0;
  bool budget_hit = false;

  auto valid_system = [&](const std::vector<int>& ids) {
    for (int i : ids) {
      bool has_private = false;
      cands[static_cast<std::size_t>(i)].members.for_each_set([&](std::size_t e) {
        if (has_private) return;
        bool elsewhere = false;
        for (int j : ids)
          if (j != i && cands[static_cast<std::size_t>(j)].members.test(e)) elsewhere = true;
        if (!elsewhere) has_private = true;
      });
      if (!has_private) return false;
    }
    std::vector<VectorGF> normals;
    for (int i : ids)
      normals.push_back(cands[static_cast<std::size_t>(i)].plane.hyperplane().normal());
    return rank(MatrixGF::from_rows(normals)) == n;
  };

  std::vector<int> chosen;
  std::vector<char> banned(cands.size(), 0);
  auto dfs = [&](auto&& self, Bitset& covered, int k, bool collecting) -> bool {
    if (++nodes > budget.node_limit) {
      budget_hit = true;
      return false;
    }
    std::size_t e = target.first_not_covered_by(covered);
    if (e == Bitset::npos) {
      if (static_cast<int>(chosen.size()) < k) return false;
      if (!valid_system(chosen)) return false;
      std::vector<AffineHyperplane> system;
      for (int i : chosen) system.push_back(cands[static_cast<std::size_t>(i)].plane);
      if (collecting) {
        result.all_minimal.push_back(std::move(system));
        return false;  // keep going: collect every system of this size
      }
      result.witness = std::move(system);
      return true;
    }
    int remaining = k - static_cast<int>(chosen.size());
    if (remaining == 0) return false;
    std::size_t uncovered = 0;
    target.for_each_set([&](std::size_t x) {
      if (!covered.test(x)) ++uncovered;
    });
    if (uncovered > static_cast<std::size_t>(remaining) * static_cast<std::size_t>(plane_size))
      return false;

    std::vector<int> banned_here;
    bool found = false;
    for (int c : at[e]) {
      if (banned[static_cast<std::size_t>(c)]) continue;
      Bitset saved = covered;
      covered |= cands[static_cast<std::size_t>(c)].members;
      chosen.push_back(c);
      found = self(self, covered, k, collecting);
      chosen.pop_back();
      covered = saved;
      if (found || budget_hit) break;
      banned[static_cast<std::size_t>(c)] = 1;
      banned_here.push_back(c);
    }
    for (int c : banned_here) banned[static_cast<std::size_t>(c)] = 0;
    return found;
  };

  int cap = static_cast<int>(cands.size());
  for (int k = 1; k <= cap; ++k) {
    Bitset covered(static_cast<std::size_t>(points));
    chosen.clear();
    std::fill(banned.begin(), banned.end(), 0);
    bool found = dfs(dfs, covered, k, /*collecting=*/false);
    if (budget_hit) {
      result.status = SearchStatus::kNodeLimit;
      result.value = k;
      result.nodes_expanded = nodes;
      return result;
    }
    if (found) {
      result.attained = true;
      result.value = k;
      if (result.value <= n)
        throw std::logic_error("hyperplane cover search found a system of size <= n");
      if (collect_all) {
        Bitset fresh(static_cast<std::size_t>(points));
        chosen.clear();
        std::fill(banned.begin(), banned.end(), 0);
        dfs(dfs, fresh, k, /*collecting=*/true);
        if (budget_hit) {
          // a truncated enumeration must not pass for the full one
          result.status = SearchStatus::kNodeLimit;
          result.all_minimal.clear();
        }
      }
      result.nodes_expanded = nodes;
      return result;
    }
  }
  result.unattainable = true;
  result.nodes_expanded = nodes;
  return result;
}

HyperplaneRatioReport hyperplane_ratio_report(std::span<const AffineHyperplane> system) {
  if (system.empty()) throw std::invalid_argument("empty hyperplane system");
  FieldSpec field = system[0].hyperplane().normal().field;
  int n = system[0].hyperplane().dimension_of_space();
  for (const AffineHyperplane& h : system)
    if (h.hyperplane().normal().field != field || h.hyperplane().dimension_of_space() != n)
      throw std::invalid_argument("hyperplanes from different spaces");
  long points = 1;
  for (int i = 0; i < n; ++i) {
    if (points > kDefaultElementLimit / field.q())
      throw std::invalid_argument("point count exceeds the element limit");
    points *= field.q();
  }

  HyperplaneRatioReport report;
  report.k = static_cast<int>(system.size());
  report.theorem_applies = !field.prime_field();

  std::vector<Bitset> members;
  for (const AffineHyperplane& h : system) {
    Bitset bits(static_cast<std::size_t>(points));
    for (long idx = 0; idx < points; ++idx)
      if (h.contains(point_at(field, n, idx))) bits.set(static_cast<std::size_t>(idx));
    members.push_back(std::move(bits));
  }
  Bitset covered(static_cast<std::size_t>(points));
  for (const Bitset& b : members) covered |= b;
  report.covers = covered.count() == static_cast<std::size_t>(points);

  report.irredundant = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool has_private = false;
    members[i].for_each_set([&](std::size_t e) {
      if (has_private) return;
      bool elsewhere = false;
      for (std::size_t j = 0; j < members.size(); ++j)
        if (j != i && members[j].test(e)) elsewhere = true;
      if (!elsewhere) has_private = true;
    });
    if (!has_private) report.irredundant = false;
  }

  std::vector<VectorGF> normals;
  for (const AffineHyperplane& h : system) normals.push_back(h.hyperplane().normal());
  report.codimension = rank(MatrixGF::from_rows(normals));
  report.bound_holds = 3 * report.codimension < 2 * report.k;
  return report;
}

bool codim_ratio_check(std::span<const AffineHyperplane> system) {
  HyperplaneRatioReport report = hyperplane_ratio_report(system);
  if (!report.covers || !report.irredundant)
    throw std::invalid_argument("system is not an irredundant covering of its space");
  if (!report.theorem_applies)
    throw std::invalid_argument("codim ratio check requires a non-prime prime power field");
  return report.bound_holds;
}

std::optional<AffineCoverInstance> bases_to_affine_cover(std::span<const MatrixGF> bases,
                                                         const VectorGF& v) {
  if (nowhere_zero_combination(bases, v).has_value()) return std::nullopt;

  CombinationProblem prob = flatten_bases(bases);
  FieldSpec field = prob.field;
  int n = prob.n;
  int k = static_cast<int>(bases.size());
  int m = n * k;

  // M x = v with the basis vectors as the columns of M.
  std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j)
    for (int r = 0; r < n; ++r)
      entries[static_cast<std::size_t>(r) * m + j] =
          prob.positions[static_cast<std::size_t>(j)].e[static_cast<std::size_t>(r)];
  MatrixGF mat(field, n, m, std::move(entries));

  std::vector<std::vector<int>> aug = to_rows(mat);
  for (int r = 0; r < n; ++r)
    aug[static_cast<std::size_t>(r)].push_back(v.e[static_cast<std::size_t>(r)]);
  std::vector<int> pivots = echelon(field, aug);
  for (int p : pivots)
    if (p == m) throw std::logic_error("basis columns must span the space");

  // Particular solution with the free variables at zero.
  std::vector<int> x0(static_cast<std::size_t>(m), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x0[static_cast<std::size_t>(pivots[r])] = aug[r][static_cast<std::size_t>(m)];

  std::vector<int> free_cols;
  {
    std::vector<char> is_pivot(static_cast<std::size_t>(m), 0);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
    for (int c = 0; c < m; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  int dim = static_cast<int>(free_cols.size());

  std::vector<int> null_entries(static_cast<std::size_t>(m) * static_cast<std::size_t>(dim), 0);
  for (int fi = 0; fi < dim; ++fi) {
    int fc = free_cols[static_cast<std::size_t>(fi)];
    null_entries[static_cast<std::size_t>(fc) * dim + fi] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      null_entries[static_cast<std::size_t>(pivots[r]) * dim + fi] =
          field.neg(aug[r][static_cast<std::size_t>(fc)]);
  }
  MatrixGF null_basis(field, m, dim, std::move(null_entries));

  long u_count = 1;
  for (int i = 0; i < dim; ++i) {
    if (u_count > kDefaultElementLimit / field.q())
      throw std::invalid_argument("solution space exceeds the element limit");
    u_count *= field.q();
  }

  // Materialize U = { x0 + N t } once.
  std::vector<std::vector<int>> points_of_u;
  for (long t = 0; t < u_count; ++t) {
    VectorGF param = point_at(field, dim, t);
    std::vector<int> x = x0;
    for (int j = 0; j < m; ++j) {
      int acc = x[static_cast<std::size_t>(j)];
      for (int fi = 0; fi < dim; ++fi)
        acc = field.add(acc,
                        field.mul(null_basis.at(j, fi), param.e[static_cast<std::size_t>(fi)]));
      x[static_cast<std::size_t>(j)] = acc;
    }
    points_of_u.push_back(std::move(x));
  }

  auto is_blocking = [&](const std::vector<int>& index_set) {
    for (const std::vector<int>& x : points_of_u) {
      bool zero_somewhere = false;
      for (int j : index_set)
        if (x[static_cast<std::size_t>(j)] == 0) {
          zero_somewhere = true;
          break;
        }
      if (!zero_somewhere) return false;
    }
    return true;
  };

  // The precondition makes the full index set blocking; thin it to a minimal
  // blocking set, scanning indices in ascending order.
  std::vector<int> blocking(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) blocking[static_cast<std::size_t>(j)] = j;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < blocking.size(); ++i) {
      std::vector<int> without = blocking;
      without.erase(without.begin() + static_cast<long>(i));
      if (is_blocking(without)) {
        blocking = std::move(without);
        changed = true;
        break;
      }
    }
  }

  AffineCoverInstance out{std::move(mat),
                          v,
                          VectorGF{field, std::move(x0)},
                          std::move(null_basis),
                          dim,
                          blocking,
                          false,
                          false,
                          std::nullopt,
                          std::nullopt};

  out.covers = is_blocking(blocking);
  out.irredundant = true;
  for (std::size_t i = 0; i < blocking.size() && out.irredundant; ++i) {
    std::vector<int> without = blocking;
    without.erase(without.begin() + static_cast<long>(i));
    if (is_blocking(without)) out.irredundant = false;
  }
  if (dim > 0)
    out.cover_ratio = static_cast<double>(blocking.size()) / static_cast<double>(dim);
  if (k > 1) out.k_ratio = static_cast<double>(k) / static_cast<double>(k - 1);
  return out;
}

}  // namespace covercraft
