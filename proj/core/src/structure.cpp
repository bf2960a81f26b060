// Copyright 2026 The lieorbit Authors.
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

#include "lieorbit/structure.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>

namespace lieorbit {

std::size_t index_of(int i, int j, int k, int n) {
  if (n < 1 || i < 1 || j < 1 || k < 1 || i > n || j > n || k > n) {
    throw UsageError("index triple out of range for n = " + std::to_string(n));
  }
  return static_cast<std::size_t>((i - 1) * n * n + (j - 1) * n + (k - 1)) + 1;
}

std::array<int, 3> triple_of(std::size_t r, int n) {
  const auto m = static_cast<std::size_t>(n) * n * n;
  if (n < 1 || r < 1 || r > m) throw UsageError("position out of range for n = " + std::to_string(n));
  const int z = static_cast<int>(r - 1);
  return {z / (n * n) + 1, (z / n) % n + 1, z % n + 1};
}

VarTablePtr structure_vars(int n) {
  if (n < 1) throw UsageError("dimension must be positive");
  static std::mutex mutex;
  static std::map<int, VarTablePtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          names.push_back("X" + std::to_string(i) + std::to_string(j) + std::to_string(k));
        }
      }
    }
    slot = VarTable::make(std::move(names));
  }
  return slot;
}

// ---------------------------------------------------------------------------

StructureVector::StructureVector(int n, FieldDescriptor field)
    : n_(n), field_(field), coords_(static_cast<std::size_t>(n) * n * n, Scalar::zero(field)) {
  if (n < 1) throw UsageError("dimension must be positive");
}

StructureVector::StructureVector(int n, std::vector<Scalar> coords)
    : n_(n), field_(coords.empty() ? FieldDescriptor::rationals() : coords.front().field()),
      coords_(std::move(coords)) {
  if (n < 1 || coords_.size() != static_cast<std::size_t>(n) * n * n) {
    throw UsageError("structure vector needs exactly n^3 coordinates");
  }
  for (const auto& c : coords_) {
    if (c.field() != field_) throw UsageError("structure vector coordinates from mixed fields");
  }
}

void StructureVector::set(int i, int j, int k, Scalar value) {
  if (value.field() != field_) throw UsageError("coordinate from another field");
  coords_[index_of(i, j, k, n_) - 1] = std::move(value);
}

bool StructureVector::is_zero() const noexcept {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string StructureVector::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      std::string rhs;
      for (int k = 1; k <= n_; ++k) {
        const Scalar& c = at(i, j, k);
        if (c.is_zero()) continue;
        if (!rhs.empty()) rhs += " + ";
        rhs += c.to_string() + "*e" + std::to_string(k);
      }
      if (rhs.empty()) continue;
      if (any) os << ", ";
      os << '[' << i << ',' << j << "]=" << rhs;
      any = true;
    }
  }
  // Entries violating antisymmetry would be invisible above.
  for (std::size_t r = 1; r <= coords_.size(); ++r) {
    const auto [i, j, k] = triple_of(r, n_);
    if (i < j) continue;
    const Scalar& c = coords_[r - 1];
    const bool expected_zero = (i == j);
    const bool mirrors = !expected_zero && c == -at(j, i, k);
    if ((expected_zero && !c.is_zero()) || (!expected_zero && !mirrors)) {
      if (any) os << ", ";
      os << "X" << i << j << k << "=" << c;
      any = true;
    }
  }
  return any ? os.str() : std::string("0");
}

std::strong_ordering operator<=>(const StructureVector& a, const StructureVector& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

SquareMatrix::SquareMatrix(int n, FieldDescriptor field)
    : n_(n), field_(field), entries_(static_cast<std::size_t>(n) * n, Scalar::zero(field)) {
  if (n < 1) throw UsageError("matrix dimension must be positive");
}

SquareMatrix SquareMatrix::identity(int n, const FieldDescriptor& field) {
  SquareMatrix m(n, field);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw UsageError("empty matrix");
  SquareMatrix m(n, rows[0].at(0).field());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw UsageError("matrix rows must be square");
    for (int j = 0; j < n; ++j) {
      if (rows[i][j].field() != m.field_) throw UsageError("matrix entries from mixed fields");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

SquareMatrix SquareMatrix::from_ints(const FieldDescriptor& field,
                                     const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Scalar>> scalars;
  for (const auto& row : rows) {
    auto& out = scalars.emplace_back();
    for (auto x : row) out.push_back(Scalar::from_int(field, x));
  }
  return from_rows(scalars);
}

Scalar SquareMatrix::det() const {
  std::vector<Scalar> a = entries_;
  Scalar result = Scalar::one(field_);
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    while (pivot < n_ && a[pivot * n_ + col].is_zero()) ++pivot;
    if (pivot == n_) return Scalar::zero(field_);
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(a[pivot * n_ + j], a[col * n_ + j]);
      result = -result;
    }
    const Scalar& p = a[col * n_ + col];
    result *= p;
    const Scalar p_inv = p.inverse();
    for (int row = col + 1; row < n_; ++row) {
      if (a[row * n_ + col].is_zero()) continue;
      const Scalar factor = a[row * n_ + col] * p_inv;
      for (int j = col; j < n_; ++j) a[row * n_ + j] -= factor * a[col * n_ + j];
    }
  }
  return result;
}

SquareMatrix SquareMatrix::inverse() const {
  std::vector<Scalar> a = entries_;
  SquareMatrix inv = identity(n_, field_);
  for (int col = 0; col < n_; ++col) {
    int pivot = col;
    while (pivot < n_ && a[pivot * n_ + col].is_zero()) ++pivot;
    if (pivot == n_) throw SingularMatrix();
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(a[pivot * n_ + j], a[col * n_ + j]);
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar p_inv = a[col * n_ + col].inverse();
    for (int j = 0; j < n_; ++j) {
      a[col * n_ + j] *= p_inv;
      inv(col, j) *= p_inv;
    }
    for (int row = 0; row < n_; ++row) {
      if (row == col || a[row * n_ + col].is_zero()) continue;
      const Scalar factor = a[row * n_ + col];
      for (int j = 0; j < n_; ++j) {
        a[row * n_ + j] -= factor * a[col * n_ + j];
        inv(row, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

Scalar SquareMatrix::minor(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw UsageError("minor index out of range");
  if (n_ == 1) return Scalar::one(field_);
  SquareMatrix sub(n_ - 1, field_);
  for (int r = 0, sr = 0; r < n_; ++r) {
    if (r == i - 1) continue;
    for (int c = 0, sc = 0; c < n_; ++c) {
      if (c == j - 1) continue;
      sub(sr, sc++) = (*this)(r, c);
    }
    ++sr;
  }
  return sub.det();
}

SquareMatrix SquareMatrix::minors() const {
  SquareMatrix m(n_, field_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) m(i - 1, j - 1) = minor(i, j);
  }
  return m;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) throw UsageError("matrix dimensions differ");
  if (a.field_ != b.field_) throw UsageError("matrices over different fields");
  SquareMatrix c(a.n_, a.field_);
  for (int i = 0; i < a.n_; ++i) {
    for (int j = 0; j < a.n_; ++j) {
      Scalar sum = Scalar::zero(a.field_);
      for (int k = 0; k < a.n_; ++k) sum += a(i, k) * b(k, j);
      c(i, j) = sum;
    }
  }
  return c;
}

std::string SquareMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

bool PolySystem::vanishes_at(std::span<const Scalar> point) const {
  for (const auto& g : generators) {
    if (!g.evaluate(point).is_zero()) return false;
  }
  return true;
}

PolySystem PolySystem::over(const FieldDescriptor& target) const {
  PolySystem out{name, vars, target, {}};
  out.generators.reserve(generators.size());
  for (const auto& g : generators) out.generators.push_back(g.over(target));
  return out;
}

PolySystem PolySystem::united_with(const PolySystem& other, std::string united_name) const {
  if (!(*vars == *other.vars) || field != other.field) {
    throw UsageError("cannot unite systems over different tables or fields");
  }
  PolySystem out{std::move(united_name), vars, field, generators};
  out.generators.insert(out.generators.end(), other.generators.begin(), other.generators.end());
  return out;
}

PolySystem jacobi_generators(int n, const FieldDescriptor& field) {
  if (n < 2) throw UsageError("jacobi_generators needs n >= 2");
  const VarTablePtr vars = structure_vars(n);
  auto x = [&](int i, int j, int k) {
    return MultiPoly::variable(vars, field, vars->name(index_of(i, j, k, n) - 1));
  };
  PolySystem s{"jacobi" + std::to_string(n), vars, field, {}};
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) s.generators.push_back(x(i, i, k));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) s.generators.push_back(x(i, j, k) + x(j, i, k));
    }
  }
  // Coefficient of b_r in [[b_i,b_j],b_l] + [[b_j,b_l],b_i] + [[b_l,b_i],b_j].
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int l = 1; l <= n; ++l) {
        for (int r = 1; r <= n; ++r) {
          MultiPoly sum(vars, field);
          for (int k = 1; k <= n; ++k) {
            sum += x(i, j, k) * x(k, l, r);
            sum += x(j, l, k) * x(k, i, r);
            sum += x(l, i, k) * x(k, j, r);
          }
          s.generators.push_back(std::move(sum));
        }
      }
    }
  }
  return s;
}

bool is_lie(const StructureVector& v) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::uint32_t>, std::shared_ptr<const PolySystem>> cache;
  std::shared_ptr<const PolySystem> system;
  {
    std::lock_guard lock(mutex);
    auto& slot = cache[{v.dim(), v.field().modulus()}];
    if (!slot) slot = std::make_shared<const PolySystem>(jacobi_generators(v.dim(), v.field()));
    system = slot;
  }
  return system->vanishes_at(v);
}

StructureVector act(const StructureVector& v, const SquareMatrix& g) { return act(v, g, g.inverse()); }

StructureVector act(const StructureVector& v, const SquareMatrix& g, const SquareMatrix& g_inverse) {
  const int n = v.dim();
  if (g.dim() != n || g_inverse.dim() != n) throw UsageError("matrix and structure vector dimensions differ");
  if (g.field() != v.field() || g_inverse.field() != v.field()) {
    throw UsageError("matrix and structure vector over different fields");
  }
  std::vector<Scalar> out(static_cast<std::size_t>(n) * n * n, Scalar::zero(v.field()));
  for (std::size_t pos = 1; pos <= out.size(); ++pos) {
    const Scalar& lambda = v.coord(pos);
    if (lambda.is_zero()) continue;
    const auto [p, q, r] = triple_of(pos, n);
    for (int i = 1; i <= n; ++i) {
      const Scalar& gpi = g(p - 1, i - 1);
      if (gpi.is_zero()) continue;
      const Scalar left = gpi * lambda;
      for (int j = 1; j <= n; ++j) {
        const Scalar& gqj = g(q - 1, j - 1);
        if (gqj.is_zero()) continue;
        const Scalar both = left * gqj;
        for (int s = 1; s <= n; ++s) {
          const Scalar& inv_sr = g_inverse(s - 1, r - 1);
          if (inv_sr.is_zero()) continue;
          out[index_of(i, j, s, n) - 1] += both * inv_sr;
        }
      }
    }
  }
  return StructureVector(n, std::move(out));
}

// ---------------------------------------------------------------------------

ReducedVector3::ReducedVector3(std::array<Scalar, 9> values) : values_(std::move(values)) {
  for (const auto& v : values_) {
    if (v.field() != values_[0].field()) throw UsageError("reduced vector from mixed fields");
  }
}

ReducedVector3 ReducedVector3::from_ints(const FieldDescriptor& field, const std::array<std::int64_t, 9>& v) {
  std::array<Scalar, 9> values;
  for (std::size_t i = 0; i < 9; ++i) values[i] = Scalar::from_int(field, v[i]);
  return ReducedVector3(values);
}

ReducedVector3 reduce3(const StructureVector& v) {
  if (v.dim() != 3) throw UsageError("reduce3 needs a 3-dimensional structure vector");
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        const bool ok = (i == j) ? v.at(i, j, k).is_zero() : (v.at(i, j, k) + v.at(j, i, k)).is_zero();
        if (!ok) {
          throw UsageError("reduce3: vector violates X_iik = 0 / X_ijk + X_jik = 0 at (" +
                           std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  std::array<Scalar, 9> values;
  for (std::size_t t = 0; t < 9; ++t) {
    const auto& [i, j, k] = ReducedVector3::kTriples[t];
    values[t] = v.at(i, j, k);
  }
  return ReducedVector3(values);
}

StructureVector lift3(const ReducedVector3& rv) {
  StructureVector v(3, rv.field());
  for (std::size_t t = 0; t < 9; ++t) {
    const auto& [i, j, k] = ReducedVector3::kTriples[t];
    v.set(i, j, k, rv[t]);
    v.set(j, i, k, -rv[t]);
  }
  return v;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t budget) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (result > budget / base) {
      throw BudgetExceeded(std::to_string(base) + "^" + std::to_string(exponent) +
                           " candidates exceed the enumeration budget of " + std::to_string(budget));
    }
    result *= base;
  }
  return result;
}

std::uint32_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  while (e != 0) {
    if (e & 1u) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Gauss-Jordan on residues; false when singular.
bool invert_residues(int n, std::uint32_t p, std::span<const std::uint32_t> g, std::span<std::uint32_t> out) {
  const int w = 2 * n;
  std::uint64_t a[2 * 8 * 8];  // n <= 8 keeps this on the stack
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[i * w + j] = g[i * n + j];
      a[i * w + n + j] = (i == j) ? 1 : 0;
    }
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot * w + col] == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (int j = 0; j < w; ++j) std::swap(a[pivot * w + j], a[col * w + j]);
    }
    const std::uint64_t inv = inv_mod(a[col * w + col], p);
    for (int j = 0; j < w; ++j) a[col * w + j] = a[col * w + j] * inv % p;
    for (int row = 0; row < n; ++row) {
      const std::uint64_t f = a[row * w + col];
      if (row == col || f == 0) continue;
      for (int j = 0; j < w; ++j) a[row * w + j] = (a[row * w + j] + (p - f) * a[col * w + j]) % p;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i * n + j] = static_cast<std::uint32_t>(a[i * w + n + j]);
  }
  return true;
}

// Walks all p^(n^2) residue matrices in lexicographic order and reports
// the invertible ones with their inverses.
template <typename Visit>
void for_each_invertible_residues(int n, std::uint32_t p, std::uint64_t budget, Visit&& visit) {
  if (n < 1 || n > 8) throw UsageError("matrix enumeration supports 1 <= n <= 8");
  if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  const std::uint64_t total = checked_power(p, static_cast<std::uint64_t>(n) * n, budget);
  std::vector<std::uint32_t> g(static_cast<std::size_t>(n) * n, 0), inv(g.size());
  for (std::uint64_t count = 0; count < total; ++count) {
    if (invert_residues(n, p, g, inv)) visit(std::span<const std::uint32_t>(g), std::span<const std::uint32_t>(inv));
    for (std::size_t d = g.size(); d-- > 0;) {
      if (++g[d] < p) break;
      g[d] = 0;
    }
  }
}

}  // namespace

std::uint64_t gl_order(int n, std::uint64_t p) {
  std::uint64_t pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  std::uint64_t order = 1, pk = 1;
  for (int k = 0; k < n; ++k) {
    order *= pn - pk;
    pk *= p;
  }
  return order;
}

void for_each_invertible(int n, std::uint32_t p, std::uint64_t budget,
                         const std::function<void(const SquareMatrix&, const SquareMatrix&)>& visit) {
  const FieldDescriptor field = FieldDescriptor::prime(p);
  SquareMatrix g(n, field), inv(n, field);
  for_each_invertible_residues(n, p, budget, [&](std::span<const std::uint32_t> gr, std::span<const std::uint32_t> ir) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        g(i, j) = Scalar::from_int(field, gr[i * n + j]);
        inv(i, j) = Scalar::from_int(field, ir[i * n + j]);
      }
    }
    visit(g, inv);
  });
}

std::vector<SquareMatrix> gl_enumerate(int n, std::uint32_t p, std::uint64_t budget) {
  std::vector<SquareMatrix> out;
  for_each_invertible(n, p, budget, [&](const SquareMatrix& g, const SquareMatrix&) { out.push_back(g); });
  return out;
}

std::vector<StructureVector> orbit(const StructureVector& v, std::uint64_t budget) {
  const FieldDescriptor& field = v.field();
  if (!field.is_prime()) throw UsageError("orbit enumeration needs a prime field");
  const int n = v.dim();
  const std::uint64_t p = field.modulus();
  struct Entry {
    int p, q, r;
    std::uint64_t value;
  };
  std::vector<Entry> support;
  for (std::size_t pos = 1; pos <= v.coords().size(); ++pos) {
    if (v.coord(pos).is_zero()) continue;
    const auto [a, b, c] = triple_of(pos, n);
    support.push_back({a - 1, b - 1, c - 1, v.coord(pos).residue()});
  }
  const std::size_t m = static_cast<std::size_t>(n) * n * n;
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::uint64_t> acc(m);
  std::vector<std::uint32_t> image(m);
  for_each_invertible_residues(n, field.modulus(), budget,
                               [&](std::span<const std::uint32_t> g, std::span<const std::uint32_t> inv) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const Entry& e : support) {
      for (int i = 0; i < n; ++i) {
        const std::uint64_t gpi = g[e.p * n + i];
        if (gpi == 0) continue;
        const std::uint64_t left = gpi * e.value % p;
        for (int j = 0; j < n; ++j) {
          const std::uint64_t both = left * g[e.q * n + j] % p;
          if (both == 0) continue;
          for (int s = 0; s < n; ++s) {
            auto& slot = acc[(i * n + j) * n + s];
            slot = (slot + both * inv[s * n + e.r]) % p;
          }
        }
      }
    }
    for (std::size_t k = 0; k < m; ++k) image[k] = static_cast<std::uint32_t>(acc[k]);
    seen.insert(image);
  });
  std::vector<StructureVector> out;
  out.reserve(seen.size());
  for (const auto& residues : seen) {
    std::vector<Scalar> coords;
    coords.reserve(m);
    for (auto r : residues) coords.push_back(Scalar::from_int(field, r));
    out.emplace_back(n, std::move(coords));
  }
  return out;
}

// ---------------------------------------------------------------------------

void write_reduced_csv(std::ostream& os, std::span<const ReducedVector3> vectors) {
  for (std::size_t i = 0; i < 9; ++i) os << (i ? "," : "") << ReducedVector3::kLabels[i];
  os << '\n';
  for (const auto& v : vectors) {
    for (std::size_t i = 0; i < 9; ++i) os << (i ? "," : "") << v[i];
    os << '\n';
  }
}

void write_full_csv(std::ostream& os, std::span<const StructureVector> vectors) {
  if (vectors.empty()) {
    os << '\n';
    return;
  }
  const int n = vectors.front().dim();
  const VarTablePtr vars = structure_vars(n);
  for (std::size_t i = 0; i < vars->size(); ++i) os << (i ? "," : "") << vars->name(i);
  os << '\n';
  for (const auto& v : vectors) {
    const auto coords = v.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    os << '\n';
  }
}

}  // namespace lieorbit
