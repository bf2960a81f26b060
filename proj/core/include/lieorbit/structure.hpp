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

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lieorbit/field.hpp"
#include "lieorbit/poly.hpp"

namespace lieorbit {

/// Largest number of candidate points or matrices an exhaustive sweep may
/// visit by default: 5^9, enough for all 3x3 matrices over F_5.
inline constexpr std::uint64_t kDefaultBudget = 1953125;

// Lexicographic relabelling r - 1 = (i-1)n^2 + (j-1)n + (k-1), all 1-based.
std::size_t index_of(int i, int j, int k, int n);
std::array<int, 3> triple_of(std::size_t r, int n);

/// Indeterminates X_ijk in lexicographic order ("X111", "X112", ...).
/// Tables for the same n are shared.
VarTablePtr structure_vars(int n);

/// A point of F^(n^3); coordinate (i,j,k) holds lambda_ijk where
/// [b_i, b_j] = sum_k lambda_ijk b_k.
class StructureVector {
 public:
  StructureVector(int n, FieldDescriptor field);
  /// coords.size() must be n^3 and all coordinates must share one field.
  StructureVector(int n, std::vector<Scalar> coords);

  int dim() const noexcept { return n_; }
  const FieldDescriptor& field() const noexcept { return field_; }
  std::span<const Scalar> coords() const noexcept { return coords_; }

  const Scalar& at(int i, int j, int k) const { return coords_[index_of(i, j, k, n_) - 1]; }
  void set(int i, int j, int k, Scalar value);
  /// 1-based position r.
  const Scalar& coord(std::size_t r) const { return coords_.at(r - 1); }

  bool is_zero() const noexcept;
  /// Only the nonzero brackets, e.g. "[2,3]=1*e1".
  std::string to_string() const;

  friend bool operator==(const StructureVector&, const StructureVector&) = default;
  friend std::strong_ordering operator<=>(const StructureVector& a, const StructureVector& b);

 private:
  int n_;
  FieldDescriptor field_;
  std::vector<Scalar> coords_;
};

/// n x n matrix, 0-based row/column access. Minors use the usual 1-based
/// (i, j) labels.
class SquareMatrix {
 public:
  SquareMatrix(int n, FieldDescriptor field);
  static SquareMatrix identity(int n, const FieldDescriptor& field);
  /// Square list of rows, all entries in one field.
  static SquareMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static SquareMatrix from_ints(const FieldDescriptor& field,
                                const std::vector<std::vector<std::int64_t>>& rows);

  int dim() const noexcept { return n_; }
  const FieldDescriptor& field() const noexcept { return field_; }
  const Scalar& operator()(int row, int col) const { return entries_[row * n_ + col]; }
  Scalar& operator()(int row, int col) { return entries_[row * n_ + col]; }

  Scalar det() const;
  /// SingularMatrix when det = 0.
  SquareMatrix inverse() const;
  /// Determinant after deleting row i and column j (1-based).
  Scalar minor(int i, int j) const;
  /// All minors; entry (i-1, j-1) holds M_ij.
  SquareMatrix minors() const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  std::string to_string() const;

 private:
  int n_;
  FieldDescriptor field_;
  std::vector<Scalar> entries_;
};

/// A named finite generating set S over the X_ijk table; V(S) is its
/// common zero locus.
struct PolySystem {
  std::string name;
  VarTablePtr vars;
  FieldDescriptor field;
  std::vector<MultiPoly> generators;

  bool vanishes_at(std::span<const Scalar> point) const;
  bool vanishes_at(const StructureVector& v) const { return vanishes_at(v.coords()); }
  /// Same generators with coefficients mapped into `target`.
  PolySystem over(const FieldDescriptor& target) const;
  /// Generator list of this followed by other's (duplicates kept).
  PolySystem united_with(const PolySystem& other, std::string united_name) const;
};

/// The three generator families cutting out L_n(F): X_iik, X_ijk + X_jik and
/// the Jacobi quadratics sum_k (X_ijk X_klr + X_jlk X_kir + X_lik X_kjr).
/// Sizes n^2, n^3 and n^4, in that order.
PolySystem jacobi_generators(int n, const FieldDescriptor& field);

bool is_lie(const StructureVector& v);

/// Right action v.g by change of basis b'_j = sum_i g_ij b_i:
///   v'_ijs = sum_{p,q,r} g_pi g_qj v_pqr (g^-1)_sr.
/// SingularMatrix when g is not invertible.
StructureVector act(const StructureVector& v, const SquareMatrix& g);
/// Same, with g^-1 supplied by the caller.
StructureVector act(const StructureVector& v, const SquareMatrix& g, const SquareMatrix& g_inverse);

/// Coordinates (g121, g122, g123, g131, g132, g133, g231, g232, g233) of a
/// vector in F^27 satisfying X_iik = 0 and X_ijk + X_jik = 0.
class ReducedVector3 {
 public:
  static constexpr std::array<std::array<int, 3>, 9> kTriples = {{
      {1, 2, 1}, {1, 2, 2}, {1, 2, 3}, {1, 3, 1}, {1, 3, 2}, {1, 3, 3}, {2, 3, 1}, {2, 3, 2}, {2, 3, 3}}};
  static constexpr std::array<const char*, 9> kLabels = {
      "g121", "g122", "g123", "g131", "g132", "g133", "g231", "g232", "g233"};

  explicit ReducedVector3(std::array<Scalar, 9> values);
  static ReducedVector3 from_ints(const FieldDescriptor& field, const std::array<std::int64_t, 9>& v);

  const FieldDescriptor& field() const noexcept { return values_[0].field(); }
  const std::array<Scalar, 9>& values() const noexcept { return values_; }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const ReducedVector3&, const ReducedVector3&) = default;

 private:
  std::array<Scalar, 9> values_;
};

/// UsageError unless v is 3-dimensional and vanishes on S1 and S2.
ReducedVector3 reduce3(const StructureVector& v);
StructureVector lift3(const ReducedVector3& rv);

/// Visits every invertible n x n matrix over F_p once, with its inverse.
/// BudgetExceeded when p^(n^2) > budget.
void for_each_invertible(int n, std::uint32_t p, std::uint64_t budget,
                         const std::function<void(const SquareMatrix& g, const SquareMatrix& g_inverse)>& visit);
std::vector<SquareMatrix> gl_enumerate(int n, std::uint32_t p, std::uint64_t budget = kDefaultBudget);
/// prod_{k<n} (p^n - p^k).
std::uint64_t gl_order(int n, std::uint64_t p);

/// O(v) over F_p, sorted by the canonical order and deduplicated.
std::vector<StructureVector> orbit(const StructureVector& v, std::uint64_t budget = kDefaultBudget);

/// Header "g121,...,g233" followed by one row per vector.
void write_reduced_csv(std::ostream& os, std::span<const ReducedVector3> vectors);
/// Header "X111,...,X333" (for n = 3) followed by one row per vector.
void write_full_csv(std::ostream& os, std::span<const StructureVector> vectors);

}  // namespace lieorbit
