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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lieorbit/field.hpp"
#include "lieorbit/poly.hpp"
#include "lieorbit/structure.hpp"

namespace lieorbit {

/// A point family F^k -> F^27 whose 27 coordinates are polynomials in the
/// parameters, e.g. eta1(mu, nu, lambda).
struct ParamFamily {
  std::string name;
  VarTablePtr params;
  FieldDescriptor field;
  std::vector<MultiPoly> components;  // 27, lexicographic (i,j,k)

  std::size_t arity() const noexcept { return params->size(); }
  /// UsageError on arity mismatch.
  StructureVector at(std::span<const Scalar> values) const;
  /// Composes with polynomial arguments: component r becomes
  /// components[r](args[0], ..., args[k-1]).
  std::vector<MultiPoly> instantiate(std::span<const MultiPoly> args) const;
  ParamFamily over(const FieldDescriptor& target) const;
};

/// poly == 0 or poly != 0.
struct Atom {
  MultiPoly poly;
  bool nonzero;
  std::string text;
};

/// Conjunction of atoms over a family's parameters.
struct Predicate {
  std::vector<Atom> atoms;

  bool holds(std::span<const Scalar> values) const;
  std::string to_string() const;
  Predicate over(const FieldDescriptor& target) const;
};

/// numerator / denominator with a monomial denominator, e.g. alpha*A2/(phi*gamma).
struct RationalEntry {
  MultiPoly numerator;
  MultiPoly denominator;

  /// DivisionByZero when the denominator vanishes.
  Scalar evaluate(std::span<const Scalar> values) const;
  std::string to_string() const;
  RationalEntry over(const FieldDescriptor& target) const;
};

struct WitnessMatrix {
  std::vector<RationalEntry> entries;  // 9, row-major
  /// Determinant as listed with the matrix; absent when the source gives
  /// none.
  std::optional<MultiPoly> expected_det;

  SquareMatrix instantiate(std::span<const Scalar> values) const;
  WitnessMatrix over(const FieldDescriptor& target) const;
};

/// "base . matrix(params) = family(params) whenever condition(params)".
struct OrbitWitness {
  std::string id;
  std::string anchor;
  std::string base;    // "eta" or "rho"
  std::string family;  // target family
  Predicate condition;
  WitnessMatrix matrix;
};

/// One line of the rho-family transition table. Rows without a matrix
/// mark parameter loci lying in the closure of O(eta).
struct TableRow {
  std::string id;
  std::string anchor;
  std::string family;  // rho1, rho2 or rho3
  Predicate condition;
  std::optional<WitnessMatrix> matrix;
};

/// Every concrete object of the Heisenberg and g2+a1 computations:
/// base vectors, parametrized families, generator systems, witness matrices
/// and the transition table. Built over Q with integer coefficients;
/// `over` maps everything into another field.
struct WitnessInstance {
  SquareMatrix matrix;
  std::optional<Scalar> expected_det;
};

class Catalog {
 public:
  static Catalog standard();

  Catalog over(const FieldDescriptor& target) const;
  const FieldDescriptor& field() const noexcept { return field_; }

  /// "eta", "rho" or "zero".
  StructureVector base_vector(std::string_view name) const;

  /// eta', eta1, eta2, eta3, rho', rho1, rho2, rho3 (ASCII names
  /// "eta_prime", "eta1", ..., "rho_prime", ...).
  const ParamFamily& family(std::string_view name) const;
  const std::vector<ParamFamily>& families() const noexcept { return families_; }
  /// Shorthand for family(name).at(values).
  StructureVector family_eval(std::string_view name, std::span<const Scalar> values) const;

  /// S1, S2, S3, S, T3, T, Sprime, T_S3, W_polys, jacobi3.
  const PolySystem& system(std::string_view name) const;
  static const std::vector<std::string>& system_names();

  const std::vector<TableRow>& table_rows() const noexcept { return rows_; }
  /// g1, g2, g3 followed by every table row that carries a matrix.
  std::vector<OrbitWitness> witnesses() const;
  /// Matrix of the witness or matrix-carrying table row `id` at `values`.
  /// UsageError when the row's condition fails there.
  WitnessInstance witness(std::string_view id, std::span<const Scalar> values) const;

  // Mutations for negative testing.
  /// Negates one term (canonical order) of one S3 generator and rebuilds
  /// the systems that contain S3.
  void negate_s3_term(std::size_t generator, std::size_t term);
  /// Replaces one entry of the index-th matrix-carrying table row: nonzero
  /// entries are negated, zero entries become 1.
  void perturb_table_entry(std::size_t matrix_row, std::size_t entry);

 private:
  Catalog() = default;
  void rebuild_derived_systems();
  PolySystem& mutable_system(std::string_view name);

  FieldDescriptor field_ = FieldDescriptor::rationals();
  std::vector<ParamFamily> families_;
  std::vector<PolySystem> systems_;
  std::vector<OrbitWitness> heisenberg_witnesses_;
  std::vector<TableRow> rows_;
};

}  // namespace lieorbit
