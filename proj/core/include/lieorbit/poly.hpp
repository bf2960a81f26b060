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
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lieorbit/field.hpp"

namespace lieorbit {

/// Ordered list of indeterminate names. The order defines the
/// lexicographic monomial order of every polynomial over the table.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  static std::shared_ptr<const VarTable> make(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// UsageError for unknown names.
  std::size_t index(std::string_view name) const;

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;
using Exponents = std::vector<std::uint32_t>;

/// A point alpha in F^m, keyed by the table's indeterminates.
class Assignment {
 public:
  Assignment(VarTablePtr vars, FieldDescriptor field);

  /// UsageError unless `values` names every indeterminate of the table
  /// (extra names are rejected too).
  static Assignment from_map(VarTablePtr vars, FieldDescriptor field,
                             const std::map<std::string, Scalar>& values);

  void set(std::string_view name, Scalar value);
  void set(std::size_t index, Scalar value);
  bool is_total() const noexcept;
  /// UsageError when the indeterminate was never assigned.
  const Scalar& at(std::size_t index) const;

  const VarTablePtr& vars() const noexcept { return vars_; }
  const FieldDescriptor& field() const noexcept { return field_; }

 private:
  VarTablePtr vars_;
  FieldDescriptor field_;
  std::vector<std::optional<Scalar>> values_;
};

/// Sparse polynomial in F[X_1..X_m]. Terms are kept canonical: duplicate
/// monomials merged, zero coefficients never stored. Structural equality
/// is therefore polynomial identity.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Scalar, std::greater<>>;
  using Term = std::pair<Exponents, Scalar>;

  /// The zero polynomial.
  MultiPoly(VarTablePtr vars, FieldDescriptor field);

  /// Merges duplicates and drops zeros. UsageError on arity mismatch or a
  /// coefficient from another field.
  static MultiPoly build(VarTablePtr vars, FieldDescriptor field, std::span<const Term> terms);
  static MultiPoly constant(VarTablePtr vars, const Scalar& c);
  static MultiPoly constant(VarTablePtr vars, FieldDescriptor field, std::int64_t c);
  static MultiPoly variable(VarTablePtr vars, FieldDescriptor field, std::string_view name);

  const VarTable& vars() const noexcept { return *vars_; }
  const VarTablePtr& vars_ptr() const noexcept { return vars_; }
  const FieldDescriptor& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::uint32_t total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;
  /// Coefficient of the monomial, zero when absent.
  Scalar coefficient(const Exponents& monomial) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Scalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
  MultiPoly pow(std::uint32_t e) const;

  /// ev_alpha(f). UsageError if the assignment misses a variable of f.
  Scalar evaluate(const Assignment& point) const;
  /// Evaluation at a dense point indexed like the table.
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Replaces indeterminate i by images[i]; all images share one table.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Same polynomial with coefficients mapped into `target`. Only Q -> F_p
  /// and identity maps are defined; a denominator divisible by p throws
  /// DivisionByZero.
  MultiPoly over(const FieldDescriptor& target) const;

  /// Deterministic rendering in the canonical term order, e.g.
  /// "X121^2 - X123*X231".
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void require_compatible(const MultiPoly& other) const;
  void add_term(const Exponents& e, const Scalar& c);

  VarTablePtr vars_;
  FieldDescriptor field_;
  TermMap terms_;
};

/// Parses +, -, *, ^ (non-negative integer exponents), parentheses,
/// integer constants and identifiers. Identifiers resolve against
/// `abbreviations` first, then against the table.
MultiPoly parse_poly(const VarTablePtr& vars, const FieldDescriptor& field, std::string_view text,
                     const std::map<std::string, MultiPoly>& abbreviations = {});

/// Flattened form of a prime-field polynomial for hot evaluation loops
/// over residue vectors.
class CompiledPoly {
 public:
  explicit CompiledPoly(const MultiPoly& poly);

  std::uint32_t evaluate(std::span<const std::uint32_t> residues) const noexcept;
  bool vanishes_at(std::span<const std::uint32_t> residues) const noexcept {
    return evaluate(residues) == 0;
  }

 private:
  struct Factor {
    std::uint32_t var;
    std::uint32_t exponent;
  };
  struct Term {
    std::uint32_t coefficient;
    std::uint32_t first_factor;
    std::uint32_t factor_count;
  };

  std::uint32_t modulus_;
  std::vector<Term> terms_;
  std::vector<Factor> factors_;
};

}  // namespace lieorbit
