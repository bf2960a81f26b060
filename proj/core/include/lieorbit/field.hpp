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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "lieorbit/errors.hpp"

namespace lieorbit {

enum class FieldKind { prime, rational };

/// Identifies one of the supported exact fields: F_p for a prime p < 2^31,
/// or the rationals.
class FieldDescriptor {
 public:
  static constexpr std::uint32_t kMaxModulus = 2147483647u;

  /// Throws UsageError unless p is a prime no larger than kMaxModulus.
  static FieldDescriptor prime(std::uint64_t p);
  static FieldDescriptor rationals() noexcept { return FieldDescriptor(); }

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == FieldKind::prime; }
  /// 0 for the rationals.
  std::uint32_t modulus() const noexcept { return modulus_; }
  /// "F_5" or "Q".
  std::string name() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  FieldDescriptor() = default;
  FieldDescriptor(FieldKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_ = FieldKind::rational;
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of a FieldDescriptor's field, always held in canonical form:
/// a residue in [0, p) or a reduced fraction with positive denominator.
/// Two scalars of the same field are equal iff their representations are.
class Scalar {
 public:
  /// Rational zero.
  Scalar() : field_(FieldDescriptor::rationals()), value_(mpq_class(0)) {}

  static Scalar from_int(const FieldDescriptor& field, std::int64_t z);
  static Scalar from_int(const FieldDescriptor& field, const mpz_class& z);
  /// num/den; throws DivisionByZero when den maps to zero in the field.
  static Scalar from_fraction(const FieldDescriptor& field, const mpz_class& num,
                              const mpz_class& den);
  /// Parses "-3", "7/12" and the like.
  static Scalar parse(const FieldDescriptor& field, const std::string& text);

  static Scalar zero(const FieldDescriptor& field) { return from_int(field, 0); }
  static Scalar one(const FieldDescriptor& field) { return from_int(field, 1); }

  const FieldDescriptor& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue of a prime-field element. UsageError for rationals.
  std::uint32_t residue() const;
  /// Value of a rational element. UsageError for prime-field elements.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Multiplicative inverse; DivisionByZero on zero.
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  std::string to_string() const;

  /// Structural equality. Comparing scalars of different fields is a
  /// UsageError, not "false".
  friend bool operator==(const Scalar& a, const Scalar& b);
  /// A canonical total order (residue order, or numeric order over Q) used
  /// for sorting and deduplication. It is not a field ordering.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  Scalar(const FieldDescriptor& field, std::uint32_t residue) : field_(field), value_(residue) {}
  Scalar(const FieldDescriptor& field, mpq_class q) : field_(field), value_(std::move(q)) {}

  void require_same_field(const Scalar& other) const;

  FieldDescriptor field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f);

}  // namespace lieorbit
