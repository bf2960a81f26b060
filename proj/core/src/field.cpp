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

#include "lieorbit/field.hpp"

#include <ostream>
#include <sstream>

namespace lieorbit {

namespace {

std::uint32_t reduce(const FieldDescriptor& f, const mpz_class& z) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), f.modulus());
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t reduce(const FieldDescriptor& f, std::int64_t z) {
  const auto p = static_cast<std::int64_t>(f.modulus());
  std::int64_t r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e != 0) {
    if (e & 1u) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (p > kMaxModulus || !lieorbit::is_prime(p)) {
    throw UsageError("field modulus " + std::to_string(p) + " is not a supported prime");
  }
  return FieldDescriptor(FieldKind::prime, static_cast<std::uint32_t>(p));
}

std::string FieldDescriptor::name() const {
  return is_prime() ? "F_" + std::to_string(modulus_) : std::string("Q");
}

Scalar Scalar::from_int(const FieldDescriptor& field, std::int64_t z) {
  if (field.is_prime()) return Scalar(field, reduce(field, z));
  return Scalar(field, mpq_class(mpz_class(static_cast<long>(z))));
}

Scalar Scalar::from_int(const FieldDescriptor& field, const mpz_class& z) {
  if (field.is_prime()) return Scalar(field, reduce(field, z));
  return Scalar(field, mpq_class(z));
}

Scalar Scalar::from_fraction(const FieldDescriptor& field, const mpz_class& num,
                             const mpz_class& den) {
  return from_int(field, num) / from_int(field, den);
}

Scalar Scalar::parse(const FieldDescriptor& field, const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw UsageError("cannot parse scalar '" + text + "'");
  }
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  return from_fraction(field, q.get_num(), q.get_den());
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_prime()) throw UsageError("residue() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_prime()) throw UsageError("rational() on a prime-field scalar");
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw UsageError("mixed-field operands: " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::operator-() const {
  if (field_.is_prime()) {
    const std::uint32_t r = std::get<std::uint32_t>(value_);
    return Scalar(field_, r == 0 ? 0u : field_.modulus() - r);
  }
  return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime()) {
    auto& r = std::get<std::uint32_t>(value_);
    const std::uint64_t sum = static_cast<std::uint64_t>(r) + std::get<std::uint32_t>(rhs.value_);
    r = static_cast<std::uint32_t>(sum % field_.modulus());
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime()) {
    auto& r = std::get<std::uint32_t>(value_);
    const std::uint64_t p = field_.modulus();
    r = static_cast<std::uint32_t>((r + p - std::get<std::uint32_t>(rhs.value_)) % p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_prime()) {
    auto& r = std::get<std::uint32_t>(value_);
    r = mulmod(r, std::get<std::uint32_t>(rhs.value_), field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (field_.is_prime()) {
    // Fermat: a^(p-2) is the inverse of a nonzero residue.
    const std::uint32_t p = field_.modulus();
    return Scalar(field_, powmod(std::get<std::uint32_t>(value_), p - 2, p));
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  q.canonicalize();
  return Scalar(field_, std::move(q));
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (field_.is_prime()) {
    return Scalar(field_, powmod(std::get<std::uint32_t>(value_), e, field_.modulus()));
  }
  Scalar result = one(field_);
  Scalar base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(std::get<std::uint32_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_prime()) {
    return std::get<std::uint32_t>(a.value_) <=> std::get<std::uint32_t>(b.value_);
  }
  const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

std::ostream& operator<<(std::ostream& os, const FieldDescriptor& f) { return os << f.name(); }

}  // namespace lieorbit
