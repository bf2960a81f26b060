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

#include <gtest/gtest.h>

#include <random>

#include "lieorbit/field.hpp"

namespace lieorbit {
namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

Scalar q(long num, long den = 1) { return Scalar::from_fraction(Q, num, den); }

TEST(FieldDescriptor, RejectsCompositeAndHugeModuli) {
  EXPECT_THROW(FieldDescriptor::prime(4), UsageError);
  EXPECT_THROW(FieldDescriptor::prime(1), UsageError);
  EXPECT_THROW(FieldDescriptor::prime(0), UsageError);
  EXPECT_THROW(FieldDescriptor::prime(4294967311ull), UsageError);
  EXPECT_EQ(FieldDescriptor::prime(2147483647).modulus(), 2147483647u);
  EXPECT_EQ(FieldDescriptor::prime(5).name(), "F_5");
  EXPECT_EQ(Q.name(), "Q");
}

TEST(FieldDescriptor, PrimalityAgreesWithSieve) {
  std::vector<bool> composite(1000, false);
  for (int i = 2; i < 1000; ++i) {
    for (int j = 2 * i; j < 1000; j += i) composite[j] = true;
  }
  for (int n = 0; n < 1000; ++n) EXPECT_EQ(is_prime(n), n >= 2 && !composite[n]) << n;
}

TEST(Scalar, Arithmetic) {
  const FieldDescriptor f5 = FieldDescriptor::prime(5);
  EXPECT_EQ(Scalar::from_int(f5, 3) + Scalar::from_int(f5, 4), Scalar::from_int(f5, 2));
  EXPECT_EQ(q(1, 2) * q(2, 3), q(1, 3));
  for (const auto& f : {Q, f5, FieldDescriptor::prime(2)}) {
    const Scalar a = Scalar::from_int(f, 7);
    EXPECT_TRUE((a + (-a)).is_zero());
  }
}

TEST(Scalar, Inverse) {
  const FieldDescriptor f5 = FieldDescriptor::prime(5);
  EXPECT_EQ(Scalar::from_int(f5, 2).inverse(), Scalar::from_int(f5, 3));
  EXPECT_EQ(q(-3, 7).inverse(), q(-7, 3));
  EXPECT_TRUE(Scalar::one(Q).inverse().is_one());
  EXPECT_TRUE(Scalar::one(f5).inverse().is_one());
  EXPECT_THROW(Scalar::zero(Q).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar::zero(f5).inverse(), DivisionByZero);
  EXPECT_THROW(q(1) / q(0), DivisionByZero);
}

TEST(Scalar, FromInt) {
  EXPECT_EQ(Scalar::from_int(FieldDescriptor::prime(3), 7).residue(), 1u);
  EXPECT_EQ(Scalar::from_int(Q, -2).rational(), mpq_class(-2, 1));
  EXPECT_TRUE(Scalar::from_int(FieldDescriptor::prime(2), 2).is_zero());
  EXPECT_EQ(Scalar::from_int(FieldDescriptor::prime(7), -1).residue(), 6u);
}

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(q(2, 4), q(1, 2));
  EXPECT_EQ(q(1, -2), q(-1, 2));
  EXPECT_EQ(q(-1, 2).rational().get_den(), 2);
  EXPECT_EQ(q(6, -4).to_string(), "-3/2");
  EXPECT_EQ(q(4, 2).to_string(), "2");
  EXPECT_EQ(Scalar::parse(Q, "-6/4"), q(-3, 2));
  EXPECT_EQ(Scalar::parse(FieldDescriptor::prime(5), "7"), Scalar::from_int(FieldDescriptor::prime(5), 2));
  EXPECT_THROW(Scalar::parse(Q, "1/0"), DivisionByZero);
  EXPECT_THROW(Scalar::parse(Q, "abc"), UsageError);
}

TEST(Scalar, MixedFieldsAreRejected) {
  const Scalar a = Scalar::one(Q);
  const Scalar b = Scalar::one(FieldDescriptor::prime(3));
  EXPECT_THROW(a + b, UsageError);
  EXPECT_THROW(a * b, UsageError);
  EXPECT_THROW((void)(a == b), UsageError);
  EXPECT_THROW(Scalar::one(FieldDescriptor::prime(5)) - Scalar::one(FieldDescriptor::prime(7)), UsageError);
  EXPECT_THROW(a.residue(), UsageError);
  EXPECT_THROW(b.rational(), UsageError);
}

TEST(Scalar, PowAndFermat) {
  const FieldDescriptor f7 = FieldDescriptor::prime(7);
  for (int a = 1; a < 7; ++a) EXPECT_TRUE(Scalar::from_int(f7, a).pow(6).is_one());
  EXPECT_EQ(q(-2, 3).pow(3), q(-8, 27));
  EXPECT_TRUE(q(5).pow(0).is_one());
}

// Field axioms on random elements of Q and F_p.
TEST(Scalar, FieldLaws) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  for (const auto& f : {Q, FieldDescriptor::prime(2), FieldDescriptor::prime(3), FieldDescriptor::prime(101)}) {
    auto draw = [&] {
      if (f.is_prime()) return Scalar::from_int(f, d(rng));
      long den = d(rng);
      if (den == 0) den = 1;
      return Scalar::from_fraction(f, d(rng), den);
    };
    for (int t = 0; t < 200; ++t) {
      const Scalar a = draw(), b = draw(), c = draw();
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - b, a + (-b));
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ(b / a * a, b);
      }
    }
  }
}

TEST(Scalar, OrderingIsTotal) {
  EXPECT_LT(q(-1), q(1, 2));
  EXPECT_LT(Scalar::from_int(FieldDescriptor::prime(5), 1), Scalar::from_int(FieldDescriptor::prime(5), 4));
}

}  // namespace
}  // namespace lieorbit
