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

#include "lieorbit/catalog.hpp"
#include "lieorbit/poly.hpp"
#include "lieorbit/structure.hpp"

namespace lieorbit {
namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

VarTablePtr xy() { return VarTable::make({"X", "Y"}); }

TEST(MultiPoly, BuildCancelsAndNormalizes) {
  const VarTablePtr x = structure_vars(3);
  Exponents e(27, 0);
  e[index_of(1, 2, 1, 3) - 1] = 1;
  const std::vector<MultiPoly::Term> cancel{{e, Scalar::one(Q)}, {e, Scalar::from_int(Q, -1)}};
  EXPECT_TRUE(MultiPoly::build(x, Q, cancel).is_zero());
  EXPECT_TRUE(MultiPoly::build(x, Q, {}).is_zero());

  Exponents e2(27, 0);
  e2[index_of(2, 3, 3, 3) - 1] = 1;
  const std::vector<MultiPoly::Term> two{{e, Scalar::one(Q)}, {e2, Scalar::from_int(Q, -1)}};
  const MultiPoly f = MultiPoly::build(x, Q, two);
  EXPECT_EQ(f.term_count(), 2u);
  EXPECT_EQ(f, parse_poly(x, Q, "X121 - X233"));
  EXPECT_EQ(f.to_string(), "X121 - X233");
}

TEST(MultiPoly, BuildRejectsWrongArity) {
  const std::vector<MultiPoly::Term> bad{{Exponents{1}, Scalar::one(Q)}};
  EXPECT_THROW(MultiPoly::build(xy(), Q, bad), UsageError);
}

TEST(MultiPoly, Arithmetic) {
  const VarTablePtr v = xy();
  const MultiPoly X = MultiPoly::variable(v, Q, "X");
  const MultiPoly Y = MultiPoly::variable(v, Q, "Y");
  EXPECT_EQ((X + Y) * (X - Y), X * X - Y * Y);
  EXPECT_TRUE((X * MultiPoly(v, Q)).is_zero());
  const FieldDescriptor f2 = FieldDescriptor::prime(2);
  const MultiPoly X2 = MultiPoly::variable(v, f2, "X");
  const MultiPoly Y2 = MultiPoly::variable(v, f2, "Y");
  EXPECT_EQ((X2 + Y2).pow(2), X2 * X2 + Y2 * Y2);
}

TEST(MultiPoly, TableMismatchIsAnError) {
  const MultiPoly X = MultiPoly::variable(xy(), Q, "X");
  const MultiPoly Z = MultiPoly::variable(VarTable::make({"Z"}), Q, "Z");
  EXPECT_THROW(X + Z, UsageError);
  EXPECT_THROW(X * Z, UsageError);
  EXPECT_THROW(X + MultiPoly::variable(xy(), FieldDescriptor::prime(3), "X"), UsageError);
}

TEST(MultiPoly, IsZeroIsCoefficientLevel) {
  const VarTablePtr v = xy();
  const MultiPoly X = MultiPoly::variable(v, Q, "X");
  const MultiPoly Y = MultiPoly::variable(v, Q, "Y");
  EXPECT_TRUE(((X + Y).pow(2) - X * X - X * Y * Scalar::from_int(Q, 2) - Y * Y).is_zero());
  const FieldDescriptor f2 = FieldDescriptor::prime(2);
  const MultiPoly X2 = MultiPoly::variable(v, f2, "X");
  const MultiPoly g = X2 * X2 + X2;
  EXPECT_FALSE(g.is_zero());
  for (int a = 0; a < 2; ++a) {
    const std::vector<Scalar> pt{Scalar::from_int(f2, a), Scalar::zero(f2)};
    EXPECT_TRUE(g.evaluate(pt).is_zero());
  }
}

TEST(MultiPoly, EvaluateAtBaseVectors) {
  const Catalog c = Catalog::standard();
  const VarTablePtr x = structure_vars(3);
  const MultiPoly f = parse_poly(x, Q, "X121 - X233");
  EXPECT_TRUE(f.evaluate(c.base_vector("eta").coords()).is_zero());
  EXPECT_EQ(f.evaluate(c.base_vector("rho").coords()), Scalar::one(Q));
  EXPECT_EQ(MultiPoly::constant(x, Q, 5).evaluate(c.base_vector("rho").coords()), Scalar::from_int(Q, 5));
}

TEST(MultiPoly, AssignmentMustBeTotal) {
  const VarTablePtr v = xy();
  const MultiPoly f = parse_poly(v, Q, "X*Y + 1");
  Assignment a(v, Q);
  a.set("X", Scalar::from_int(Q, 2));
  EXPECT_FALSE(a.is_total());
  EXPECT_THROW(f.evaluate(a), UsageError);
  a.set("Y", Scalar::from_int(Q, 3));
  EXPECT_EQ(f.evaluate(a), Scalar::from_int(Q, 7));
  EXPECT_THROW(Assignment::from_map(v, Q, {{"X", Scalar::one(Q)}}), UsageError);
}

TEST(MultiPoly, EtaPrimeAtOneIsEta1) {
  const Catalog c = Catalog::standard();
  const VarTablePtr p = VarTable::make({"mu", "nu", "lambda"});
  const std::vector<MultiPoly> args{MultiPoly::constant(p, Q, 1), MultiPoly::variable(p, Q, "mu"),
                                    MultiPoly::variable(p, Q, "nu"), MultiPoly::variable(p, Q, "lambda")};
  const auto lhs = c.family("eta_prime").instantiate(args);
  const auto rhs = c.family("eta1").instantiate(std::span(args).subspan(1));
  for (std::size_t r = 0; r < 27; ++r) EXPECT_TRUE((lhs[r] - rhs[r]).is_zero()) << r;
}

TEST(MultiPoly, DegreesAndCoefficients) {
  const VarTablePtr v = xy();
  const MultiPoly f = parse_poly(v, Q, "3*X^2*Y - Y^3 + 2");
  EXPECT_EQ(f.total_degree(), 3u);
  EXPECT_EQ(f.degree_in(0), 2u);
  EXPECT_EQ(f.degree_in(1), 3u);
  EXPECT_EQ(f.coefficient({2, 1}), Scalar::from_int(Q, 3));
  EXPECT_TRUE(f.coefficient({1, 1}).is_zero());
}

TEST(MultiPoly, ParserErrors) {
  const VarTablePtr v = xy();
  EXPECT_THROW(parse_poly(v, Q, "X +"), UsageError);
  EXPECT_THROW(parse_poly(v, Q, "W"), UsageError);
  EXPECT_THROW(parse_poly(v, Q, "(X"), UsageError);
  EXPECT_EQ(parse_poly(v, Q, "-(X - Y)^2"), parse_poly(v, Q, "-X^2 + 2*X*Y - Y^2"));
}

TEST(MultiPoly, ReductionModP) {
  const VarTablePtr v = xy();
  const MultiPoly f = parse_poly(v, Q, "3*X + 2*Y");
  const MultiPoly g = f.over(FieldDescriptor::prime(3));
  EXPECT_EQ(g, parse_poly(v, FieldDescriptor::prime(3), "2*Y"));
  EXPECT_THROW(g.over(Q), UsageError);
}

// Ring laws and evaluation homomorphism on random polynomials.
TEST(MultiPoly, RandomRingLaws) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2), nterms(0, 4);
  const VarTablePtr v = VarTable::make({"a", "b", "c"});
  for (const auto& f : {Q, FieldDescriptor::prime(5)}) {
    auto draw = [&] {
      std::vector<MultiPoly::Term> terms;
      for (int t = nterms(rng); t > 0; --t) {
        terms.push_back({Exponents{static_cast<std::uint32_t>(expo(rng)), static_cast<std::uint32_t>(expo(rng)),
                                   static_cast<std::uint32_t>(expo(rng))},
                         Scalar::from_int(f, coeff(rng))});
      }
      return MultiPoly::build(v, f, terms);
    };
    for (int t = 0; t < 100; ++t) {
      const MultiPoly a = draw(), b = draw(), c = draw();
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a - a), MultiPoly(v, f));
      std::vector<Scalar> pt{Scalar::from_int(f, coeff(rng)), Scalar::from_int(f, coeff(rng)),
                             Scalar::from_int(f, coeff(rng))};
      EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
      EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
      for (const auto& [e, s] : a.terms()) EXPECT_FALSE(s.is_zero());
    }
  }
}

TEST(CompiledPoly, MatchesGenericEvaluation) {
  const FieldDescriptor f7 = FieldDescriptor::prime(7);
  const VarTablePtr v = xy();
  const MultiPoly f = parse_poly(v, f7, "3*X^2*Y - Y^3 + 2");
  const CompiledPoly cf(f);
  for (std::uint32_t a = 0; a < 7; ++a) {
    for (std::uint32_t b = 0; b < 7; ++b) {
      const std::vector<std::uint32_t> r{a, b};
      const std::vector<Scalar> s{Scalar::from_int(f7, a), Scalar::from_int(f7, b)};
      EXPECT_EQ(cf.evaluate(r), f.evaluate(s).residue());
    }
  }
}

}  // namespace
}  // namespace lieorbit
