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
#include "oracle.hpp"

namespace lieorbit {
namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

std::vector<Scalar> ints(std::initializer_list<std::int64_t> v, const FieldDescriptor& f = Q) {
  std::vector<Scalar> out;
  for (auto x : v) out.push_back(Scalar::from_int(f, x));
  return out;
}

const Catalog& cat() {
  static const Catalog c = Catalog::standard();
  return c;
}

TEST(Catalog, BaseVectors) {
  const StructureVector eta = cat().base_vector("eta");
  const StructureVector rho = cat().base_vector("rho");
  for (std::size_t r = 1; r <= 27; ++r) {
    const int e = r == 16 ? 1 : r == 22 ? -1 : 0;
    const int p = r == 4 ? 1 : r == 10 ? -1 : 0;
    EXPECT_EQ(eta.coord(r), Scalar::from_int(Q, e)) << r;
    EXPECT_EQ(rho.coord(r), Scalar::from_int(Q, p)) << r;
  }
  EXPECT_TRUE(is_lie(cat().base_vector("zero")));
  EXPECT_THROW(cat().base_vector("sl2"), UsageError);
}

TEST(Catalog, FamilyEvaluation) {
  EXPECT_EQ(cat().family_eval("eta1", ints({0, 0, 1})), cat().base_vector("eta"));
  EXPECT_EQ(cat().family_eval("rho1", ints({1, 0, 0, 1, 0, 0})), cat().base_vector("rho"));
  for (std::int64_t k : {-5, -1, 2, 9}) {
    EXPECT_EQ(cat().family_eval("eta_prime", ints({0, 0, 1, k})), cat().family_eval("eta3", ints({k})));
  }
  EXPECT_THROW(cat().family_eval("eta1", ints({1, 2})), UsageError);
  EXPECT_THROW(cat().family_eval("eta1", ints({1, 2, 3}, FieldDescriptor::prime(5))), UsageError);
  EXPECT_THROW(cat().family("eta4"), UsageError);
}

// Families are written as flat 27-entry lists; check each against the
// bracket it is supposed to encode at a few points.
TEST(Catalog, FamiliesAreAntisymmetricAndLie) {
  const VarTablePtr x = structure_vars(3);
  for (const auto& f : cat().families()) {
    ASSERT_EQ(f.components.size(), 27u) << f.name;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
          const auto& a = f.components[index_of(i, j, k, 3) - 1];
          const auto& b = f.components[index_of(j, i, k, 3) - 1];
          EXPECT_TRUE((a + b).is_zero()) << f.name << " at " << i << j << k;
        }
      }
    }
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 20; ++t) {
      std::vector<Scalar> values;
      oracle::Vec v{};
      for (std::size_t a = 0; a < f.arity(); ++a) values.push_back(Scalar::from_int(Q, d(rng)));
      const StructureVector s = f.at(values);
      for (int r = 0; r < 27; ++r) v[r] = s.coord(r + 1).rational().get_num().get_si();
      EXPECT_TRUE(oracle::is_lie_mod(v, 1000003)) << f.name;
    }
  }
}

TEST(Catalog, Systems) {
  const VarTablePtr x = structure_vars(3);
  const auto has = [&](const std::string& sys, const std::string& poly) {
    const MultiPoly target = parse_poly(x, Q, poly);
    for (const auto& g : cat().system(sys).generators) {
      if (g == target) return true;
    }
    return false;
  };
  EXPECT_TRUE(has("S3", "X121^2 - X123*X231"));
  EXPECT_TRUE(has("T3", "X121*X132 - X122*X131"));
  EXPECT_TRUE(has("Sprime", "X122 + X133"));
  EXPECT_EQ(cat().system("S1").generators.size(), 9u);
  EXPECT_EQ(cat().system("S2").generators.size(), 27u);
  EXPECT_EQ(cat().system("S3").generators.size(), 7u);
  EXPECT_EQ(cat().system("T3").generators.size(), 9u);
  EXPECT_EQ(cat().system("S").generators.size(), 43u);
  EXPECT_EQ(cat().system("T").generators.size(), 45u);
  EXPECT_EQ(cat().system("Sprime").generators.size(), 48u);
  EXPECT_TRUE(cat().system("S").vanishes_at(cat().base_vector("eta")));
  EXPECT_FALSE(cat().system("S").vanishes_at(cat().base_vector("rho")));
  EXPECT_TRUE(cat().system("T").vanishes_at(cat().base_vector("rho")));
  for (const auto& name : Catalog::system_names()) {
    EXPECT_TRUE(cat().system(name).vanishes_at(StructureVector(3, Q))) << name;
  }
  EXPECT_THROW(cat().system("S4"), UsageError);
}

TEST(Catalog, Witnesses) {
  const auto g2 = cat().witness("heisenberg.g2", ints({0, 1}));
  EXPECT_EQ(g2.matrix, SquareMatrix::from_ints(Q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  EXPECT_FALSE(g2.expected_det.has_value());

  const auto r = cat().witness("table.rho2.row2", ints({0, 0, 1, 0}));
  ASSERT_TRUE(r.expected_det.has_value());
  EXPECT_TRUE(r.expected_det->is_one());
  EXPECT_TRUE(r.matrix.det().is_one());

  // alpha, beta, gamma, mu, nu, phi with A1 = mu*alpha - phi*gamma = 13, A2 = nu*alpha - phi*beta = -1.
  const auto values = ints({2, 3, 1, 7, 1, 1});
  const auto row1 = cat().witness("table.rho1.row1", values);
  EXPECT_EQ(*row1.expected_det, Scalar::from_int(Q, 13 * -1));
  EXPECT_EQ(row1.matrix.det(), *row1.expected_det);

  EXPECT_THROW(cat().witness("heisenberg.g2", ints({0, 0})), UsageError);
  EXPECT_THROW(cat().witness("table.rho3.row1", ints({1, 0, 1})), UsageError);
  EXPECT_THROW(cat().witness("table.rho3.closure", ints({0, 0, 0})), UsageError);
  EXPECT_THROW(cat().witness("g4", ints({1})), UsageError);
  EXPECT_EQ(cat().witnesses().size(), 16u);
}

TEST(Catalog, TableShape) {
  const auto& rows = cat().table_rows();
  ASSERT_EQ(rows.size(), 16u);
  std::size_t with_matrix = 0;
  for (const auto& r : rows) {
    with_matrix += r.matrix.has_value();
    if (r.family == "rho1") EXPECT_EQ(r.condition.atoms.front().text, "alpha != 0") << r.id;
    if (!r.matrix) EXPECT_NE(r.id.find("closure"), std::string::npos);
  }
  EXPECT_EQ(with_matrix, 13u);
  for (const auto& r : rows) {
    if (r.id == "table.rho3.closure") EXPECT_EQ(r.condition.to_string(), "kappa == 0, xi == 0");
  }
}

// Over F_5, every predicate-satisfying tuple has nonzero denominators and a
// nonzero determinant equal to the table's formula.
TEST(Catalog, DeterminantsUnderPredicatesOverF5) {
  const FieldDescriptor f5 = FieldDescriptor::prime(5);
  const Catalog c = cat().over(f5);
  for (const auto& w : c.witnesses()) {
    const std::size_t arity = c.family(w.family).arity();
    std::vector<std::uint32_t> digits(arity, 0);
    std::size_t hits = 0;
    for (;;) {
      std::vector<Scalar> values;
      for (auto d : digits) values.push_back(Scalar::from_int(f5, d));
      if (w.condition.holds(values)) {
        ++hits;
        const auto inst = c.witness(w.id, values);
        EXPECT_FALSE(inst.matrix.det().is_zero()) << w.id;
        if (inst.expected_det) EXPECT_EQ(inst.matrix.det(), *inst.expected_det) << w.id;
      }
      std::size_t i = arity;
      while (i > 0 && ++digits[i - 1] == 5) digits[--i] = 0;
      if (i == 0) break;
    }
    EXPECT_GT(hits, 0u) << w.id;
  }
}

TEST(Catalog, Rho1RowsOverlapOnlyWhereBothWitnessesWork) {
  const auto find = [&](const std::string& id) -> const TableRow& {
    for (const auto& r : cat().table_rows()) {
      if (r.id == id) return r;
    }
    throw std::logic_error(id);
  };
  const auto values = ints({2, 0, 0, 3, 0, 5});  // beta = gamma = 0, A1 = 6, A2 = 0
  EXPECT_TRUE(find("table.rho1.row6").condition.holds(values));
  EXPECT_TRUE(find("table.rho1.row7").condition.holds(values));
  for (const char* id : {"table.rho1.row6", "table.rho1.row7"}) {
    const auto inst = cat().witness(id, values);
    EXPECT_EQ(act(cat().base_vector("rho"), inst.matrix), cat().family_eval("rho1", values)) << id;
  }
}

TEST(Catalog, ReductionModP) {
  const Catalog c = cat().over(FieldDescriptor::prime(3));
  EXPECT_EQ(c.field(), FieldDescriptor::prime(3));
  EXPECT_EQ(c.table_rows().size(), 16u);
  EXPECT_EQ(c.system("S").field, FieldDescriptor::prime(3));
  EXPECT_EQ(c.family_eval("eta1", ints({0, 0, 1}, c.field())), c.base_vector("eta"));
}

TEST(Catalog, Mutations) {
  Catalog c = Catalog::standard();
  c.negate_s3_term(0, 0);
  EXPECT_FALSE(c.system("S").vanishes_at(c.family_eval("eta1", ints({1, 1, 1}))));
  EXPECT_NE(c.system("S3").generators[0], cat().system("S3").generators[0]);
  EXPECT_THROW(c.negate_s3_term(0, 9), UsageError);
  EXPECT_THROW(c.negate_s3_term(7, 0), UsageError);

  Catalog d = Catalog::standard();
  d.perturb_table_entry(0, 2);  // row1 entry (1,3) is 0 and becomes 1
  EXPECT_EQ(d.table_rows()[0].matrix->entries[2].numerator.to_string(), "1");
  EXPECT_THROW(d.perturb_table_entry(13, 0), UsageError);
}

}  // namespace
}  // namespace lieorbit
