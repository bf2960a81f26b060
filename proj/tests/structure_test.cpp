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
#include <set>
#include <sstream>

#include "lieorbit/catalog.hpp"
#include "lieorbit/structure.hpp"
#include "oracle.hpp"

namespace lieorbit {
namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

StructureVector from_oracle(const oracle::Vec& v, const FieldDescriptor& f) {
  std::vector<Scalar> c;
  for (auto x : v) c.push_back(Scalar::from_int(f, x));
  return StructureVector(3, std::move(c));
}

SquareMatrix from_oracle(const oracle::Mat& g, const FieldDescriptor& f) {
  return SquareMatrix::from_ints(f, {{g[0][0], g[0][1], g[0][2]}, {g[1][0], g[1][1], g[1][2]}, {g[2][0], g[2][1], g[2][2]}});
}

TEST(Indexing, Examples) {
  EXPECT_EQ(index_of(1, 1, 1, 3), 1u);
  EXPECT_EQ(triple_of(4, 2), (std::array<int, 3>{1, 2, 2}));
  EXPECT_EQ(triple_of(5, 2), (std::array<int, 3>{2, 1, 1}));
  EXPECT_EQ(index_of(2, 3, 1, 3), 16u);
  EXPECT_THROW(index_of(0, 1, 1, 3), UsageError);
  EXPECT_THROW(index_of(1, 4, 1, 3), UsageError);
  EXPECT_THROW(triple_of(28, 3), UsageError);
  EXPECT_THROW(triple_of(0, 3), UsageError);
  for (int n = 1; n <= 4; ++n) {
    for (std::size_t r = 1; r <= static_cast<std::size_t>(n * n * n); ++r) {
      const auto [i, j, k] = triple_of(r, n);
      EXPECT_EQ(index_of(i, j, k, n), r);
    }
  }
  EXPECT_EQ(structure_vars(3)->name(15), "X231");
}

TEST(Jacobi, GeneratorCounts) {
  const PolySystem s2 = jacobi_generators(2, Q);
  EXPECT_EQ(s2.generators.size(), 4u + 8u + 16u);
  const PolySystem s3 = jacobi_generators(3, Q);
  EXPECT_EQ(s3.generators.size(), 9u + 27u + 81u);
  EXPECT_TRUE(s3.vanishes_at(StructureVector(3, Q)));
  EXPECT_TRUE(s2.vanishes_at(StructureVector(2, Q)));
  EXPECT_TRUE(jacobi_generators(4, Q).vanishes_at(StructureVector(4, Q)));
  EXPECT_TRUE(s3.vanishes_at(Catalog::standard().base_vector("eta")));
}

TEST(IsLie, Examples) {
  const Catalog c = Catalog::standard();
  EXPECT_TRUE(is_lie(StructureVector(3, Q)));
  EXPECT_TRUE(is_lie(c.base_vector("eta")));
  EXPECT_TRUE(is_lie(c.base_vector("rho")));
  StructureVector bad(3, Q);
  bad.set(1, 1, 1, Scalar::one(Q));
  EXPECT_FALSE(is_lie(bad));
}

// Agreement with the basis-bracket oracle on random antisymmetric vectors
// over F_3, including non-Lie ones.
TEST(IsLie, MatchesBracketOracle) {
  const FieldDescriptor f3 = FieldDescriptor::prime(3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 2), sparse(0, 4);
  int lie = 0;
  for (int t = 0; t < 400; ++t) {
    oracle::Vec v{};
    for (const auto& [i, j, k] : ReducedVector3::kTriples) {
      const int x = sparse(rng) < 3 ? 0 : d(rng);
      v[oracle::idx(i, j, k)] = x;
      v[oracle::idx(j, i, k)] = -x;
    }
    const bool expected = oracle::is_lie_mod(v, 3);
    lie += expected;
    EXPECT_EQ(is_lie(from_oracle(v, f3)), expected);
  }
  EXPECT_GT(lie, 0);
  EXPECT_LT(lie, 400);
}

TEST(Matrix, DetInverseMinors) {
  const SquareMatrix id = SquareMatrix::identity(3, Q);
  EXPECT_TRUE(id.det().is_one());
  const SquareMatrix m = id.minors();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(m(i, j).is_one(), i == j);
  }
  const Scalar kappa = Scalar::from_int(Q, 7);
  SquareMatrix g3(3, Q);
  g3(0, 2) = kappa.inverse();
  g3(1, 0) = Scalar::one(Q);
  g3(2, 1) = Scalar::one(Q);
  EXPECT_EQ(g3.det(), kappa.inverse());
  EXPECT_EQ(g3 * g3.inverse(), id);

  const Scalar theta = Scalar::from_int(Q, 3);
  SquareMatrix row(3, Q);
  row(0, 0) = -theta / kappa;
  row(0, 2) = Scalar::one(Q);
  row(1, 1) = -kappa;
  row(2, 0) = Scalar::one(Q);
  EXPECT_EQ(row.det(), kappa);

  EXPECT_THROW(SquareMatrix::from_ints(Q, {{1, 2}, {2, 4}}).inverse(), SingularMatrix);
  EXPECT_TRUE(SquareMatrix::from_ints(Q, {{1, 2}, {2, 4}}).det().is_zero());
}

TEST(Matrix, MinorsMatchCofactorOracle) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 100; ++t) {
    oracle::QMat g;
    std::vector<std::vector<std::int64_t>> rows(3, std::vector<std::int64_t>(3));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) g[i][j] = rows[i][j] = d(rng);
    }
    const SquareMatrix m = SquareMatrix::from_ints(Q, rows);
    EXPECT_EQ(m.det().rational(), oracle::det3(g));
    const auto adj = oracle::adjugate(g);
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        const mpq_class sign = (i + j) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(m.minor(i, j).rational(), sign * adj[j - 1][i - 1]);
      }
    }
  }
}

TEST(Act, Examples) {
  const Catalog c = Catalog::standard();
  const StructureVector eta = c.base_vector("eta");
  EXPECT_EQ(act(eta, SquareMatrix::identity(3, Q)), eta);

  const SquareMatrix g3 = SquareMatrix::from_ints(Q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  StructureVector expected(3, Q);
  expected.set(1, 2, 3, Scalar::one(Q));
  expected.set(2, 1, 3, -Scalar::one(Q));
  EXPECT_EQ(act(eta, g3), expected);

  const SquareMatrix row = SquareMatrix::from_ints(Q, {{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});
  const std::vector<Scalar> params{Scalar::zero(Q), Scalar::zero(Q), Scalar::one(Q)};
  EXPECT_EQ(act(c.base_vector("rho"), row), c.family_eval("rho3", params));

  EXPECT_THROW(act(eta, SquareMatrix::from_ints(Q, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}})), SingularMatrix);
  EXPECT_THROW(act(eta, SquareMatrix::identity(2, Q)), UsageError);
  EXPECT_THROW(act(eta, SquareMatrix::identity(3, FieldDescriptor::prime(3))), UsageError);
}

TEST(Act, MatchesQuadrupleSumOracleOverQ) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 60; ++t) {
    oracle::QVec v;
    std::vector<Scalar> coords;
    for (int r = 0; r < 27; ++r) {
      const int x = d(rng);
      v[r] = x;
      coords.push_back(Scalar::from_int(Q, x));
    }
    oracle::QMat g;
    std::vector<std::vector<std::int64_t>> rows(3, std::vector<std::int64_t>(3));
    do {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) g[i][j] = rows[i][j] = d(rng);
      }
    } while (oracle::det3(g) == 0);
    const oracle::QVec want = oracle::act_q(v, g);
    const StructureVector got = act(StructureVector(3, coords), SquareMatrix::from_ints(Q, rows));
    for (int r = 0; r < 27; ++r) EXPECT_EQ(got.coord(r + 1).rational(), want[r]) << r;
  }
}

TEST(Act, MatchesOracleOverF3) {
  const FieldDescriptor f3 = FieldDescriptor::prime(3);
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> d(0, 2);
  for (int t = 0; t < 100; ++t) {
    oracle::Vec v;
    for (auto& x : v) x = d(rng);
    oracle::Mat g;
    do {
      for (auto& row : g) {
        for (auto& x : row) x = d(rng);
      }
    } while (oracle::mod(oracle::det3(g), 3) == 0);
    EXPECT_EQ(act(from_oracle(v, f3), from_oracle(g, f3)), from_oracle(oracle::act_mod(v, g, 3), f3));
  }
}

TEST(Reduced, RoundTrip) {
  const Catalog c = Catalog::standard();
  const StructureVector eta = c.base_vector("eta");
  EXPECT_EQ(reduce3(eta), ReducedVector3::from_ints(Q, {0, 0, 0, 0, 0, 0, 1, 0, 0}));
  EXPECT_EQ(lift3(reduce3(eta)), eta);
  EXPECT_EQ(reduce3(c.base_vector("rho")), ReducedVector3::from_ints(Q, {1, 0, 0, 0, 0, 0, 0, 0, 0}));
  StructureVector bad(3, Q);
  bad.set(1, 2, 1, Scalar::one(Q));
  EXPECT_THROW(reduce3(bad), UsageError);
  bad.set(2, 1, 1, -Scalar::one(Q));
  bad.set(3, 3, 2, Scalar::one(Q));
  EXPECT_THROW(reduce3(bad), UsageError);
}

TEST(GL, CountsMatchOrderFormula) {
  EXPECT_EQ(gl_enumerate(3, 2).size(), 168u);
  EXPECT_EQ(gl_enumerate(3, 3).size(), 11232u);
  EXPECT_EQ(gl_enumerate(2, 2).size(), 6u);
  EXPECT_EQ(gl_order(3, 2), 168u);
  EXPECT_EQ(gl_order(3, 3), 11232u);
  std::uint64_t brute = 0;
  oracle::each_invertible(3, [&](const oracle::Mat&) { ++brute; });
  EXPECT_EQ(brute, 11232u);
  EXPECT_THROW(gl_enumerate(3, 7), BudgetExceeded);
  EXPECT_THROW(gl_enumerate(3, 3, 1000), BudgetExceeded);
}

TEST(GL, EnumeratedMatricesAreDistinctAndInvertible) {
  std::set<std::string> seen;
  for_each_invertible(3, 3, kDefaultBudget, [&](const SquareMatrix& g, const SquareMatrix& gi) {
    EXPECT_FALSE(g.det().is_zero());
    EXPECT_EQ(g * gi, SquareMatrix::identity(3, g.field()));
    seen.insert(g.to_string());
  });
  EXPECT_EQ(seen.size(), 11232u);
}

TEST(Orbit, SizesMatchBruteForceOracle) {
  const Catalog c = Catalog::standard();
  for (std::int64_t p : {2, 3}) {
    const Catalog local = c.over(FieldDescriptor::prime(p));
    const auto eta = orbit(local.base_vector("eta"));
    const auto rho = orbit(local.base_vector("rho"));
    EXPECT_EQ(eta.size(), oracle::orbit_mod(oracle::reduce_mod(oracle::eta(), p), p).size());
    EXPECT_EQ(rho.size(), oracle::orbit_mod(oracle::reduce_mod(oracle::rho(), p), p).size());
    EXPECT_EQ(orbit(local.base_vector("zero")).size(), 1u);
  }
  // Frozen from an independent enumeration.
  EXPECT_EQ(orbit(c.over(FieldDescriptor::prime(2)).base_vector("eta")).size(), 7u);
  EXPECT_EQ(orbit(c.over(FieldDescriptor::prime(2)).base_vector("rho")).size(), 42u);
  EXPECT_EQ(orbit(c.over(FieldDescriptor::prime(3)).base_vector("eta")).size(), 26u);
  EXPECT_EQ(orbit(c.over(FieldDescriptor::prime(3)).base_vector("rho")).size(), 312u);
}

TEST(Orbit, ClosedUnderAction) {
  const Catalog c = Catalog::standard().over(FieldDescriptor::prime(2));
  const auto o = orbit(c.base_vector("rho"));
  const std::set<StructureVector> members(o.begin(), o.end());
  for (const auto& g : gl_enumerate(3, 2)) {
    for (const auto& w : o) EXPECT_TRUE(members.count(act(w, g))) << w.to_string();
  }
  EXPECT_THROW(orbit(Catalog::standard().base_vector("eta")), UsageError);
  EXPECT_THROW(orbit(c.base_vector("eta"), 10), BudgetExceeded);
}

TEST(Csv, ReducedHeader) {
  const Catalog c = Catalog::standard().over(FieldDescriptor::prime(3));
  std::vector<ReducedVector3> v{reduce3(c.base_vector("rho"))};
  v.push_back(reduce3(act(c.base_vector("rho"), SquareMatrix::from_ints(c.field(), {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}))));
  std::ostringstream os;
  write_reduced_csv(os, v);
  EXPECT_EQ(os.str(), "g121,g122,g123,g131,g132,g133,g231,g232,g233\n1,0,0,0,0,0,0,0,0\n2,0,0,0,0,0,0,0,0\n");
}

}  // namespace
}  // namespace lieorbit
