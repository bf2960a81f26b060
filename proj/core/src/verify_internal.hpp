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

// Helpers shared by the suite implementations. Not installed.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lieorbit/catalog.hpp"
#include "lieorbit/verify.hpp"

namespace lieorbit::detail {

/// Integer-valued rational samples in [lo, hi], biased towards 0 and +-1 so
/// that degenerate parameter loci are hit often.
class ParamSampler {
 public:
  ParamSampler(std::uint64_t seed, std::int64_t lo, std::int64_t hi);

  Scalar draw_scalar();
  std::vector<Scalar> draw(std::size_t arity);
  /// Draws until `pred` holds. Unsatisfied equality atoms that are linear in
  /// some parameter are solved for it before testing, which keeps
  /// acceptance rates sane on thin loci; acceptance is still decided by the
  /// predicate alone. nullopt after `limit` consecutive rejections.
  std::optional<std::vector<Scalar>> sample(const Predicate& pred, std::size_t arity, std::size_t limit);
  /// Random invertible 3x3 (or n x n) matrix with entries drawn as above.
  SquareMatrix invertible_matrix(int n);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  void solve_equalities(const Predicate& pred, std::vector<Scalar>& values);

  std::mt19937_64 rng_;
  std::int64_t lo_;
  std::int64_t hi_;
};

/// Calls visit on every tuple in F_p^arity, lexicographically.
void for_each_tuple(std::uint32_t p, std::size_t arity, std::uint64_t budget,
                    const std::function<void(std::span<const Scalar>)>& visit);

std::string format_params(const VarTable& params, std::span<const Scalar> values);
/// First differing coordinate, as "X123: got 1, expected 0".
std::string first_difference(const StructureVector& got, const StructureVector& expected);
std::string format_reduced(const ReducedVector3& v);

/// Deterministic per-claim seed derived from the suite seed and claim id.
std::uint64_t claim_seed(std::uint64_t seed, const std::string& claim_id);

}  // namespace lieorbit::detail
