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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "lieorbit/catalog.hpp"
#include "lieorbit/field.hpp"
#include "lieorbit/structure.hpp"
#include "lieorbit/verify.hpp"

namespace {

using lieorbit::Catalog;
using lieorbit::FieldDescriptor;
using lieorbit::SquareMatrix;

void BM_ActRational(benchmark::State& state) {
  const Catalog catalog = Catalog::standard();
  const auto rho = catalog.base_vector("rho");
  const auto g = SquareMatrix::from_ints(rho.field(), {{2, 1, 0}, {-3, 1, 5}, {1, 0, 7}});
  for (auto _ : state) benchmark::DoNotOptimize(lieorbit::act(rho, g));
}
BENCHMARK(BM_ActRational);

void BM_ActFp(benchmark::State& state) {
  const auto field = FieldDescriptor::prime(5);
  const Catalog catalog = Catalog::standard().over(field);
  const auto rho = catalog.base_vector("rho");
  const auto g = SquareMatrix::from_ints(field, {{2, 1, 0}, {-3, 1, 4}, {1, 0, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(lieorbit::act(rho, g));
}
BENCHMARK(BM_ActFp);

void BM_Orbit(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const Catalog catalog = Catalog::standard().over(FieldDescriptor::prime(p));
  const auto rho = catalog.base_vector("rho");
  for (auto _ : state) benchmark::DoNotOptimize(lieorbit::orbit(rho));
}
BENCHMARK(BM_Orbit)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EnumerateT(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto sys = Catalog::standard().system("T").over(FieldDescriptor::prime(p));
  for (auto _ : state) benchmark::DoNotOptimize(lieorbit::enumerate_variety(sys, p));
}
BENCHMARK(BM_EnumerateT)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
