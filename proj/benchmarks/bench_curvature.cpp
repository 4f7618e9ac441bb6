// Copyright 2026 The warpcurv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <random>

#include <benchmark/benchmark.h>

#include "warpcurv/models.hpp"
#include "warpcurv/null_sectional.hpp"
#include "warpcurv/oracle.hpp"
#include "warpcurv/warped.hpp"

using namespace warpcurv;

namespace {

const CatalogEntry& model(std::int64_t i) { return catalog().at(static_cast<std::size_t>(i)); }

Point point_of(const CatalogEntry& e) {
  std::mt19937_64 rng(1);
  return e.sample_point(rng);
}

void BM_RiemannOracle(benchmark::State& state) {
  const CatalogEntry& e = model(state.range(0));
  const CoordinateChart chart = assemble_chart(e.spec);
  const auto x = flatten(point_of(e));
  for (auto _ : state) benchmark::DoNotOptimize(riemann_oracle(chart, x));
  state.SetLabel(e.name);
}

void BM_WarpedGeometry(benchmark::State& state) {
  const CatalogEntry& e = model(state.range(0));
  const Point p = point_of(e);
  for (auto _ : state) benchmark::DoNotOptimize(WarpedGeometry(e.spec, p));
  state.SetLabel(e.name);
}

void BM_SpecializedNull(benchmark::State& state) {
  const CatalogEntry& e = model(state.range(0));
  const NullPlane plane = sample_plane(e.spec, point_of(e), 7);
  for (auto _ : state) benchmark::DoNotOptimize(specialized_null_curvature(e.spec, plane));
  state.SetLabel(e.name);
}

void BM_GenericNull(benchmark::State& state) {
  const CatalogEntry& e = model(state.range(0));
  const NullPlane plane = sample_plane(e.spec, point_of(e), 7);
  for (auto _ : state) benchmark::DoNotOptimize(null_curvature_generic(e.spec, plane));
  state.SetLabel(e.name);
}

void BM_OracleNull(benchmark::State& state) {
  const CatalogEntry& e = model(state.range(0));
  const NullPlane plane = sample_plane(e.spec, point_of(e), 7);
  const CoordinateChart chart = assemble_chart(e.spec);
  const auto x = flatten(plane.point), L = flatten(plane.L), S = flatten(plane.S);
  for (auto _ : state) benchmark::DoNotOptimize(null_sectional_oracle(chart, x, L, S));
  state.SetLabel(e.name);
}

void BM_SamplePlane(benchmark::State& state) {
  const CatalogEntry& e = model(state.range(0));
  const Point p = point_of(e);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_plane(e.spec, p, seed++));
  state.SetLabel(e.name);
}

void models(benchmark::internal::Benchmark* b) {
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(catalog().size()); ++i) b->Arg(i);
}

}  // namespace

BENCHMARK(BM_RiemannOracle)->Apply(models);
BENCHMARK(BM_WarpedGeometry)->Apply(models);
BENCHMARK(BM_SpecializedNull)->Apply(models);
BENCHMARK(BM_GenericNull)->Apply(models);
BENCHMARK(BM_OracleNull)->Apply(models);
BENCHMARK(BM_SamplePlane)->Apply(models);

BENCHMARK_MAIN();
