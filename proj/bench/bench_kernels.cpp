/*
 * Copyright 2026 The asymptree Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "asymptree/correspondence.hpp"
#include "asymptree/experiments.hpp"
#include "asymptree/hyperbolic.hpp"
#include "asymptree/rng.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

namespace {

using namespace asymptree;

struct Points {
  std::vector<hyperbolic::PolarPoint> a, b;
};

const Points& points() {
  static const Points p = [] {
    Points out;
    rng::Rng rng(1);
    for (int i = 0; i < 20000; ++i) {
      out.a.emplace_back(rng.uniform(0, 1000), rng.uniform(0, 2 * std::numbers::pi));
      out.b.emplace_back(rng.uniform(0, 1000), rng.uniform(0, 2 * std::numbers::pi));
    }
    return out;
  }();
  return p;
}

const std::vector<double> kScales{25, 50, 100, 200, 400};

void BM_PolarDistanceSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(hyperbolic::serial_polar_distance_batch(points().a, points().b));
}
void BM_PolarDistanceParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(hyperbolic::polar_distance_batch(points().a, points().b));
}

void BM_GridSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(experiments::serial_convergence_grid(kScales));
}
void BM_GridParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(experiments::convergence_grid(kScales));
}

void BM_VerifySerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(experiments::serial_verify_metric(42, 200));
}
void BM_VerifyParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(experiments::verify_metric(42, 200));
}

void BM_SubconeSerial(benchmark::State& s) {
  const auto config = experiments::demo_configuration();
  for (auto _ : s) benchmark::DoNotOptimize(correspondence::serial_subcone_witness(config, kScales));
}
void BM_SubconeParallel(benchmark::State& s) {
  const auto config = experiments::demo_configuration();
  for (auto _ : s) benchmark::DoNotOptimize(correspondence::subcone_witness(config, kScales));
}

BENCHMARK(BM_PolarDistanceSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PolarDistanceParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SubconeSerial)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_SubconeParallel)->Unit(benchmark::kMicrosecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
